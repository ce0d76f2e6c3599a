// Copyright 2026 The hhd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hhd/mock_backend.h"

#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "hhd/errors.h"
#include "hhd/text.h"
#include "hhd/wire.h"

namespace hhd {
namespace {

struct SplitInput {
  std::string headline;
  std::string article;
  std::optional<Label> explain_label;
};

// Undoes the rendering of any of the three component inputs. Inputs that do
// not follow the template are treated as a bare headline.
SplitInput SplitRenderedInput(const std::string& input,
                              const TemplateConfig& cfg) {
  SplitInput out;
  std::string_view rest = input;
  if (rest.substr(0, cfg.headline_prefix.size()) != cfg.headline_prefix) {
    out.headline = input;
    return out;
  }
  rest.remove_prefix(cfg.headline_prefix.size());
  size_t at = rest.find(cfg.article_prefix);
  if (at == std::string_view::npos) {
    out.headline = std::string(rest);
    return out;
  }
  out.headline = std::string(rest.substr(0, at));
  rest.remove_prefix(at + cfg.article_prefix.size());

  if (size_t c = rest.rfind(cfg.comment_prefix); c != std::string_view::npos) {
    rest = rest.substr(0, c);
  } else {
    std::string_view open = TrimRight(cfg.because_delimiter);
    for (Label label : kAllLabels) {
      std::string suffix =
          cfg.explainer_class_separator + cfg.class_tokens[label] + std::string(open);
      if (rest.size() >= suffix.size() &&
          rest.substr(rest.size() - suffix.size()) == suffix) {
        rest.remove_suffix(suffix.size());
        out.explain_label = label;
        break;
      }
    }
  }
  out.article = std::string(rest);
  return out;
}

std::vector<std::string> MissingWords(const std::vector<std::string>& headline,
                                      const std::vector<std::string>& article) {
  std::set<std::string> vocab(article.begin(), article.end());
  std::vector<std::string> missing;
  std::set<std::string> seen;
  for (const auto& w : headline) {
    if (!vocab.count(w) && seen.insert(w).second) missing.push_back(w);
  }
  return missing;
}

std::string JoinWords(const std::vector<std::string>& words, size_t limit) {
  std::string out;
  for (size_t i = 0; i < words.size() && i < limit; ++i) {
    if (i) out += ", ";
    out += words[i];
  }
  return out;
}

uint64_t MixSeed(const std::string& input, std::optional<int64_t> seed) {
  uint64_t s = static_cast<uint64_t>(seed.value_or(0));
  return Fnv1a64(input) ^ (s * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL);
}

constexpr const char* kContradictPhrases[] = {
    "the headline mentions {} which the article does not support",
    "{} is not supported by the article",
    "the article says nothing about {}",
    "{} is missing from the article",
    "the headline adds {} on top of the article",
};

constexpr const char* kEntailPhrases[] = {
    "the article states {}",
    "{} appears in the article",
    "the article supports {}",
    "the headline restates {} from the article",
};

std::string Fill(std::string_view phrase, const std::string& word) {
  std::string out(phrase);
  size_t at = out.find("{}");
  out.replace(at, 2, word);
  return out;
}

}  // namespace

void MockBackendSpec::Validate() const {
  if (!(heuristic_temperature > 0.0) || !std::isfinite(heuristic_temperature)) {
    throw Error(ErrorKind::kInvalidArgument,
                "heuristic_temperature must be positive");
  }
  templates.Validate();
  for (const auto& [input, result] : scripted_responses) {
    GenerationRequest any;
    any.mode = GenerationMode::kExplain;
    any.num_outputs = static_cast<int>(std::max<size_t>(1, result.outputs.size()));
    try {
      result.CheckAgainst(any);
    } catch (const Error& e) {
      throw Error(ErrorKind::kInvalidArgument,
                  std::string("scripted response invalid: ") + e.what());
    }
  }
}

MockBackendSpec LoadMockFixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIoError, "cannot open fixture " + path);
  wire::Json doc;
  try {
    doc = wire::Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path, 0, e.what());
  }
  MockBackendSpec spec;
  try {
    std::string fallback = doc.value("fallback", std::string("heuristic"));
    if (fallback == "heuristic") {
      spec.fallback = MockFallback::kHeuristicOverlap;
    } else if (fallback == "error") {
      spec.fallback = MockFallback::kError;
    } else {
      throw ParseError(path, 0, "unknown fallback '" + fallback + "'");
    }
    spec.heuristic_temperature = doc.value("heuristic_temperature", 0.25);
    spec.max_input_chars = doc.value("max_input_chars", size_t{0});
    for (const auto& entry : doc.value("responses", wire::Json::array())) {
      spec.scripted_responses[entry.at("input").get<std::string>()] =
          wire::ResultFromJson(entry.at("response"));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path, 0, e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParseError) throw;
    throw ParseError(path, 0, e.what());
  }
  spec.Validate();
  return spec;
}

MockBackend::MockBackend(MockBackendSpec spec) : spec_(std::move(spec)) {
  spec_.Validate();
}

GenerationResult MockBackend::Generate(const GenerationRequest& request) {
  request.Validate();
  if (spec_.max_input_chars > 0 && request.input.size() > spec_.max_input_chars) {
    throw Error(ErrorKind::kInputTooLong,
                "input of " + std::to_string(request.input.size()) +
                    " bytes exceeds " + std::to_string(spec_.max_input_chars));
  }
  if (auto it = spec_.scripted_responses.find(request.input);
      it != spec_.scripted_responses.end()) {
    GenerationResult result = it->second;
    if (result.outputs.size() > static_cast<size_t>(request.num_outputs)) {
      result.outputs.resize(request.num_outputs);
    }
    return result;
  }
  if (spec_.fallback == MockFallback::kError) {
    throw Error(ErrorKind::kMalformedResponse, "no scripted response for input");
  }
  return Heuristic(request);
}

double MockBackend::OverlapScore(const std::string& input) const {
  SplitInput parts = SplitRenderedInput(input, spec_.templates);
  auto headline = NormalizedTokens(parts.headline);
  if (headline.empty()) return 0.0;
  std::unordered_map<std::string, int> available;
  for (auto& w : NormalizedTokens(parts.article)) ++available[w];
  size_t hits = 0;
  for (const auto& w : headline) {
    auto it = available.find(w);
    if (it != available.end() && it->second > 0) {
      --it->second;
      ++hits;
    }
  }
  return static_cast<double>(hits) / static_cast<double>(headline.size());
}

GenerationResult MockBackend::Heuristic(const GenerationRequest& request) const {
  const TemplateConfig& cfg = spec_.templates;
  SplitInput parts = SplitRenderedInput(request.input, cfg);
  const double overlap = OverlapScore(request.input);
  const double z = (2.0 * overlap - 1.0) / spec_.heuristic_temperature;
  // log sigmoid(z) and log sigmoid(-z) without overflow.
  auto log_sigmoid = [](double x) {
    return x >= 0 ? -std::log1p(std::exp(-x)) : x - std::log1p(std::exp(x));
  };
  ClassLogprobs lp{log_sigmoid(z), log_sigmoid(-z)};
  const Label best =
      DecideLabel(std::exp(lp.contradict), 0.5);

  auto headline_words = NormalizedTokens(parts.headline);
  auto missing = MissingWords(headline_words, NormalizedTokens(parts.article));

  GenerationResult result;
  switch (request.mode) {
    case GenerationMode::kClassify:
      result.outputs.push_back({cfg.class_tokens[best], lp[best]});
      result.class_logprobs = lp;
      break;
    case GenerationMode::kClassifyAndExplain: {
      std::string why;
      if (best == Label::kContradict) {
        why = missing.empty() ? "the headline is not supported by the article"
                              : "unsupported words: " + JoinWords(missing, 5);
      } else {
        why = missing.empty() ? "all headline words appear in the article"
                              : "most headline words appear in the article";
      }
      Explanation e{why};
      double seq_lp = lp[best] - 0.05 * NormalizedTokens(why).size();
      result.outputs.push_back({RenderReasoningTarget(best, e, cfg), seq_lp});
      result.class_logprobs = lp;
      break;
    }
    case GenerationMode::kExplain: {
      const Label target = parts.explain_label.value_or(best);
      std::vector<std::string> words =
          target == Label::kContradict ? missing : headline_words;
      if (words.empty()) words = headline_words;
      if (words.empty()) words = {"the claim"};
      std::vector<std::string> candidates;
      std::set<std::string> seen;
      auto add_phrases = [&](auto& phrases) {
        for (const auto& w : words) {
          for (const char* p : phrases) {
            std::string text = Fill(p, w);
            if (seen.insert(text).second) candidates.push_back(std::move(text));
          }
        }
      };
      if (target == Label::kContradict) {
        add_phrases(kContradictPhrases);
      } else {
        add_phrases(kEntailPhrases);
      }
      // Fisher-Yates over mt19937_64's raw stream: identical on every
      // standard library, unlike std::shuffle.
      std::mt19937_64 rng(MixSeed(request.input, request.seed));
      for (size_t i = candidates.size(); i > 1; --i) {
        std::swap(candidates[i - 1], candidates[rng() % i]);
      }
      for (int i = 0; i < request.num_outputs; ++i) {
        std::string text =
            i < static_cast<int>(candidates.size())
                ? candidates[i]
                : candidates[i % candidates.size()] + " (" + std::to_string(i) + ")";
        result.outputs.push_back({std::move(text), -1.0 - 0.5 * i});
      }
      break;
    }
  }
  return result;
}

}  // namespace hhd
