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

#include "hhd/config.h"

#include <fstream>
#include <set>

#include "hhd/errors.h"

namespace hhd {
namespace {

using Json = wire::Json;

[[noreturn]] void Bad(const std::string& what) {
  throw Error(ErrorKind::kInvalidArgument, "config: " + what);
}

void CheckKeys(const Json& obj, const char* section,
               std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) Bad(std::string(section) + " must be an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : obj.items()) {
    if (!ok.count(key)) Bad("unknown key " + std::string(section) + "." + key);
  }
}

template <typename T>
void Take(const Json& obj, const char* key, T& into) {
  auto it = obj.find(key);
  if (it == obj.end()) return;
  try {
    into = it->get<T>();
  } catch (const nlohmann::json::exception&) {
    Bad(std::string("key '") + key + "' has the wrong type");
  }
}

}  // namespace

void CliConfig::Validate() const {
  if (concurrency_limit < 1) Bad("concurrency must be >= 1");
  if (max_attempts < 1) Bad("max_attempts must be >= 1");
  if (!(mock_temperature > 0)) Bad("mock_temperature must be positive");
  templates.Validate();
  pipeline.Validate();
  augmentation.Validate();
}

void ApplyConfigJson(const Json& doc, CliConfig& cfg) {
  // "metadata" is written by ConfigToJson and ignored on load.
  CheckKeys(doc, "<root>",
            {"backend", "template", "pipeline", "augmentation", "metadata"});
  if (auto it = doc.find("backend"); it != doc.end()) {
    const Json& b = *it;
    CheckKeys(b, "backend", {"url", "concurrency", "max_attempts", "mock",
                             "mock_fixture", "mock_temperature"});
    Take(b, "url", cfg.backend_url);
    Take(b, "concurrency", cfg.concurrency_limit);
    Take(b, "max_attempts", cfg.max_attempts);
    Take(b, "mock", cfg.use_mock);
    if (auto f = b.find("mock_fixture"); f != b.end()) {
      if (f->is_null()) {
        cfg.mock_fixture.reset();
      } else {
        std::string path;
        Take(b, "mock_fixture", path);
        cfg.mock_fixture = path;
      }
    }
    Take(b, "mock_temperature", cfg.mock_temperature);
  }
  if (auto it = doc.find("template"); it != doc.end()) {
    const Json& t = *it;
    CheckKeys(t, "template",
              {"entail_token", "contradict_token", "because_delimiter",
               "headline_prefix", "article_prefix", "comment_prefix",
               "explainer_class_separator", "default_layout"});
    Take(t, "entail_token", cfg.templates.class_tokens.entail);
    Take(t, "contradict_token", cfg.templates.class_tokens.contradict);
    Take(t, "because_delimiter", cfg.templates.because_delimiter);
    Take(t, "headline_prefix", cfg.templates.headline_prefix);
    Take(t, "article_prefix", cfg.templates.article_prefix);
    Take(t, "comment_prefix", cfg.templates.comment_prefix);
    Take(t, "explainer_class_separator", cfg.templates.explainer_class_separator);
    if (t.contains("default_layout")) {
      std::string layout;
      Take(t, "default_layout", layout);
      if (layout == "title_passage") {
        cfg.templates.default_layout = ArticleLayout::kTitlePassage;
      } else if (layout == "concatenate") {
        cfg.templates.default_layout = ArticleLayout::kConcatenate;
      } else {
        Bad("unknown default_layout '" + layout + "'");
      }
    }
  }
  if (auto it = doc.find("pipeline"); it != doc.end()) {
    const Json& p = *it;
    CheckKeys(p, "pipeline", {"mode", "threshold", "normalization", "seed",
                              "max_output_tokens"});
    if (p.contains("mode")) {
      std::string mode;
      Take(p, "mode", mode);
      auto parsed = ParsePipelineModeName(mode);
      if (!parsed) Bad("unknown mode '" + mode + "'");
      cfg.pipeline.mode = *parsed;
    }
    Take(p, "threshold", cfg.pipeline.threshold);
    if (p.contains("normalization")) {
      std::string n;
      Take(p, "normalization", n);
      auto parsed = ParseNormalizationName(n);
      if (!parsed) Bad("unknown normalization '" + n + "'");
      cfg.pipeline.normalization = *parsed;
    }
    if (auto s = p.find("seed"); s != p.end()) {
      if (s->is_null()) {
        cfg.pipeline.seed.reset();
      } else {
        int64_t seed = 0;
        Take(p, "seed", seed);
        cfg.pipeline.seed = seed;
      }
    }
    Take(p, "max_output_tokens", cfg.pipeline.max_output_tokens);
  }
  if (auto it = doc.find("augmentation"); it != doc.end()) {
    const Json& a = *it;
    CheckKeys(a, "augmentation", {"k", "dedupe", "seed"});
    Take(a, "k", cfg.augmentation.k);
    Take(a, "dedupe", cfg.augmentation.dedupe);
    Take(a, "seed", cfg.augmentation.seed);
  }
}

CliConfig LoadConfigFile(const std::string& path, CliConfig base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIoError, "cannot open config " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path, 0, e.what());
  }
  ApplyConfigJson(doc, base);
  return base;
}

Json ConfigToJson(const CliConfig& cfg) {
  Json doc;
  doc["backend"]["url"] = cfg.backend_url;
  doc["backend"]["concurrency"] = cfg.concurrency_limit;
  doc["backend"]["max_attempts"] = cfg.max_attempts;
  doc["backend"]["mock"] = cfg.use_mock;
  doc["backend"]["mock_fixture"] =
      cfg.mock_fixture ? Json(*cfg.mock_fixture) : Json(nullptr);
  doc["backend"]["mock_temperature"] = cfg.mock_temperature;
  const auto& t = cfg.templates;
  doc["template"]["entail_token"] = t.class_tokens.entail;
  doc["template"]["contradict_token"] = t.class_tokens.contradict;
  doc["template"]["because_delimiter"] = t.because_delimiter;
  doc["template"]["headline_prefix"] = t.headline_prefix;
  doc["template"]["article_prefix"] = t.article_prefix;
  doc["template"]["comment_prefix"] = t.comment_prefix;
  doc["template"]["explainer_class_separator"] = t.explainer_class_separator;
  doc["template"]["default_layout"] =
      t.default_layout == ArticleLayout::kTitlePassage ? "title_passage"
                                                       : "concatenate";
  const auto& p = cfg.pipeline;
  doc["pipeline"]["mode"] = PipelineModeName(p.mode);
  doc["pipeline"]["threshold"] = p.threshold;
  doc["pipeline"]["normalization"] = NormalizationName(p.normalization);
  doc["pipeline"]["seed"] = p.seed ? Json(*p.seed) : Json(nullptr);
  doc["pipeline"]["max_output_tokens"] = p.max_output_tokens;
  doc["augmentation"]["k"] = cfg.augmentation.k;
  doc["augmentation"]["dedupe"] = cfg.augmentation.dedupe;
  doc["augmentation"]["seed"] = cfg.augmentation.seed;
  // The reasoning score is read from the first decoding step of the
  // classify_and_explain call, not from a separate classify call.
  doc["metadata"]["reasoning_prob_source"] = "classify_and_explain.first_step";
  return doc;
}

}  // namespace hhd
