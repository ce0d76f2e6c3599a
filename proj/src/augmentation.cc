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

#include "hhd/augmentation.h"

#include <cctype>
#include <ostream>

#include "hhd/parallel.h"
#include "hhd/wire.h"

namespace hhd {

std::optional<NliLabel> ParseNliLabel(std::string_view text) {
  std::string lower(Trim(text));
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "entailment" || lower == "e") return NliLabel::kEntailment;
  if (lower == "neutral" || lower == "n") return NliLabel::kNeutral;
  if (lower == "contradiction" || lower == "c") return NliLabel::kContradiction;
  return std::nullopt;
}

LabeledExample AdaptNliExample(std::string id, std::string_view premise,
                               std::string_view hypothesis, NliLabel label,
                               std::span<const std::string> explanations,
                               NeutralPolicy neutral) {
  if (Trim(premise).empty() || Trim(hypothesis).empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                "NLI example '" + id + "' has an empty premise or hypothesis");
  }
  LabeledExample ex;
  ex.id = std::move(id);
  ex.article.body = std::string(premise);
  ex.article.layout = ArticleLayout::kConcatenate;
  ex.headline.text = std::string(hypothesis);
  ex.origin = ExampleOrigin::kNliAdapted;
  switch (label) {
    case NliLabel::kEntailment:
      ex.label = Label::kEntail;
      break;
    case NliLabel::kContradiction:
      ex.label = Label::kContradict;
      break;
    case NliLabel::kNeutral:
      if (neutral == NeutralPolicy::kReject) {
        throw Error(ErrorKind::kUnsupportedLabel,
                    "NLI example '" + ex.id + "' is neutral");
      }
      ex.label = Label::kContradict;
      break;
  }
  for (const auto& e : explanations) {
    if (!Trim(e).empty()) {
      ex.explanation = Explanation{e};
      break;
    }
  }
  return ex;
}

void AugmentationConfig::Validate() const {
  if (k < 0) throw Error(ErrorKind::kInvalidArgument, "k must be >= 0");
  if (max_output_tokens < 1) {
    throw Error(ErrorKind::kInvalidArgument, "max_output_tokens must be >= 1");
  }
}

AugmentationResult AugmentWithExplainer(std::span<const LabeledExample> examples,
                                        Backend& backend,
                                        const AugmentationConfig& cfg,
                                        const TemplateConfig& templates) {
  cfg.Validate();
  for (const auto& ex : examples) {
    if (!ex.label) {
      throw Error(ErrorKind::kInvalidArgument,
                  "cannot augment unlabeled example '" + ex.id + "'");
    }
  }
  AugmentationResult out;
  if (cfg.k == 0) {
    out.examples.assign(examples.begin(), examples.end());
    return out;
  }

  struct Slot {
    std::vector<std::string> generated;
    std::optional<AugmentationResult::Failure> failure;
  };
  std::vector<Slot> slots(examples.size());
  ParallelFor(examples.size(), cfg.concurrency, [&](size_t i) {
    const LabeledExample& ex = examples[i];
    GenerationRequest request;
    request.input = RenderExplainerInput(ex, *ex.label, templates);
    request.mode = GenerationMode::kExplain;
    request.num_outputs = cfg.k;
    request.seed = cfg.seed;
    request.max_output_tokens = cfg.max_output_tokens;
    try {
      GenerationResult result = backend.Generate(request);
      result.CheckAgainst(request);
      for (auto& o : result.outputs) slots[i].generated.push_back(std::move(o.text));
    } catch (const Error& e) {
      slots[i].failure = AugmentationResult::Failure{ex.id, e.kind(), e.what()};
    }
  });

  for (size_t i = 0; i < examples.size(); ++i) {
    const LabeledExample& ex = examples[i];
    out.examples.push_back(ex);
    if (slots[i].failure) {
      out.failures.push_back(*slots[i].failure);
      continue;
    }
    std::set<std::string> seen;
    if (ex.explanation) seen.insert(ex.explanation->text);
    int j = 0;
    for (const auto& raw : slots[i].generated) {
      std::string text(Trim(raw));
      if (text.empty()) continue;
      if (cfg.dedupe && !seen.insert(text).second) {
        ++out.dropped_duplicates;
        continue;
      }
      LabeledExample copy = ex;
      copy.id = ex.id + "#gen" + std::to_string(j++);
      copy.explanation = Explanation{std::move(text)};
      copy.origin = ExampleOrigin::kExplainerGenerated;
      out.examples.push_back(std::move(copy));
    }
  }
  return out;
}

std::vector<TrainingRecord> EmitTrainingRecords(
    std::span<const LabeledExample> examples,
    const std::set<ComponentKind>& components, const TemplateConfig& templates) {
  std::vector<TrainingRecord> records;
  for (const auto& ex : examples) {
    if (!ex.label) {
      throw Error(ErrorKind::kInvalidArgument,
                  "cannot emit training records for unlabeled example '" +
                      ex.id + "'");
    }
    const Label label = *ex.label;
    const Explanation explanation = ex.explanation.value_or(Explanation{});
    if (components.count(ComponentKind::kReasoningClassifier)) {
      records.push_back({RenderReasoningInput(ex, templates),
                         RenderReasoningTarget(label, explanation, templates),
                         ComponentKind::kReasoningClassifier, ex.origin});
    }
    if (explanation.empty()) continue;
    if (components.count(ComponentKind::kHintedClassifier)) {
      records.push_back({RenderHintedInput(ex, explanation, templates),
                         templates.class_tokens[label],
                         ComponentKind::kHintedClassifier, ex.origin});
    }
    if (components.count(ComponentKind::kExplainer)) {
      records.push_back({RenderExplainerInput(ex, label, templates),
                         explanation.text, ComponentKind::kExplainer, ex.origin});
    }
  }
  return records;
}

void WriteTrainingJsonl(std::span<const TrainingRecord> records,
                        std::ostream& out) {
  for (const auto& r : records) {
    wire::Json line;
    line["input"] = r.input;
    line["target"] = r.target;
    line["component"] = ComponentName(r.component);
    line["origin"] = OriginName(r.origin);
    out << line.dump() << '\n';
  }
}

std::string EscapeTsvField(std::string_view field) {
  std::string out;
  out.reserve(field.size());
  for (char c : field) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

std::string UnescapeTsvField(std::string_view field) {
  std::string out;
  out.reserve(field.size());
  for (size_t i = 0; i < field.size(); ++i) {
    if (field[i] != '\\' || i + 1 == field.size()) {
      out += field[i];
      continue;
    }
    switch (field[++i]) {
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      case '\\': out += '\\'; break;
      default:
        out += '\\';
        out += field[i];
    }
  }
  return out;
}

void WriteTrainingTsv(std::span<const TrainingRecord> records,
                      std::ostream& out) {
  for (const auto& r : records) {
    out << EscapeTsvField(r.input) << '\t' << EscapeTsvField(r.target) << '\n';
  }
}

}  // namespace hhd
