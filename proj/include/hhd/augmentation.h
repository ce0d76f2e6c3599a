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

// Training-corpus construction: NLI examples recast as headline/article
// pairs, explainer-generated extra explanations, and the teacher-forcing
// (input, target) records for each component.

#ifndef HHD_AUGMENTATION_H_
#define HHD_AUGMENTATION_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hhd/backend.h"
#include "hhd/domain.h"
#include "hhd/errors.h"
#include "hhd/templates.h"

namespace hhd {

enum class NliLabel { kEntailment, kNeutral, kContradiction };

// Accepts "entailment"/"neutral"/"contradiction" and the one-letter ANLI
// forms "e"/"n"/"c", case-insensitively.
std::optional<NliLabel> ParseNliLabel(std::string_view text);

// What to do with three-way NLI "neutral" items.
enum class NeutralPolicy {
  kReject,      // adapt_nli_example throws kUnsupportedLabel
  kContradict,  // treat unsupported-but-not-contradicted as hallucinated
};

// Headline <- hypothesis, article body <- premise (concatenate layout, no
// title). The first explanation, if any, is attached.
LabeledExample AdaptNliExample(std::string id, std::string_view premise,
                               std::string_view hypothesis, NliLabel label,
                               std::span<const std::string> explanations,
                               NeutralPolicy neutral = NeutralPolicy::kReject);

inline constexpr int kPretrainingK = 1;
inline constexpr int kFineTuningK = 3;

struct AugmentationConfig {
  int k = kFineTuningK;
  bool dedupe = true;
  int64_t seed = 0;
  int max_output_tokens = 128;
  int concurrency = 1;

  void Validate() const;
};

struct AugmentationResult {
  // Each original followed by its generated copies.
  std::vector<LabeledExample> examples;
  // Examples whose explainer call failed; they are kept un-augmented.
  struct Failure {
    std::string id;
    ErrorKind kind;
    std::string message;
  };
  std::vector<Failure> failures;
  size_t dropped_duplicates = 0;
};

// Asks the explainer for k explanations of each example's gold label and
// appends one copy of the example per distinct explanation. Labels, article
// and headline are never changed. With dedupe, generations equal to one
// another or to the human explanation are dropped. Blank generations are
// always dropped. Ids of copies are "<id>#gen<j>".
AugmentationResult AugmentWithExplainer(std::span<const LabeledExample> examples,
                                        Backend& backend,
                                        const AugmentationConfig& cfg,
                                        const TemplateConfig& templates = {});

struct TrainingRecord {
  std::string input;
  std::string target;
  ComponentKind component;
  ExampleOrigin origin;

  friend bool operator==(const TrainingRecord&, const TrainingRecord&) = default;
};

// Per example, in component order:
//   reasoning: reasoning input -> reasoning target (bare class token when
//              there is no explanation)
//   hinted:    hinted input with the explanation as comment -> class token
//   explainer: explainer input -> explanation
// The last two only when the example has a non-empty explanation.
// Throws kInvalidArgument on an unlabeled example.
std::vector<TrainingRecord> EmitTrainingRecords(
    std::span<const LabeledExample> examples,
    const std::set<ComponentKind>& components, const TemplateConfig& templates);

// {"input","target","component","origin"} per line.
void WriteTrainingJsonl(std::span<const TrainingRecord> records, std::ostream& out);

// input TAB target per line. Backslash, tab, CR and LF inside a field are
// written as \\, \t, \r and \n.
void WriteTrainingTsv(std::span<const TrainingRecord> records, std::ostream& out);
std::string EscapeTsvField(std::string_view field);
std::string UnescapeTsvField(std::string_view field);

}  // namespace hhd

#endif  // HHD_AUGMENTATION_H_
