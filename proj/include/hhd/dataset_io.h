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

// Corpus readers and writers.
//
// HHD JSONL (native), one object per line:
//   {"id": str, "article_title": str, "article_body": str, "headline": str,
//    "label": "entail"|"contradict"|null, "explanation": str|null,
//    "split": "train"|"validation"|"test"|null,
//    "article_layout": "title_passage"|"concatenate"|null,
//    "origin": "human"|"explainer_generated"|"nli_adapted"|null}
// Only id and headline plus one of the article fields are required.
//
// eSNLI CSV: header with pairID, gold_label, Sentence1 (premise),
//   Sentence2 (hypothesis), Explanation_1[, Explanation_2, Explanation_3].
// ANLI JSONL: {"uid", "premise", "hypothesis", "label": "e"|"n"|"c",
//   "reason": str | [str]}; each reason becomes its own example.
// TRUE CSV: header with grounding, generated_text (or target), label.
//   Polarity per dataset comes from TrueDatasetRegistry().

#ifndef HHD_DATASET_IO_H_
#define HHD_DATASET_IO_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hhd/augmentation.h"
#include "hhd/domain.h"
#include "hhd/pipeline.h"

namespace hhd {

enum class DatasetFormat { kHhdJsonl, kEsnliCsv, kAnliJsonl, kTrueCsv };

// "hhd", "esnli", "anli", "true". Throws kUnknownFormat.
DatasetFormat ParseDatasetFormat(std::string_view name);

enum class Split { kTrain, kValidation, kTest, kUnsplit };

std::string_view SplitName(Split split);
std::optional<Split> ParseSplitName(std::string_view name);

struct DatasetManifest {
  std::string name;
  Split split = Split::kUnsplit;
  int64_t count = 0;
  int64_t positive_count = 0;
  int64_t with_explanation_count = 0;

  friend bool operator==(const DatasetManifest&, const DatasetManifest&) = default;
};

struct Dataset {
  std::vector<LabeledExample> examples;
  std::vector<Split> splits;  // aligned with examples
  DatasetManifest manifest;
  // NLI items dropped by NeutralPolicy::kSkip.
  int64_t skipped_neutral = 0;

  // One manifest per split present, in Train, Validation, Test, Unsplit
  // order.
  std::vector<DatasetManifest> SplitManifests() const;
};

DatasetManifest CountManifest(std::string name, Split split,
                              std::span<const LabeledExample> examples);

struct TrueRecord {
  std::string grounding;
  std::string target;
  bool grounded_flag = true;
  std::string dataset_name;
};

// How a TRUE dataset's label column maps onto "grounded".
struct TruePolarity {
  std::string label_column = "label";
  std::string grounded_value = "1";
};

// The six TRUE datasets used for zero-shot evaluation. Unknown names get the
// default polarity.
const std::map<std::string, TruePolarity, std::less<>>& TrueDatasetRegistry();

LabeledExample TrueRecordToExample(const TrueRecord& record, std::string id);

struct ReadOptions {
  // Skips neutral NLI items unless set; kReject then fails the read.
  std::optional<NeutralPolicy> neutral;
  // Registry key for TRUE files; defaults to the file stem.
  std::string true_dataset_name;
};

// Fails with a line-numbered ParseError on the first malformed record.
Dataset ReadExamples(const std::string& path, DatasetFormat format,
                     const ReadOptions& options = {});
Dataset ReadExamplesFrom(std::istream& in, const std::string& path,
                         DatasetFormat format, const ReadOptions& options = {});

std::string ExampleToJsonLine(const LabeledExample& example,
                              std::optional<Split> split = std::nullopt);
void WriteExamples(std::span<const LabeledExample> examples, std::ostream& out);
void WriteExamples(std::span<const LabeledExample> examples,
                   const std::string& path);

// Prediction JSONL:
//   {"id", "hallucination_prob", "label", "explanation", "reasoning_prob",
//    "hinted_prob", "mode"[, "warning"]}
// Failed examples are written as {"id", "error", "message"}. Reals use
// shortest round-trip formatting, so re-reading is bit-exact.
struct PredictionRecord {
  std::string id;
  std::optional<Prediction> prediction;
  std::optional<ScoreFailure> failure;
};

std::string PredictionToJsonLine(const std::string& id, const Prediction& pred);
void WritePredictions(std::span<const Prediction> preds,
                      std::span<const std::string> ids, const std::string& path);
void WriteOutcomes(std::span<const ScoreOutcome> outcomes,
                   std::span<const std::string> ids, std::ostream& out);
void WriteOutcomes(std::span<const ScoreOutcome> outcomes,
                   std::span<const std::string> ids, const std::string& path);
std::vector<PredictionRecord> ReadPredictions(const std::string& path);
std::vector<PredictionRecord> ReadPredictionsFrom(std::istream& in,
                                                  const std::string& path);

}  // namespace hhd

#endif  // HHD_DATASET_IO_H_
