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

// Classification metrics with Contradict as the positive class, cutoff
// tuning on a development split, and the paired t-test used to compare
// repeated runs.

#ifndef HHD_METRICS_H_
#define HHD_METRICS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "hhd/domain.h"

namespace hhd {

struct EvalReport {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  int64_t tp = 0;
  int64_t fp = 0;
  int64_t tn = 0;
  int64_t fn = 0;
  double threshold_used = 0.5;
  int64_t n = 0;

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

// Predicts Contradict iff score >= threshold. Precision is 0 when nothing
// is flagged, recall 0 when there are no positives, F1 0 when both are 0.
// Throws kLengthMismatch, kEmptyInput, or kInvalidArgument for scores or
// threshold outside [0,1].
EvalReport ComputeMetrics(std::span<const double> scores,
                          std::span<const Label> labels, double threshold);

enum class TuningObjective { kAccuracy, kF1 };

std::optional<TuningObjective> ParseTuningObjective(std::string_view name);
double ObjectiveValue(const EvalReport& report, TuningObjective objective);

// Candidates are 0, 1 and the midpoints between consecutive distinct sorted
// scores; this covers every split of the scores reachable by a threshold in
// [0,1]. The best candidate wins, ties going to the smallest threshold.
double TuneThreshold(std::span<const double> dev_scores,
                     std::span<const Label> dev_labels,
                     TuningObjective objective);

struct SignificanceResult {
  double t_statistic = 0.0;
  int degrees_of_freedom = 1;
  bool significant_at_95 = false;
};

// Two-tailed paired t-test on d = a - b. With zero spread in d, t is 0 (not
// significant) when mean(d) is 0 and +/-infinity (significant) otherwise.
// Throws kLengthMismatch or kTooFewRuns (fewer than 2 pairs).
SignificanceResult PairedTTest(std::span<const double> runs_a,
                               std::span<const double> runs_b);

// Two-tailed 95% critical value of Student's t. Tabulated for df 1..200,
// 1.96 beyond.
double TCritical95(int degrees_of_freedom);

std::string EvalReportToJson(const EvalReport& report);
EvalReport EvalReportFromJson(std::string_view json);

// Aligned text table, columns Accuracy, Precision, Recall, F1, followed by
// the confusion counts and threshold.
std::string FormatEvalTable(const EvalReport& report);

}  // namespace hhd

#endif  // HHD_METRICS_H_
