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

// Two-stage inference: the reasoning classifier labels the pair and writes
// an explanation, the hinted classifier re-reads the pair with that
// explanation as a comment, and the two Contradict probabilities are
// combined.

#ifndef HHD_PIPELINE_H_
#define HHD_PIPELINE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hhd/backend.h"
#include "hhd/domain.h"
#include "hhd/errors.h"
#include "hhd/templates.h"

namespace hhd {

// Extension point for a learned combiner. The pipeline uses MeanCombiner
// unless one is supplied.
class ScoreCombiner {
 public:
  virtual ~ScoreCombiner() = default;
  virtual double Combine(double reasoning_prob, double hinted_prob) const = 0;
};

double Combine(double reasoning_prob, double hinted_prob);

class MeanCombiner : public ScoreCombiner {
 public:
  double Combine(double reasoning_prob, double hinted_prob) const override {
    return hhd::Combine(reasoning_prob, hinted_prob);
  }
};

struct PipelineConfig {
  PipelineMode mode = PipelineMode::kFull;
  double threshold = 0.5;
  Normalization normalization = Normalization::kRenormalizedPair;
  TemplateConfig templates;
  std::optional<int64_t> seed;
  int max_output_tokens = 128;
  std::shared_ptr<const ScoreCombiner> combiner;

  void Validate() const;
};

// Errors from the backend propagate. An unparseable reasoning output does
// not: the example falls back to the reasoning probability alone and the
// prediction carries a warning and mode kNoHinted.
Prediction Score(const LabeledExample& example, Backend& backend,
                 const PipelineConfig& cfg);

struct ScoreFailure {
  ErrorKind kind;
  std::string message;
};

using ScoreOutcome = std::variant<Prediction, ScoreFailure>;

// Scores every example with at most `concurrency` calls in flight. Results
// are in input order; a failing example yields a ScoreFailure in its slot.
std::vector<ScoreOutcome> ScoreBatch(std::span<const LabeledExample> examples,
                                     Backend& backend, const PipelineConfig& cfg,
                                     int concurrency = 1);

// Runs fn(i) for i in [0, n) on up to `concurrency` threads.
template <typename Fn>
void ParallelFor(size_t n, int concurrency, Fn&& fn);

}  // namespace hhd

#include "hhd/parallel.h"

#endif  // HHD_PIPELINE_H_
