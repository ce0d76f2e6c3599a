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

// Handcrafted features for the classical baselines, a small logistic
// regression over them, and CSV export for external trainers.

#ifndef HHD_FEATURES_H_
#define HHD_FEATURES_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hhd/domain.h"

namespace hhd {

inline constexpr int kFeatureVersion = 1;
inline constexpr size_t kNumFeatures = 8;

struct FeatureVector {
  int64_t headline_len_tokens = 0;
  int64_t article_len_tokens = 0;
  int64_t headline_len_chars = 0;
  int64_t article_len_chars = 0;
  int64_t overlap_word_count = 0;
  double overlap_word_ratio = 0.0;
  double jaro_winkler_tokens = 0.0;
  double jaro_winkler_chars_title = 0.0;

  // Column order of the CSV export and of LinearModel weights.
  static const std::array<std::string_view, kNumFeatures>& Names();
  std::array<double, kNumFeatures> AsArray() const;

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

// Tokens are NormalizedTokens() of the headline and of "title body".
// Overlap is the multiset intersection size, capped by headline
// multiplicity. Token Jaro-Winkler compares the two token sequences;
// character Jaro-Winkler compares headline and title text.
FeatureVector ExtractFeatures(const LabeledExample& example);

struct LinearModel {
  std::array<double, kNumFeatures> weights{};
  double bias = 0.0;

  // Probability of Contradict.
  double PredictProbability(const FeatureVector& features) const;

  friend bool operator==(const LinearModel&, const LinearModel&) = default;
};

struct LinearTrainingOptions {
  int epochs = 500;
  double learning_rate = 0.1;
  uint64_t seed = 0;
};

// Full-batch gradient descent on the mean logistic loss over standardized
// features. Weights are mapped back to raw feature space on return.
// Throws kDegenerateData unless both labels are present; kInvalidArgument
// on unlabeled examples.
LinearModel TrainLinear(std::span<const FeatureVector> features,
                        std::span<const Label> labels,
                        const LinearTrainingOptions& options = {});

std::string LinearModelToJson(const LinearModel& model);
LinearModel LinearModelFromJson(std::string_view json);

struct FeatureRow {
  std::string id;
  FeatureVector features;
  std::optional<Label> label;

  friend bool operator==(const FeatureRow&, const FeatureRow&) = default;
};

// Header: id, the eight feature names, label (0 entail, 1 contradict,
// empty when unknown). UTF-8, LF line endings, reals with 17 significant
// digits.
void WriteFeatureCsv(std::span<const FeatureRow> rows, std::ostream& out);
std::vector<FeatureRow> ReadFeatureCsv(std::istream& in,
                                       const std::string& path = "<csv>");

}  // namespace hhd

#endif  // HHD_FEATURES_H_
