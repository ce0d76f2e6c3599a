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

// Text-to-text model backends. A backend decodes output sequences for a
// rendered input and, in the classify modes, reports the first-step
// log-probability of each class token.

#ifndef HHD_BACKEND_H_
#define HHD_BACKEND_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hhd/domain.h"

namespace hhd {

enum class GenerationMode {
  kClassify,            // one-step decoding: a single class token
  kClassifyAndExplain,  // "<CLASS> because <EXPLANATION>"
  kExplain,             // explanation text only, possibly several samples
};

std::string_view GenerationModeName(GenerationMode mode);
std::optional<GenerationMode> ParseGenerationModeName(std::string_view name);

struct GenerationRequest {
  std::string input;
  GenerationMode mode = GenerationMode::kClassify;
  int num_outputs = 1;
  std::optional<int64_t> seed;
  int max_output_tokens = 128;

  // Throws Error(kInvalidArgument) on num_outputs < 1 or
  // max_output_tokens < 1.
  void Validate() const;
};

struct DecodedOutput {
  std::string text;
  double logprob = 0.0;  // sequence log-probability, <= 0

  friend bool operator==(const DecodedOutput&, const DecodedOutput&) = default;
};

struct ClassLogprobs {
  double entail = 0.0;
  double contradict = 0.0;

  double operator[](Label label) const {
    return label == Label::kEntail ? entail : contradict;
  }
  friend bool operator==(const ClassLogprobs&, const ClassLogprobs&) = default;
};

struct GenerationResult {
  std::vector<DecodedOutput> outputs;
  std::optional<ClassLogprobs> class_logprobs;

  // Throws Error(kMalformedResponse) when the result breaks the contract
  // for `request` (too many outputs, positive or non-finite logprobs,
  // missing class logprobs in a classify mode).
  void CheckAgainst(const GenerationRequest& request) const;

  friend bool operator==(const GenerationResult&,
                         const GenerationResult&) = default;
};

class Backend {
 public:
  virtual ~Backend() = default;

  // Must be safe to call concurrently.
  virtual GenerationResult Generate(const GenerationRequest& request) = 0;
};

enum class Normalization {
  kRawFirstToken,     // exp(lp[target])
  kRenormalizedPair,  // exp(lp[target]) / sum over both labels
};

std::string_view NormalizationName(Normalization n);
std::optional<Normalization> ParseNormalizationName(std::string_view name);

// Probability of `target` from the first-step class log-probabilities.
// Throws Error(kMissingClassLogprobs) when the result has none.
double ClassProbability(const GenerationResult& result, Label target,
                        Normalization normalization);

}  // namespace hhd

#endif  // HHD_BACKEND_H_
