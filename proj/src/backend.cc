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

#include "hhd/backend.h"

#include <algorithm>
#include <cmath>

#include "hhd/errors.h"

namespace hhd {
namespace {

bool IsLogprob(double lp) { return std::isfinite(lp) && lp <= 0.0; }

}  // namespace

std::string_view GenerationModeName(GenerationMode mode) {
  switch (mode) {
    case GenerationMode::kClassify: return "classify";
    case GenerationMode::kClassifyAndExplain: return "classify_and_explain";
    case GenerationMode::kExplain: return "explain";
  }
  return "classify";
}

std::optional<GenerationMode> ParseGenerationModeName(std::string_view name) {
  for (auto mode : {GenerationMode::kClassify,
                    GenerationMode::kClassifyAndExplain,
                    GenerationMode::kExplain}) {
    if (name == GenerationModeName(mode)) return mode;
  }
  return std::nullopt;
}

void GenerationRequest::Validate() const {
  if (num_outputs < 1) {
    throw Error(ErrorKind::kInvalidArgument, "num_outputs must be >= 1");
  }
  if (max_output_tokens < 1) {
    throw Error(ErrorKind::kInvalidArgument, "max_output_tokens must be >= 1");
  }
}

void GenerationResult::CheckAgainst(const GenerationRequest& request) const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorKind::kMalformedResponse, what);
  };
  if (outputs.size() > static_cast<size_t>(request.num_outputs)) {
    fail("backend returned " + std::to_string(outputs.size()) +
         " outputs for num_outputs=" + std::to_string(request.num_outputs));
  }
  for (const auto& out : outputs) {
    if (!IsLogprob(out.logprob)) fail("output logprob is not a log-probability");
  }
  if (class_logprobs) {
    if (!IsLogprob(class_logprobs->entail) ||
        !IsLogprob(class_logprobs->contradict)) {
      fail("class logprob is not a log-probability");
    }
  } else if (request.mode != GenerationMode::kExplain) {
    fail("class_logprobs missing in a classify mode");
  }
}

std::string_view NormalizationName(Normalization n) {
  return n == Normalization::kRawFirstToken ? "raw_first_token"
                                            : "renormalized_pair";
}

std::optional<Normalization> ParseNormalizationName(std::string_view name) {
  if (name == "raw_first_token") return Normalization::kRawFirstToken;
  if (name == "renormalized_pair") return Normalization::kRenormalizedPair;
  return std::nullopt;
}

double ClassProbability(const GenerationResult& result, Label target,
                        Normalization normalization) {
  if (!result.class_logprobs) {
    throw Error(ErrorKind::kMissingClassLogprobs,
                "generation result carries no class logprobs");
  }
  const ClassLogprobs& lp = *result.class_logprobs;
  if (normalization == Normalization::kRawFirstToken) {
    return std::clamp(std::exp(lp[target]), 0.0, 1.0);
  }
  // Softmax over the two class logits, shifted by the max for stability.
  const double top = std::max(lp.entail, lp.contradict);
  const double num = std::exp(lp[target] - top);
  const double den = std::exp(lp.entail - top) + std::exp(lp.contradict - top);
  return num / den;
}

}  // namespace hhd
