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

#ifndef HHD_MOCK_BACKEND_H_
#define HHD_MOCK_BACKEND_H_

#include <map>
#include <string>

#include "hhd/backend.h"
#include "hhd/templates.h"

namespace hhd {

enum class MockFallback { kHeuristicOverlap, kError };

struct MockBackendSpec {
  // Exact input text -> canned result. Outputs beyond num_outputs are cut.
  std::map<std::string, GenerationResult> scripted_responses;
  MockFallback fallback = MockFallback::kHeuristicOverlap;
  double heuristic_temperature = 0.25;
  // Inputs longer than this (in bytes) are refused with kInputTooLong.
  // 0 disables the limit.
  size_t max_input_chars = 0;
  // Used by the heuristic to pull the headline and article back out of a
  // rendered input.
  TemplateConfig templates;

  void Validate() const;
};

// Fixture file shared with other protocol implementations:
//   {"fallback": "heuristic"|"error", "heuristic_temperature": 0.25,
//    "max_input_chars": 0,
//    "responses": [{"input": "...", "response": <wire response body>}]}
MockBackendSpec LoadMockFixture(const std::string& path);

// Deterministic test double. Results depend only on (input, seed).
//
// Unscripted inputs go through the overlap heuristic: the fraction o of
// normalized headline tokens found in the article gives
//   P(entail) = sigmoid((2o - 1) / temperature),
// i.e. a two-way softmax over logits o/T and (1-o)/T. Explain mode draws
// num_outputs distinct explanations from a sampler seeded by the input
// hash and the request seed.
class MockBackend : public Backend {
 public:
  explicit MockBackend(MockBackendSpec spec = {});

  GenerationResult Generate(const GenerationRequest& request) override;

  const MockBackendSpec& spec() const { return spec_; }

  // The heuristic's token-overlap score for a rendered input, in [0,1].
  double OverlapScore(const std::string& input) const;

 private:
  GenerationResult Heuristic(const GenerationRequest& request) const;

  MockBackendSpec spec_;
};

}  // namespace hhd

#endif  // HHD_MOCK_BACKEND_H_
