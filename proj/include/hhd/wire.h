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

// JSON bodies of the backend wire protocol.
//
//   POST /v1/generate
//     {"input": str, "mode": "classify"|"classify_and_explain"|"explain",
//      "num_outputs": int, "seed": int|null, "max_output_tokens": int}
//   200 {"outputs": [{"text": str, "logprob": num}],
//        "class_logprobs": {"entail": num, "contradict": num}|null}
//   400 malformed request, 413 input too long, 503 unavailable
//   GET /v1/health -> {"status": "ok"}
//
// Objects are emitted with keys in the order above.

#ifndef HHD_WIRE_H_
#define HHD_WIRE_H_

#include <string>
#include <string_view>

#include "hhd/backend.h"
#include "json.hpp"

namespace hhd::wire {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kGeneratePath = "/v1/generate";
inline constexpr std::string_view kHealthPath = "/v1/health";

Json RequestToJson(const GenerationRequest& request);
// Throws Error(kInvalidArgument) on any schema violation.
GenerationRequest RequestFromJson(const Json& body);

Json ResultToJson(const GenerationResult& result);
// Throws Error(kMalformedResponse) on any schema violation.
GenerationResult ResultFromJson(const Json& body);

Json ErrorBody(std::string_view kind, std::string_view message);

}  // namespace hhd::wire

#endif  // HHD_WIRE_H_
