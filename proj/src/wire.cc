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

#include "hhd/wire.h"

#include "hhd/errors.h"

namespace hhd::wire {
namespace {

[[noreturn]] void Fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

template <typename T>
T Get(const Json& obj, const char* key, ErrorKind kind) {
  auto it = obj.find(key);
  if (it == obj.end()) Fail(kind, std::string("missing field '") + key + "'");
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    Fail(kind, std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

Json RequestToJson(const GenerationRequest& request) {
  Json body;
  body["input"] = request.input;
  body["mode"] = GenerationModeName(request.mode);
  body["num_outputs"] = request.num_outputs;
  body["seed"] = request.seed ? Json(*request.seed) : Json(nullptr);
  body["max_output_tokens"] = request.max_output_tokens;
  return body;
}

GenerationRequest RequestFromJson(const Json& body) {
  constexpr auto kBad = ErrorKind::kInvalidArgument;
  if (!body.is_object()) Fail(kBad, "request body is not an object");
  GenerationRequest request;
  request.input = Get<std::string>(body, "input", kBad);
  auto mode = ParseGenerationModeName(Get<std::string>(body, "mode", kBad));
  if (!mode) Fail(kBad, "unknown mode");
  request.mode = *mode;
  if (!body.contains("num_outputs") || !body["num_outputs"].is_number_integer())
    Fail(kBad, "num_outputs must be an integer");
  request.num_outputs = body["num_outputs"].get<int>();
  if (auto it = body.find("seed"); it != body.end() && !it->is_null()) {
    if (!it->is_number_integer()) Fail(kBad, "seed must be an integer or null");
    request.seed = it->get<int64_t>();
  }
  if (!body.contains("max_output_tokens") ||
      !body["max_output_tokens"].is_number_integer())
    Fail(kBad, "max_output_tokens must be an integer");
  request.max_output_tokens = body["max_output_tokens"].get<int>();
  request.Validate();
  return request;
}

Json ResultToJson(const GenerationResult& result) {
  Json body;
  Json outputs = Json::array();
  for (const auto& out : result.outputs) {
    Json item;
    item["text"] = out.text;
    item["logprob"] = out.logprob;
    outputs.push_back(std::move(item));
  }
  body["outputs"] = std::move(outputs);
  if (result.class_logprobs) {
    Json lp;
    lp["entail"] = result.class_logprobs->entail;
    lp["contradict"] = result.class_logprobs->contradict;
    body["class_logprobs"] = std::move(lp);
  } else {
    body["class_logprobs"] = nullptr;
  }
  return body;
}

GenerationResult ResultFromJson(const Json& body) {
  constexpr auto kBad = ErrorKind::kMalformedResponse;
  if (!body.is_object()) Fail(kBad, "response body is not an object");
  auto outputs = body.find("outputs");
  if (outputs == body.end() || !outputs->is_array())
    Fail(kBad, "'outputs' must be an array");
  GenerationResult result;
  for (const auto& item : *outputs) {
    if (!item.is_object()) Fail(kBad, "output entry is not an object");
    DecodedOutput out;
    out.text = Get<std::string>(item, "text", kBad);
    if (!item.contains("logprob") || !item["logprob"].is_number())
      Fail(kBad, "output logprob must be a number");
    out.logprob = item["logprob"].get<double>();
    result.outputs.push_back(std::move(out));
  }
  if (auto lp = body.find("class_logprobs"); lp != body.end() && !lp->is_null()) {
    if (!lp->is_object()) Fail(kBad, "'class_logprobs' must be an object");
    for (const char* key : {"entail", "contradict"}) {
      if (!lp->contains(key) || !(*lp)[key].is_number())
        Fail(kBad, std::string("class_logprobs.") + key + " must be a number");
    }
    result.class_logprobs =
        ClassLogprobs{(*lp)["entail"].get<double>(),
                      (*lp)["contradict"].get<double>()};
  }
  return result;
}

Json ErrorBody(std::string_view kind, std::string_view message) {
  Json body;
  body["error"] = kind;
  body["message"] = message;
  return body;
}

}  // namespace hhd::wire
