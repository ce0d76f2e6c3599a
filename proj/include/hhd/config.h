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

// Tool configuration. One JSON document; every key has a matching CLI flag
// and flags win over the file.
//
//   {
//     "backend":  {"url": str, "concurrency": int, "max_attempts": int,
//                  "mock": bool, "mock_fixture": str|null,
//                  "mock_temperature": num},
//     "template": {"entail_token": str, "contradict_token": str,
//                  "because_delimiter": str, "headline_prefix": str,
//                  "article_prefix": str, "comment_prefix": str,
//                  "explainer_class_separator": str,
//                  "default_layout": "title_passage"|"concatenate"},
//     "pipeline": {"mode": "full"|"no_hinted"|"no_explanation",
//                  "threshold": num, "normalization":
//                  "renormalized_pair"|"raw_first_token",
//                  "seed": int|null, "max_output_tokens": int},
//     "augmentation": {"k": int, "dedupe": bool, "seed": int}
//   }

#ifndef HHD_CONFIG_H_
#define HHD_CONFIG_H_

#include <optional>
#include <string>

#include "hhd/augmentation.h"
#include "hhd/pipeline.h"
#include "hhd/templates.h"
#include "hhd/wire.h"

namespace hhd {

struct CliConfig {
  std::string backend_url;
  int concurrency_limit = 4;
  int max_attempts = 3;
  bool use_mock = false;
  std::optional<std::string> mock_fixture;
  double mock_temperature = 0.25;
  TemplateConfig templates;
  PipelineConfig pipeline;
  AugmentationConfig augmentation;

  // Throws kInvalidArgument on any broken invariant.
  void Validate() const;
};

// Overlays the keys present in `doc` onto `cfg`. Unknown keys are errors.
void ApplyConfigJson(const wire::Json& doc, CliConfig& cfg);
CliConfig LoadConfigFile(const std::string& path, CliConfig base = {});

// The effective configuration, echoed next to outputs.
wire::Json ConfigToJson(const CliConfig& cfg);

}  // namespace hhd

#endif  // HHD_CONFIG_H_
