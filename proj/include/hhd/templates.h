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

// Input/output sequence formats of the three text-to-text components:
//
//   reasoning classifier  in:  headline entailment: headline: H article: A
//                         out: <CLASS> because <EXPLANATION>
//   hinted classifier     in:  <reasoning input> comment: <EXPLANATION>
//                         out: <CLASS>
//   explainer             in:  <reasoning input> <CLASS> because
//                         out: <EXPLANATION>

#ifndef HHD_TEMPLATES_H_
#define HHD_TEMPLATES_H_

#include <string>
#include <string_view>
#include <utility>

#include "hhd/domain.h"

namespace hhd {

enum class ComponentKind { kReasoningClassifier, kHintedClassifier, kExplainer };

std::string_view ComponentName(ComponentKind kind);

struct TemplateConfig {
  ClassTokens class_tokens;
  std::string because_delimiter = " because ";
  std::string headline_prefix = "headline entailment: headline: ";
  std::string article_prefix = " article: ";
  std::string comment_prefix = " comment: ";
  // Placed between the article and the class token in explainer inputs.
  std::string explainer_class_separator = " ";
  ArticleLayout default_layout = ArticleLayout::kTitlePassage;

  // Throws Error(kInvalidArgument) unless prefixes and delimiter are
  // non-empty, class tokens are distinct and non-blank, and a rendered
  // "<token><delimiter>" finds its first delimiter right after the token.
  void Validate() const;
};

std::string RenderReasoningInput(const LabeledExample& example,
                                 const TemplateConfig& cfg);

// Empty explanation renders the bare class token with no delimiter.
std::string RenderReasoningTarget(Label label, const Explanation& explanation,
                                  const TemplateConfig& cfg);

std::string RenderHintedInput(const LabeledExample& example,
                              const Explanation& hint,
                              const TemplateConfig& cfg);

std::string RenderExplainerInput(const LabeledExample& example, Label label,
                                 const TemplateConfig& cfg);

struct ParsedOutput {
  Label label;
  Explanation explanation;

  friend bool operator==(const ParsedOutput&, const ParsedOutput&) = default;
};

// Splits on the first delimiter occurrence. The left side must be a class
// token; the right side is returned verbatim, further delimiters included.
// Throws Error(kUnparseableOutput) otherwise; never anything else.
ParsedOutput ParseComponentOutput(std::string_view output,
                                  const TemplateConfig& cfg);

}  // namespace hhd

#endif  // HHD_TEMPLATES_H_
