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

#include "hhd/templates.h"

#include <cctype>

#include "hhd/errors.h"

namespace hhd {
namespace {

ArticleLayout LayoutFor(const Article& article, const TemplateConfig& cfg) {
  return article.layout.value_or(cfg.default_layout);
}

// " because " -> " because"
std::string_view OpenDelimiter(const TemplateConfig& cfg) {
  return TrimRight(cfg.because_delimiter);
}

}  // namespace

std::string_view ComponentName(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::kReasoningClassifier: return "reasoning_classifier";
    case ComponentKind::kHintedClassifier: return "hinted_classifier";
    case ComponentKind::kExplainer: return "explainer";
  }
  return "reasoning_classifier";
}

void TemplateConfig::Validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorKind::kInvalidArgument, "template config: " + what);
  };
  if (because_delimiter.empty()) fail("empty delimiter");
  if (Trim(because_delimiter).empty()) fail("blank delimiter");
  if (headline_prefix.empty()) fail("empty headline prefix");
  if (article_prefix.empty()) fail("empty article prefix");
  if (comment_prefix.empty()) fail("empty comment prefix");
  for (Label label : kAllLabels) {
    const std::string& token = class_tokens[label];
    if (Trim(token).empty()) fail("blank class token");
    if (token.find(because_delimiter) != std::string::npos) {
      fail("class token '" + token + "' contains the delimiter");
    }
    const std::string rendered = token + because_delimiter;
    if (rendered.find(because_delimiter) != token.size()) {
      fail("class token '" + token + "' overlaps the delimiter");
    }
  }
  std::string a(Trim(class_tokens.entail)), b(Trim(class_tokens.contradict));
  for (auto& c : a) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (auto& c : b) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (a == b) fail("class tokens are not distinct");
}

std::string RenderReasoningInput(const LabeledExample& example,
                                 const TemplateConfig& cfg) {
  std::string out = cfg.headline_prefix;
  out += example.headline.text;
  out += cfg.article_prefix;
  out += ArticleText(example.article, LayoutFor(example.article, cfg));
  return out;
}

std::string RenderReasoningTarget(Label label, const Explanation& explanation,
                                  const TemplateConfig& cfg) {
  std::string out = cfg.class_tokens[label];
  if (!explanation.empty()) {
    out += cfg.because_delimiter;
    out += explanation.text;
  }
  return out;
}

std::string RenderHintedInput(const LabeledExample& example,
                              const Explanation& hint,
                              const TemplateConfig& cfg) {
  std::string out = RenderReasoningInput(example, cfg);
  out += cfg.comment_prefix;
  out += hint.text;
  return out;
}

std::string RenderExplainerInput(const LabeledExample& example, Label label,
                                 const TemplateConfig& cfg) {
  std::string out = RenderReasoningInput(example, cfg);
  out += cfg.explainer_class_separator;
  out += cfg.class_tokens[label];
  out += OpenDelimiter(cfg);
  return out;
}

ParsedOutput ParseComponentOutput(std::string_view output,
                                  const TemplateConfig& cfg) {
  std::string_view head = output;
  std::string_view tail;
  if (size_t pos = output.find(cfg.because_delimiter);
      pos != std::string_view::npos) {
    head = output.substr(0, pos);
    tail = output.substr(pos + cfg.because_delimiter.size());
  } else {
    // A dangling "Contradict because" with nothing after it.
    std::string_view trimmed = TrimRight(output);
    std::string_view open = OpenDelimiter(cfg);
    if (trimmed.size() >= open.size() &&
        trimmed.substr(trimmed.size() - open.size()) == open) {
      head = trimmed.substr(0, trimmed.size() - open.size());
    }
  }
  try {
    return {LabelFromToken(head, cfg.class_tokens), Explanation{std::string(tail)}};
  } catch (const Error&) {
    std::string shown(output.substr(0, 80));
    throw Error(ErrorKind::kUnparseableOutput,
                "cannot parse component output '" + shown + "'");
  }
}

}  // namespace hhd
