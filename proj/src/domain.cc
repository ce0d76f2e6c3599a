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

#include "hhd/domain.h"

#include <algorithm>
#include <cctype>

#include "hhd/errors.h"

namespace hhd {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string_view Trim(std::string_view text) {
  size_t begin = 0;
  while (begin < text.size() && IsSpace(text[begin])) ++begin;
  size_t end = text.size();
  while (end > begin && IsSpace(text[end - 1])) --end;
  return text.substr(begin, end - begin);
}

std::string_view TrimRight(std::string_view text) {
  size_t end = text.size();
  while (end > 0 && IsSpace(text[end - 1])) --end;
  return text.substr(0, end);
}

Label LabelFromBinary(int value) {
  if (value == 0) return Label::kEntail;
  if (value == 1) return Label::kContradict;
  throw Error(ErrorKind::kInvalidArgument,
              "label must be 0 or 1, got " + std::to_string(value));
}

std::string_view LabelName(Label label) {
  return label == Label::kEntail ? "entail" : "contradict";
}

std::optional<Label> ParseLabelName(std::string_view name) {
  name = Trim(name);
  if (EqualsIgnoreCase(name, "entail")) return Label::kEntail;
  if (EqualsIgnoreCase(name, "contradict")) return Label::kContradict;
  return std::nullopt;
}

Label LabelFromToken(std::string_view token, const ClassTokens& tokens) {
  token = Trim(token);
  for (Label label : kAllLabels) {
    if (EqualsIgnoreCase(token, Trim(tokens[label]))) return label;
  }
  throw Error(ErrorKind::kUnknownClassToken,
              "unknown class token '" + std::string(token) + "'");
}

bool Article::IsValid() const {
  return !Trim(title).empty() || !Trim(body).empty();
}

bool Headline::IsValid() const { return !Trim(text).empty(); }

std::string_view OriginName(ExampleOrigin origin) {
  switch (origin) {
    case ExampleOrigin::kHuman: return "human";
    case ExampleOrigin::kExplainerGenerated: return "explainer_generated";
    case ExampleOrigin::kNliAdapted: return "nli_adapted";
  }
  return "human";
}

std::optional<ExampleOrigin> ParseOriginName(std::string_view name) {
  for (auto origin : {ExampleOrigin::kHuman, ExampleOrigin::kExplainerGenerated,
                      ExampleOrigin::kNliAdapted}) {
    if (name == OriginName(origin)) return origin;
  }
  return std::nullopt;
}

bool LabeledExample::IsValid() const {
  if (!article.IsValid() || !headline.IsValid()) return false;
  return !explanation.has_value() || label.has_value();
}

std::string_view PipelineModeName(PipelineMode mode) {
  switch (mode) {
    case PipelineMode::kFull: return "full";
    case PipelineMode::kNoHinted: return "no_hinted";
    case PipelineMode::kNoExplanation: return "no_explanation";
  }
  return "full";
}

std::optional<PipelineMode> ParsePipelineModeName(std::string_view name) {
  for (auto mode : {PipelineMode::kFull, PipelineMode::kNoHinted,
                    PipelineMode::kNoExplanation}) {
    if (name == PipelineModeName(mode)) return mode;
  }
  return std::nullopt;
}

std::string ArticleText(const Article& article, ArticleLayout layout) {
  const bool has_title = !article.title.empty();
  const bool has_body = !article.body.empty();
  std::string out;
  if (layout == ArticleLayout::kTitlePassage) {
    if (has_title) out += "title: " + article.title;
    if (has_body) {
      if (has_title) out += ' ';
      out += "passage: " + article.body;
    }
  } else {
    out = article.title;
    if (has_title && has_body) out += '\n';
    out += article.body;
  }
  return out;
}

}  // namespace hhd
