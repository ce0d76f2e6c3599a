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

// Shared vocabulary for headline hallucination detection: an article, a
// headline generated from it, the binary support label and an optional
// free-text explanation of that label.

#ifndef HHD_DOMAIN_H_
#define HHD_DOMAIN_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace hhd {

// Contradict is the positive ("hallucinated", s=1) class everywhere in the
// library. Entail means the article supports the headline (s=0).
enum class Label { kEntail = 0, kContradict = 1 };

inline constexpr std::array<Label, 2> kAllLabels = {Label::kEntail,
                                                    Label::kContradict};

// 0 for Entail, 1 for Contradict.
inline int LabelToBinary(Label label) { return static_cast<int>(label); }
Label LabelFromBinary(int value);

// Lowercase wire/file name: "entail" or "contradict".
std::string_view LabelName(Label label);
// Inverse of LabelName, case-insensitive, surrounding whitespace ignored.
std::optional<Label> ParseLabelName(std::string_view name);

// The strings a model emits for each class.
struct ClassTokens {
  std::string entail = "Entail";
  std::string contradict = "Contradict";

  const std::string& operator[](Label label) const {
    return label == Label::kEntail ? entail : contradict;
  }
};

// Case-insensitive match of the trimmed token against the configured class
// tokens. Throws Error(kUnknownClassToken) when nothing matches.
Label LabelFromToken(std::string_view token, const ClassTokens& tokens = {});

enum class ArticleLayout {
  kTitlePassage,  // "title: <title> passage: <body>"
  kConcatenate,   // "<title>\n<body>"
};

struct Article {
  std::string title;
  std::string body;
  std::optional<std::string> source_id;
  // Overrides the template's default layout. Adapted NLI and TRUE corpora
  // carry a single grounding text and use kConcatenate.
  std::optional<ArticleLayout> layout;

  // At least one of title/body must be non-blank.
  bool IsValid() const;
};

struct Headline {
  std::string text;

  bool IsValid() const;
};

struct Explanation {
  std::string text;

  bool empty() const { return text.empty(); }
  friend bool operator==(const Explanation&, const Explanation&) = default;
};

// Where a labeled example came from. Carried through to training records.
enum class ExampleOrigin { kHuman, kExplainerGenerated, kNliAdapted };

std::string_view OriginName(ExampleOrigin origin);
std::optional<ExampleOrigin> ParseOriginName(std::string_view name);

struct LabeledExample {
  std::string id;
  Article article;
  Headline headline;
  std::optional<Label> label;
  std::optional<Explanation> explanation;
  ExampleOrigin origin = ExampleOrigin::kHuman;

  // Article and headline valid; an explanation only alongside a label.
  bool IsValid() const;
  bool HasExplanation() const {
    return explanation.has_value() && !explanation->empty();
  }
};

enum class PipelineMode { kFull, kNoHinted, kNoExplanation };

std::string_view PipelineModeName(PipelineMode mode);
std::optional<PipelineMode> ParsePipelineModeName(std::string_view name);

struct Prediction {
  double hallucination_prob = 0.0;
  Label label = Label::kEntail;
  Explanation explanation;
  std::optional<double> reasoning_prob;
  std::optional<double> hinted_prob;
  PipelineMode mode = PipelineMode::kFull;
  // Set when the pipeline had to degrade for this example.
  std::optional<std::string> warning;

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

// The single decision rule of the library: at or above threshold is flagged.
inline Label DecideLabel(double hallucination_prob, double threshold) {
  return hallucination_prob >= threshold ? Label::kContradict : Label::kEntail;
}

// Renders the article as model input text. Missing parts are dropped along
// with their prefixes.
std::string ArticleText(const Article& article, ArticleLayout layout);

// Leading/trailing whitespace removal. Internal whitespace is preserved.
std::string_view Trim(std::string_view text);
std::string_view TrimRight(std::string_view text);

}  // namespace hhd

#endif  // HHD_DOMAIN_H_
