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

#include <random>

#include "doctest.h"
#include "hhd/domain.h"
#include "hhd/errors.h"
#include "hhd/templates.h"
#include "test_util.h"

namespace hhd {
namespace {

using testing::MakeExample;

TEST_CASE("labels map to binary and names") {
  CHECK(LabelToBinary(Label::kEntail) == 0);
  CHECK(LabelToBinary(Label::kContradict) == 1);
  CHECK(LabelFromBinary(1) == Label::kContradict);
  CHECK_THROWS_AS(LabelFromBinary(2), Error);
  CHECK(LabelName(Label::kContradict) == "contradict");
  CHECK(ParseLabelName("  Entail ") == Label::kEntail);
  CHECK_FALSE(ParseLabelName("neutral").has_value());
}

TEST_CASE("class tokens are matched case-insensitively after trimming") {
  CHECK(LabelFromToken("Contradict") == Label::kContradict);
  CHECK(LabelFromToken("  entail\n") == Label::kEntail);
  CHECK(LabelFromToken("CONTRADICT") == Label::kContradict);
  try {
    LabelFromToken("Maybe");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kUnknownClassToken);
  }
}

TEST_CASE("decision rule flags scores at or above the threshold") {
  CHECK(DecideLabel(0.5, 0.5) == Label::kContradict);
  CHECK(DecideLabel(0.4999999, 0.5) == Label::kEntail);
  CHECK(DecideLabel(0.0, 0.0) == Label::kContradict);
  CHECK(DecideLabel(1.0, 1.0) == Label::kContradict);
}

TEST_CASE("article layouts drop missing parts with their prefixes") {
  Article a{"T", "B", std::nullopt, std::nullopt};
  CHECK(ArticleText(a, ArticleLayout::kTitlePassage) == "title: T passage: B");
  CHECK(ArticleText(a, ArticleLayout::kConcatenate) == "T\nB");
  a.body = "";
  CHECK(ArticleText(a, ArticleLayout::kTitlePassage) == "title: T");
  CHECK(ArticleText(a, ArticleLayout::kConcatenate) == "T");
  a = Article{"", "B", std::nullopt, std::nullopt};
  CHECK(ArticleText(a, ArticleLayout::kTitlePassage) == "passage: B");
  CHECK(ArticleText(a, ArticleLayout::kConcatenate) == "B");
}

TEST_CASE("reasoning input rendering") {
  TemplateConfig cfg;
  auto ex = MakeExample("1", "", "A man with a beige jacket carries a water jug "
                        "and pushes a food cart.", "A man pushes a cart");
  ex.article.layout = ArticleLayout::kConcatenate;
  CHECK(RenderReasoningInput(ex, cfg) ==
        "headline entailment: headline: A man pushes a cart article: A man with "
        "a beige jacket carries a water jug and pushes a food cart.");

  auto titled = MakeExample("2", "T", "", "H");
  CHECK(RenderReasoningInput(titled, cfg) ==
        "headline entailment: headline: H article: title: T");

  // Case and unicode are passed through untouched.
  auto uni = MakeExample("3", "Zürich", "ÉTÉ", "Caf\xc3\xa9 BIG");
  auto rendered = RenderReasoningInput(uni, cfg);
  CHECK(rendered.find("Caf\xc3\xa9 BIG") != std::string::npos);
  CHECK(rendered.find("passage: ÉTÉ") != std::string::npos);
}

TEST_CASE("reasoning target rendering") {
  TemplateConfig cfg;
  CHECK(RenderReasoningTarget(Label::kContradict,
                              {"conflicting dates - 2021 vs 2019."}, cfg) ==
        "Contradict because conflicting dates - 2021 vs 2019.");
  CHECK(RenderReasoningTarget(Label::kEntail, {""}, cfg) == "Entail");
  CHECK(RenderReasoningTarget(
            Label::kEntail,
            {"The film scored 61 out of 100 , which is less than 62 % ."}, cfg) ==
        "Entail because The film scored 61 out of 100 , which is less than 62 % .");
}

TEST_CASE("component output parsing") {
  TemplateConfig cfg;
  CHECK(ParseComponentOutput("Contradict because IPO is missing in the headline "
                             "which makes it misleading.",
                             cfg) ==
        ParsedOutput{Label::kContradict,
                     {"IPO is missing in the headline which makes it misleading."}});
  CHECK(ParseComponentOutput("Entail", cfg) == ParsedOutput{Label::kEntail, {""}});
  CHECK(ParseComponentOutput("Contradict because A because B", cfg) ==
        ParsedOutput{Label::kContradict, {"A because B"}});
  CHECK(ParseComponentOutput("Contradict because", cfg) ==
        ParsedOutput{Label::kContradict, {""}});
  CHECK(ParseComponentOutput("Entail because", cfg) ==
        ParsedOutput{Label::kEntail, {""}});
  CHECK(ParseComponentOutput("  entail  ", cfg) == ParsedOutput{Label::kEntail, {""}});
  for (const char* bad : {"", "because X", "Maybe because X", "Contradicts"}) {
    try {
      ParseComponentOutput(bad, cfg);
      FAIL("expected throw for '" << bad << "'");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kUnparseableOutput);
    }
  }
}

// Independent oracle: scan every split point, keep the first delimiter hit.
std::optional<ParsedOutput> SplitOracle(const std::string& text,
                                        const TemplateConfig& cfg) {
  const std::string& d = cfg.because_delimiter;
  size_t cut = std::string::npos;
  for (size_t i = 0; i + d.size() <= text.size(); ++i) {
    if (text.compare(i, d.size(), d) == 0) {
      cut = i;
      break;
    }
  }
  std::string head = cut == std::string::npos ? text : text.substr(0, cut);
  std::string tail = cut == std::string::npos ? "" : text.substr(cut + d.size());
  // A dangling delimiter without its trailing space.
  std::string trimmed_delim(TrimRight(d));
  std::string h(Trim(head));
  if (cut == std::string::npos && h.size() >= trimmed_delim.size() &&
      h.compare(h.size() - trimmed_delim.size(), trimmed_delim.size(),
                trimmed_delim) == 0) {
    h = std::string(Trim(h.substr(0, h.size() - trimmed_delim.size())));
  }
  std::string lower;
  for (char c : h) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "entail") return ParsedOutput{Label::kEntail, {tail}};
  if (lower == "contradict") return ParsedOutput{Label::kContradict, {tail}};
  return std::nullopt;
}

TEST_CASE("parser agrees with an exhaustive split-point oracle") {
  TemplateConfig cfg;
  std::mt19937_64 rng(7);
  const std::vector<std::string> pieces = {"Entail", "Contradict", " because ",
                                           "because", " ", "x", "because ",
                                           "CONTRADICT", "\t", "é", ".",
                                           " becaus", "e "};
  std::uniform_int_distribution<size_t> pick(0, pieces.size() - 1);
  std::uniform_int_distribution<int> len(0, 6);
  for (int iter = 0; iter < 20000; ++iter) {
    std::string text;
    for (int i = len(rng); i >= 0; --i) text += pieces[pick(rng)];
    auto expected = SplitOracle(text, cfg);
    try {
      auto got = ParseComponentOutput(text, cfg);
      REQUIRE_MESSAGE(expected.has_value(), "accepted: [" << text << "]");
      REQUIRE_MESSAGE(got == *expected, "mismatch: [" << text << "]");
    } catch (const Error& e) {
      REQUIRE(e.kind() == ErrorKind::kUnparseableOutput);
      REQUIRE_MESSAGE(!expected.has_value(), "rejected: [" << text << "]");
    }
  }
}

TEST_CASE("parser never escapes with anything but an Error on random bytes") {
  TemplateConfig cfg;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> byte(0, 255), len(0, 40);
  for (int iter = 0; iter < 5000; ++iter) {
    std::string text;
    for (int i = len(rng); i > 0; --i) text += static_cast<char>(byte(rng));
    try {
      ParseComponentOutput(text, cfg);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kUnparseableOutput);
    }
  }
}

TEST_CASE("round trip over random explanations") {
  TemplateConfig cfg;
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> words(0, 12), coin(0, 1);
  for (int iter = 0; iter < 2000; ++iter) {
    std::string e;
    for (int w = words(rng); w > 0; --w) {
      if (!e.empty()) e += coin(rng) ? " because " : " ";
      e += testing::RandomWord(rng);
    }
    Label label = coin(rng) ? Label::kContradict : Label::kEntail;
    auto parsed = ParseComponentOutput(RenderReasoningTarget(label, {e}, cfg), cfg);
    REQUIRE(parsed == ParsedOutput{label, {e}});
  }
}

TEST_CASE("hinted input strictly extends the reasoning input") {
  TemplateConfig cfg;
  auto ex = MakeExample("1", "T", "B", "H");
  auto r = RenderReasoningInput(ex, cfg);
  CHECK(RenderHintedInput(ex, {"X"}, cfg) == r + " comment: X");
  CHECK(RenderHintedInput(ex, {""}, cfg) == r + " comment: ");
  CHECK(RenderHintedInput(ex, {""}, cfg).size() > r.size());
  CHECK(RenderHintedInput(ex, {"X"}, cfg).rfind(r, 0) == 0);
}

TEST_CASE("explainer input ends with the class token and a bare delimiter") {
  TemplateConfig cfg;
  auto ex = MakeExample("1", "T", "B", "H", Label::kContradict, "secret reason");
  auto r = RenderReasoningInput(ex, cfg);
  CHECK(RenderExplainerInput(ex, Label::kContradict, cfg) == r + " Contradict because");
  CHECK(RenderExplainerInput(ex, Label::kEntail, cfg) == r + " Entail because");
  CHECK(RenderExplainerInput(ex, Label::kContradict, cfg).find("secret reason") ==
        std::string::npos);
}

TEST_CASE("rendering is deterministic") {
  TemplateConfig cfg;
  auto ex = MakeExample("1", "T", "B", "H");
  CHECK(RenderReasoningInput(ex, cfg) == RenderReasoningInput(ex, cfg));
  CHECK(RenderHintedInput(ex, {"e"}, cfg) == RenderHintedInput(ex, {"e"}, cfg));
}

TEST_CASE("template config validation") {
  TemplateConfig ok;
  CHECK_NOTHROW(ok.Validate());
  auto expect_invalid = [](TemplateConfig cfg) {
    try {
      cfg.Validate();
      FAIL("expected invalid config");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kInvalidArgument);
    }
  };
  TemplateConfig c = ok;
  c.because_delimiter = "";
  expect_invalid(c);
  c = ok;
  c.because_delimiter = "   ";
  expect_invalid(c);
  c = ok;
  c.class_tokens.entail = "Contradict";
  expect_invalid(c);
  c = ok;
  c.class_tokens.entail = "contradict";
  expect_invalid(c);
  c = ok;
  c.class_tokens.contradict = "Not because";
  expect_invalid(c);
  c = ok;
  c.class_tokens.entail = " ";
  expect_invalid(c);
  c = ok;
  c.headline_prefix = "";
  expect_invalid(c);
  c = ok;
  c.class_tokens = {"Yes", "No"};
  CHECK_NOTHROW(c.Validate());
  CHECK(ParseComponentOutput("no because x", c) ==
        ParsedOutput{Label::kContradict, {"x"}});
}

}  // namespace
}  // namespace hhd
