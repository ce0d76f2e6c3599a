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

#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "hhd/errors.h"
#include "hhd/features.h"
#include "hhd/jaro_winkler.h"
#include "jw_oracle.h"
#include "test_util.h"

namespace hhd {
namespace {

using testing::MakeExample;

double JwStr(std::string_view a, std::string_view b) {
  std::vector<char> x(a.begin(), a.end()), y(b.begin(), b.end());
  return JaroWinkler(x, y);
}

TEST_CASE("Jaro-Winkler reference pairs") {
  CHECK(std::abs(JwStr("MARTHA", "MARHTA") - 0.9611) <= 1e-4);
  CHECK(std::abs(JwStr("DWAYNE", "DUANE") - 0.84) <= 1e-4);
  CHECK(std::abs(JwStr("DIXON", "DICKSONX") - 0.8133) <= 1e-4);
  CHECK(JwStr("", "") == 1.0);
  CHECK(JwStr("abc", "") == 0.0);
  CHECK(JwStr("abc", "xyz") == 0.0);
  CHECK(JwStr("same", "same") == 1.0);
  CHECK(std::abs(JaroWinklerChars("MARTHA", "MARHTA") - 0.9611) <= 1e-4);
  // Code points, not bytes.
  CHECK(JaroWinklerChars("caf\xc3\xa9", "caf\xc3\xa9") == 1.0);
  CHECK(JaroWinklerChars("\xc3\xa9", "\xc3\xa8") == 0.0);
}

TEST_CASE("Jaro-Winkler matches the definitional oracle") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> len(0, 8), sym(0, 3);
  for (int iter = 0; iter < 5000; ++iter) {
    std::vector<int> a(len(rng)), b(len(rng));
    for (auto& v : a) v = sym(rng);
    for (auto& v : b) v = sym(rng);
    double got = JaroWinkler(a, b);
    double want = testing::OracleJaroWinkler(a, b);
    REQUIRE_MESSAGE(std::abs(got - want) <= 1e-9, "iter " << iter);
    REQUIRE(got >= 0.0);
    REQUIRE(got <= 1.0);
  }
}

TEST_CASE("feature extraction on a hand-checked example") {
  auto ex = MakeExample("1", "Storm hits", "Storm hits the coast.", "Storm hits Paris!");
  auto f = ExtractFeatures(ex);
  CHECK(f.headline_len_tokens == 3);
  CHECK(f.article_len_tokens == 6);
  CHECK(f.headline_len_chars == 17);
  CHECK(f.article_len_chars == 10 + 21);
  CHECK(f.overlap_word_count == 2);
  CHECK(f.overlap_word_ratio == doctest::Approx(2.0 / 3.0));
  std::vector<std::string> h = {"storm", "hits", "paris"};
  std::vector<std::string> a = {"storm", "hits", "storm", "hits", "the", "coast"};
  CHECK(f.jaro_winkler_tokens == doctest::Approx(testing::OracleJaroWinkler(h, a)));
  CHECK(f.jaro_winkler_chars_title == doctest::Approx(JwStr("Storm hits Paris!", "Storm hits")));

  auto uni = MakeExample("2", "", "\xc3\xa9t\xc3\xa9", "\xc3\xa9");
  auto g = ExtractFeatures(uni);
  CHECK(g.headline_len_chars == 1);
  CHECK(g.article_len_chars == 3);

  auto empty = MakeExample("3", "T", "B", "!!!");
  auto e = ExtractFeatures(empty);
  CHECK(e.headline_len_tokens == 0);
  CHECK(e.overlap_word_ratio == 0.0);

  CHECK(FeatureVector::Names().size() == kNumFeatures);
  CHECK(FeatureVector::Names()[0] == "headline_len_tokens");
  CHECK(f.AsArray()[5] == f.overlap_word_ratio);
}

std::vector<LabeledExample> SeparableExamples(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<LabeledExample> out;
  for (int i = 0; i < n; ++i) {
    std::string body;
    std::vector<std::string> words;
    for (int w = 0; w < 15; ++w) {
      words.push_back(testing::RandomWord(rng, 3, 6));
      body += words.back() + " ";
    }
    std::string headline;
    bool hallucinated = i % 2 == 1;
    for (int w = 0; w < 5; ++w) {
      headline += (hallucinated ? testing::RandomWord(rng, 3, 6) : words[w * 2]) + " ";
    }
    out.push_back(MakeExample("x" + std::to_string(i), "", body, headline,
                              hallucinated ? Label::kContradict : Label::kEntail));
  }
  return out;
}

TEST_CASE("linear baseline learns an overlap-separable task") {
  auto exs = SeparableExamples(80, 1);
  std::vector<FeatureVector> xs;
  std::vector<Label> ys;
  for (const auto& ex : exs) {
    xs.push_back(ExtractFeatures(ex));
    ys.push_back(*ex.label);
  }
  auto model = TrainLinear(xs, ys);
  int correct = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    double p = model.PredictProbability(xs[i]);
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
    correct += DecideLabel(p, 0.5) == ys[i];
  }
  CHECK(correct >= 76);
  CHECK(TrainLinear(xs, ys) == model);

  auto json = LinearModelToJson(model);
  CHECK(LinearModelFromJson(json) == model);
  CHECK_THROWS_AS(LinearModelFromJson(R"({"version":99})"), Error);

  std::vector<Label> one_class(xs.size(), Label::kEntail);
  try {
    TrainLinear(xs, one_class);
    FAIL("expected DegenerateData");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDegenerateData);
  }
  std::vector<Label> short_labels(3, Label::kEntail);
  try {
    TrainLinear(xs, short_labels);
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kLengthMismatch);
  }
}

TEST_CASE("feature CSV round trip") {
  auto exs = SeparableExamples(10, 4);
  std::vector<FeatureRow> rows;
  for (const auto& ex : exs) rows.push_back({ex.id, ExtractFeatures(ex), ex.label});
  rows.push_back({"needs,\"quoting\"", ExtractFeatures(exs[0]), std::nullopt});
  std::stringstream csv;
  WriteFeatureCsv(rows, csv);
  std::string header;
  std::istringstream first(csv.str());
  std::getline(first, header);
  CHECK(header ==
        "id,headline_len_tokens,article_len_tokens,headline_len_chars,"
        "article_len_chars,overlap_word_count,overlap_word_ratio,"
        "jaro_winkler_tokens,jaro_winkler_chars_title,label");
  auto back = ReadFeatureCsv(csv);
  CHECK(back == rows);

  std::istringstream bad("id,wrong\nx,1\n");
  CHECK_THROWS_AS(ReadFeatureCsv(bad), Error);
}

}  // namespace
}  // namespace hhd
