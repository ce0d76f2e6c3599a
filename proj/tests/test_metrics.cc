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

#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <random>

#include "doctest.h"
#include "hhd/errors.h"
#include "hhd/metrics.h"
#include "oracles.h"

namespace hhd {
namespace {

std::vector<Label> RandomLabels(std::mt19937_64& rng, size_t n) {
  std::bernoulli_distribution coin(0.4);
  std::vector<Label> out(n);
  for (auto& l : out) l = coin(rng) ? Label::kContradict : Label::kEntail;
  return out;
}

TEST_CASE("metrics on a small hand-computed set") {
  std::vector<double> s = {0.9, 0.8, 0.3, 0.6, 0.1};
  std::vector<Label> y = {Label::kContradict, Label::kEntail, Label::kContradict,
                          Label::kContradict, Label::kEntail};
  auto r = ComputeMetrics(s, y, 0.5);
  CHECK(r.tp == 2);
  CHECK(r.fp == 1);
  CHECK(r.fn == 1);
  CHECK(r.tn == 1);
  CHECK(r.accuracy == doctest::Approx(0.6));
  CHECK(r.precision == doctest::Approx(2.0 / 3.0));
  CHECK(r.recall == doctest::Approx(2.0 / 3.0));
  CHECK(r.f1 == doctest::Approx(2.0 / 3.0));
  // Boundary is inclusive.
  CHECK(ComputeMetrics(s, y, 0.6).tp == 2);
  CHECK(ComputeMetrics(s, y, 0.61).tp == 1);
}

TEST_CASE("metrics degenerate conventions and errors") {
  std::vector<double> s = {0.1, 0.2};
  std::vector<Label> y = {Label::kEntail, Label::kEntail};
  auto r = ComputeMetrics(s, y, 0.5);
  CHECK(r.precision == 0.0);
  CHECK(r.recall == 0.0);
  CHECK(r.f1 == 0.0);
  CHECK(r.accuracy == 1.0);

  auto kind = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kIoError;
  };
  std::vector<double> one = {0.5};
  std::vector<double> none;
  std::vector<Label> no_labels;
  CHECK(kind([&] { ComputeMetrics(one, y, 0.5); }) == ErrorKind::kLengthMismatch);
  CHECK(kind([&] { ComputeMetrics(none, no_labels, 0.5); }) == ErrorKind::kEmptyInput);
  std::vector<double> out_of_range = {1.5, 0.2};
  CHECK(kind([&] { ComputeMetrics(out_of_range, y, 0.5); }) ==
        ErrorKind::kInvalidArgument);
  CHECK(kind([&] { ComputeMetrics(s, y, -0.1); }) == ErrorKind::kInvalidArgument);
  CHECK(kind([&] { TuneThreshold(none, no_labels, TuningObjective::kF1); }) ==
        ErrorKind::kEmptyInput);
}

TEST_CASE("metrics match the confusion-matrix oracle") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<size_t> size(1, 20);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int iter = 0; iter < 1000; ++iter) {
    const size_t n = size(rng);
    std::vector<double> s(n);
    for (auto& v : s) v = iter % 3 == 0 ? std::round(u(rng) * 10) / 10 : u(rng);
    auto y = RandomLabels(rng, n);
    double t = iter % 4 == 0 ? s[0] : u(rng);
    REQUIRE(ComputeMetrics(s, y, t) == testing::OracleReport(s, y, t));
  }
}

TEST_CASE("tuned threshold reaches the grid optimum") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<size_t> size(1, 30);
  std::uniform_int_distribution<int> hundredths(0, 100);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (auto objective : {TuningObjective::kAccuracy, TuningObjective::kF1}) {
    for (int iter = 0; iter < 200; ++iter) {
      const size_t n = size(rng);
      std::vector<double> s(n);
      // Scores on a 0.01 lattice: every distinct cut lies on the 1e-3 grid.
      for (auto& v : s) v = hundredths(rng) / 100.0;
      auto y = RandomLabels(rng, n);
      double t = TuneThreshold(s, y, objective);
      double got = ObjectiveValue(ComputeMetrics(s, y, t), objective);
      REQUIRE(got == testing::OracleGridBest(s, y, objective));

      // Off-lattice scores: the tuner can only do better than the grid.
      for (auto& v : s) v = u(rng);
      t = TuneThreshold(s, y, objective);
      got = ObjectiveValue(ComputeMetrics(s, y, t), objective);
      REQUIRE(got >= testing::OracleGridBest(s, y, objective));
    }
  }
}

TEST_CASE("tuning picks the smallest of tied thresholds") {
  std::vector<double> s = {0.2, 0.8};
  std::vector<Label> y = {Label::kEntail, Label::kContradict};
  CHECK(TuneThreshold(s, y, TuningObjective::kAccuracy) == doctest::Approx(0.5));
  std::vector<Label> all_pos = {Label::kContradict, Label::kContradict};
  CHECK(TuneThreshold(s, all_pos, TuningObjective::kAccuracy) == 0.0);
}

TEST_CASE("t critical table agrees with the Student t quantile") {
  for (int df = 1; df <= 200; ++df) {
    boost::math::students_t dist(df);
    double q = boost::math::quantile(dist, 0.975);
    CAPTURE(df);
    CHECK(std::abs(TCritical95(df) - q) <= 1e-9);
  }
  CHECK(TCritical95(1) == doctest::Approx(12.7062047364).epsilon(1e-12));
  CHECK(TCritical95(4) == doctest::Approx(2.7764451052).epsilon(1e-10));
  CHECK(TCritical95(10000) == doctest::Approx(1.96));
  CHECK_THROWS_AS(TCritical95(0), Error);
}

TEST_CASE("paired t-test against the textbook formula") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> acc(0.8, 0.02);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<double> a(5), b(5);
    for (int i = 0; i < 5; ++i) {
      a[i] = acc(rng);
      b[i] = acc(rng) - 0.01;
    }
    auto r = PairedTTest(a, b);
    CHECK(r.degrees_of_freedom == 4);
    CHECK(std::abs(r.t_statistic - testing::OracleT(a, b)) <= 1e-9);
    CHECK(r.significant_at_95 == (std::abs(r.t_statistic) >= 2.7764451052));
    auto rev = PairedTTest(b, a);
    CHECK(rev.t_statistic == -r.t_statistic);
    CHECK(rev.significant_at_95 == r.significant_at_95);
  }
}

TEST_CASE("paired t-test edge cases") {
  std::vector<double> a = {0.8, 0.8, 0.8}, b = {0.8, 0.8, 0.8};
  auto same = PairedTTest(a, b);
  CHECK(same.t_statistic == 0.0);
  CHECK_FALSE(same.significant_at_95);
  std::vector<double> shifted = {0.7, 0.7, 0.7};
  auto constant = PairedTTest(a, shifted);
  CHECK(std::isinf(constant.t_statistic));
  CHECK(constant.t_statistic > 0);
  CHECK(constant.significant_at_95);
  std::vector<double> one = {0.1};
  try {
    PairedTTest(one, one);
    FAIL("expected TooFewRuns");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kTooFewRuns);
  }
  CHECK_THROWS_AS(PairedTTest(a, one), Error);
}

TEST_CASE("eval report JSON and table") {
  std::vector<double> s = {0.9, 0.2, 0.7};
  std::vector<Label> y = {Label::kContradict, Label::kEntail, Label::kEntail};
  auto r = ComputeMetrics(s, y, 0.5);
  CHECK(EvalReportFromJson(EvalReportToJson(r)) == r);
  auto table = FormatEvalTable(r);
  CHECK(table.rfind("Accuracy", 0) == 0);
  CHECK(table.find("0.6667") != std::string::npos);
  CHECK(table.find("tp=1 fp=1 tn=1 fn=0") != std::string::npos);
  CHECK(ParseTuningObjective("f1") == TuningObjective::kF1);
  CHECK_FALSE(ParseTuningObjective("auc").has_value());
}

}  // namespace
}  // namespace hhd
