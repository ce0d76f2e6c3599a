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

#include "hhd/metrics.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <vector>

#include "hhd/errors.h"
#include "hhd/wire.h"

namespace hhd {
namespace {

// Student's t, two-tailed alpha = 0.05, df = 1..200.
constexpr std::array<double, 200> kTCritical = {
    12.7062047364, 4.3026527297, 3.1824463053, 2.7764451052, 2.5705818356,
    2.4469118511, 2.3646242516, 2.3060041352, 2.2621571629, 2.2281388520,
    2.2009851601, 2.1788128297, 2.1603686565, 2.1447866879, 2.1314495456,
    2.1199052992, 2.1098155778, 2.1009220402, 2.0930240544, 2.0859634473,
    2.0796138447, 2.0738730679, 2.0686576104, 2.0638985616, 2.0595385528,
    2.0555294386, 2.0518305165, 2.0484071418, 2.0452296421, 2.0422724563,
    2.0395134464, 2.0369333435, 2.0345152974, 2.0322445093, 2.0301079283,
    2.0280940010, 2.0261924630, 2.0243941639, 2.0226909200, 2.0210753903,
    2.0195409704, 2.0180817028, 2.0166921992, 2.0153675744, 2.0141033889,
    2.0128955989, 2.0117405137, 2.0106347576, 2.0095752371, 2.0085591121,
    2.0075837703, 2.0066468051, 2.0057459953, 2.0048792882, 2.0040447833,
    2.0032407188, 2.0024654593, 2.0017174841, 2.0009953781, 2.0002978220,
    1.9996235850, 1.9989715170, 1.9983405425, 1.9977296543, 1.9971379084,
    1.9965644190, 1.9960083540, 1.9954689314, 1.9949454151, 1.9944371118,
    1.9939433678, 1.9934635667, 1.9929971259, 1.9925434952, 1.9921021540,
    1.9916726096, 1.9912543954, 1.9908470688, 1.9904502102, 1.9900634213,
    1.9896863235, 1.9893185571, 1.9889597802, 1.9886096670, 1.9882679075,
    1.9879342062, 1.9876082816, 1.9872898648, 1.9869786995, 1.9866745407,
    1.9863771544, 1.9860863170, 1.9858018143, 1.9855234419, 1.9852510035,
    1.9849843115, 1.9847231860, 1.9844674544, 1.9842169515, 1.9839715184,
    1.9837310029, 1.9834952585, 1.9832641447, 1.9830375264, 1.9828152737,
    1.9825972617, 1.9823833701, 1.9821734833, 1.9819674897, 1.9817652821,
    1.9815667570, 1.9813718148, 1.9811803594, 1.9809922979, 1.9808075411,
    1.9806260024, 1.9804475986, 1.9802722492, 1.9800998764, 1.9799304051,
    1.9797637625, 1.9795998785, 1.9794386851, 1.9792801166, 1.9791241094,
    1.9789706020, 1.9788195347, 1.9786708498, 1.9785244915, 1.9783804054,
    1.9782385392, 1.9780988419, 1.9779612642, 1.9778257581, 1.9776922772,
    1.9775607765, 1.9774312123, 1.9773035420, 1.9771777245, 1.9770537196,
    1.9769314886, 1.9768109936, 1.9766921979, 1.9765750658, 1.9764595626,
    1.9763456546, 1.9762333089, 1.9761224936, 1.9760131777, 1.9759053309,
    1.9757989238, 1.9756939278, 1.9755903150, 1.9754880582, 1.9753871310,
    1.9752875077, 1.9751891631, 1.9750920727, 1.9749962128, 1.9749015600,
    1.9748080917, 1.9747157859, 1.9746246210, 1.9745345759, 1.9744456301,
    1.9743577637, 1.9742709570, 1.9741851911, 1.9741004474, 1.9740167076,
    1.9739339541, 1.9738521695, 1.9737713369, 1.9736914398, 1.9736124619,
    1.9735343877, 1.9734572016, 1.9733808885, 1.9733054338, 1.9732308231,
    1.9731570422, 1.9730840773, 1.9730119151, 1.9729405424, 1.9728699462,
    1.9728001140, 1.9727310334, 1.9726626924, 1.9725950791, 1.9725281820,
    1.9724619898, 1.9723964913, 1.9723316758, 1.9722675326, 1.9722040513,
    1.9721412217, 1.9720790338, 1.9720174778, 1.9719565442, 1.9718962236,
};

void CheckUnit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, std::string(what) + " outside [0, 1]");
  }
}

}  // namespace

EvalReport ComputeMetrics(std::span<const double> scores,
                          std::span<const Label> labels, double threshold) {
  if (scores.size() != labels.size()) {
    throw Error(ErrorKind::kLengthMismatch, "scores and labels differ in length");
  }
  if (scores.empty()) throw Error(ErrorKind::kEmptyInput, "no examples to score");
  CheckUnit(threshold, "threshold");

  EvalReport r;
  r.threshold_used = threshold;
  r.n = static_cast<int64_t>(scores.size());
  for (size_t i = 0; i < scores.size(); ++i) {
    CheckUnit(scores[i], "score");
    const bool flagged = DecideLabel(scores[i], threshold) == Label::kContradict;
    const bool positive = labels[i] == Label::kContradict;
    if (flagged && positive) ++r.tp;
    else if (flagged) ++r.fp;
    else if (positive) ++r.fn;
    else ++r.tn;
  }
  r.accuracy = static_cast<double>(r.tp + r.tn) / static_cast<double>(r.n);
  r.precision = r.tp + r.fp == 0 ? 0.0 : static_cast<double>(r.tp) / (r.tp + r.fp);
  r.recall = r.tp + r.fn == 0 ? 0.0 : static_cast<double>(r.tp) / (r.tp + r.fn);
  // Harmonic mean of precision and recall, in count form.
  r.f1 = r.tp == 0 ? 0.0
                   : static_cast<double>(2 * r.tp) /
                         static_cast<double>(2 * r.tp + r.fp + r.fn);
  return r;
}

std::optional<TuningObjective> ParseTuningObjective(std::string_view name) {
  if (name == "accuracy") return TuningObjective::kAccuracy;
  if (name == "f1") return TuningObjective::kF1;
  return std::nullopt;
}

double ObjectiveValue(const EvalReport& report, TuningObjective objective) {
  return objective == TuningObjective::kAccuracy ? report.accuracy : report.f1;
}

double TuneThreshold(std::span<const double> dev_scores,
                     std::span<const Label> dev_labels,
                     TuningObjective objective) {
  if (dev_scores.size() != dev_labels.size()) {
    throw Error(ErrorKind::kLengthMismatch, "scores and labels differ in length");
  }
  if (dev_scores.empty()) throw Error(ErrorKind::kEmptyInput, "empty dev set");

  std::vector<double> sorted(dev_scores.begin(), dev_scores.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<double> candidates = {0.0, 1.0};
  for (size_t i = 0; i + 1 < sorted.size(); ++i) {
    candidates.push_back(sorted[i] + (sorted[i + 1] - sorted[i]) / 2.0);
  }
  std::sort(candidates.begin(), candidates.end());

  double best_threshold = candidates.front();
  double best_value = -1.0;
  for (double t : candidates) {
    const double value =
        ObjectiveValue(ComputeMetrics(dev_scores, dev_labels, t), objective);
    if (value > best_value) {
      best_value = value;
      best_threshold = t;
    }
  }
  return best_threshold;
}

double TCritical95(int degrees_of_freedom) {
  if (degrees_of_freedom < 1) {
    throw Error(ErrorKind::kInvalidArgument, "degrees of freedom must be >= 1");
  }
  if (degrees_of_freedom > static_cast<int>(kTCritical.size())) return 1.96;
  return kTCritical[degrees_of_freedom - 1];
}

SignificanceResult PairedTTest(std::span<const double> runs_a,
                               std::span<const double> runs_b) {
  if (runs_a.size() != runs_b.size()) {
    throw Error(ErrorKind::kLengthMismatch, "run sequences differ in length");
  }
  if (runs_a.size() < 2) {
    throw Error(ErrorKind::kTooFewRuns, "paired t-test needs at least 2 runs");
  }
  const size_t n = runs_a.size();
  std::vector<double> d(n);
  for (size_t i = 0; i < n; ++i) d[i] = runs_a[i] - runs_b[i];
  const double mean = std::accumulate(d.begin(), d.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : d) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));

  SignificanceResult r;
  r.degrees_of_freedom = static_cast<int>(n - 1);
  if (sd == 0.0) {
    if (mean == 0.0) {
      r.t_statistic = 0.0;
      r.significant_at_95 = false;
    } else {
      r.t_statistic = std::copysign(std::numeric_limits<double>::infinity(), mean);
      r.significant_at_95 = true;
    }
    return r;
  }
  r.t_statistic = mean * std::sqrt(static_cast<double>(n)) / sd;
  r.significant_at_95 =
      std::fabs(r.t_statistic) >= TCritical95(r.degrees_of_freedom);
  return r;
}

std::string EvalReportToJson(const EvalReport& r) {
  wire::Json doc;
  doc["accuracy"] = r.accuracy;
  doc["precision"] = r.precision;
  doc["recall"] = r.recall;
  doc["f1"] = r.f1;
  doc["tp"] = r.tp;
  doc["fp"] = r.fp;
  doc["tn"] = r.tn;
  doc["fn"] = r.fn;
  doc["threshold_used"] = r.threshold_used;
  doc["n"] = r.n;
  return doc.dump();
}

EvalReport EvalReportFromJson(std::string_view json) {
  try {
    auto doc = wire::Json::parse(json);
    EvalReport r;
    r.accuracy = doc.at("accuracy").get<double>();
    r.precision = doc.at("precision").get<double>();
    r.recall = doc.at("recall").get<double>();
    r.f1 = doc.at("f1").get<double>();
    r.tp = doc.at("tp").get<int64_t>();
    r.fp = doc.at("fp").get<int64_t>();
    r.tn = doc.at("tn").get<int64_t>();
    r.fn = doc.at("fn").get<int64_t>();
    r.threshold_used = doc.at("threshold_used").get<double>();
    r.n = doc.at("n").get<int64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParseError, std::string("bad report: ") + e.what());
  }
}

std::string FormatEvalTable(const EvalReport& r) {
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "%-10s %-10s %-10s %-10s\n"
                "%-10.4f %-10.4f %-10.4f %-10.4f\n"
                "tp=%lld fp=%lld tn=%lld fn=%lld n=%lld threshold=%.4f\n",
                "Accuracy", "Precision", "Recall", "F1", r.accuracy, r.precision,
                r.recall, r.f1, static_cast<long long>(r.tp),
                static_cast<long long>(r.fp), static_cast<long long>(r.tn),
                static_cast<long long>(r.fn), static_cast<long long>(r.n),
                r.threshold_used);
  return buf;
}

}  // namespace hhd
