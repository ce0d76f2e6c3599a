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

#include "hhd/features.h"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <unordered_map>

#include "hhd/csv.h"
#include "hhd/errors.h"
#include "hhd/jaro_winkler.h"
#include "hhd/text.h"
#include "hhd/wire.h"

namespace hhd {

double JaroWinklerChars(std::string_view a, std::string_view b) {
  std::u32string ca = DecodeUtf8(a), cb = DecodeUtf8(b);
  return JaroWinkler(std::span<const char32_t>(ca.data(), ca.size()),
                     std::span<const char32_t>(cb.data(), cb.size()));
}

const std::array<std::string_view, kNumFeatures>& FeatureVector::Names() {
  static constexpr std::array<std::string_view, kNumFeatures> kNames = {
      "headline_len_tokens", "article_len_tokens",  "headline_len_chars",
      "article_len_chars",   "overlap_word_count",  "overlap_word_ratio",
      "jaro_winkler_tokens", "jaro_winkler_chars_title"};
  return kNames;
}

std::array<double, kNumFeatures> FeatureVector::AsArray() const {
  return {static_cast<double>(headline_len_tokens),
          static_cast<double>(article_len_tokens),
          static_cast<double>(headline_len_chars),
          static_cast<double>(article_len_chars),
          static_cast<double>(overlap_word_count),
          overlap_word_ratio,
          jaro_winkler_tokens,
          jaro_winkler_chars_title};
}

FeatureVector ExtractFeatures(const LabeledExample& example) {
  const auto& title = example.article.title;
  const auto& body = example.article.body;
  auto headline = NormalizedTokens(example.headline.text);
  auto article = NormalizedTokens(title + " " + body);

  FeatureVector f;
  f.headline_len_tokens = static_cast<int64_t>(headline.size());
  f.article_len_tokens = static_cast<int64_t>(article.size());
  f.headline_len_chars =
      static_cast<int64_t>(DecodeUtf8(example.headline.text).size());
  f.article_len_chars =
      static_cast<int64_t>(DecodeUtf8(title).size() + DecodeUtf8(body).size());

  std::unordered_map<std::string, int64_t> available;
  for (const auto& w : article) ++available[w];
  for (const auto& w : headline) {
    auto it = available.find(w);
    if (it != available.end() && it->second > 0) {
      --it->second;
      ++f.overlap_word_count;
    }
  }
  f.overlap_word_ratio =
      headline.empty() ? 0.0
                       : static_cast<double>(f.overlap_word_count) / headline.size();
  f.jaro_winkler_tokens = JaroWinkler(headline, article);
  f.jaro_winkler_chars_title = JaroWinklerChars(example.headline.text, title);
  return f;
}

namespace {

double Sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

std::string FormatReal(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

double LinearModel::PredictProbability(const FeatureVector& features) const {
  auto x = features.AsArray();
  double z = bias;
  for (size_t i = 0; i < kNumFeatures; ++i) z += weights[i] * x[i];
  return Sigmoid(z);
}

LinearModel TrainLinear(std::span<const FeatureVector> features,
                        std::span<const Label> labels,
                        const LinearTrainingOptions& options) {
  if (features.size() != labels.size()) {
    throw Error(ErrorKind::kLengthMismatch, "features and labels differ in length");
  }
  size_t positives = 0;
  for (Label l : labels) positives += l == Label::kContradict;
  if (positives == 0 || positives == labels.size()) {
    throw Error(ErrorKind::kDegenerateData,
                "training data needs both entail and contradict examples");
  }
  const size_t n = features.size();
  std::vector<std::array<double, kNumFeatures>> x(n);
  std::array<double, kNumFeatures> mean{}, scale{};
  for (size_t r = 0; r < n; ++r) {
    x[r] = features[r].AsArray();
    for (size_t c = 0; c < kNumFeatures; ++c) mean[c] += x[r][c];
  }
  for (auto& m : mean) m /= static_cast<double>(n);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < kNumFeatures; ++c) {
      scale[c] += (x[r][c] - mean[c]) * (x[r][c] - mean[c]);
    }
  }
  for (auto& s : scale) s = std::sqrt(s / static_cast<double>(n));
  for (auto& row : x) {
    for (size_t c = 0; c < kNumFeatures; ++c) {
      row[c] = scale[c] > 0 ? (row[c] - mean[c]) / scale[c] : 0.0;
    }
  }

  std::mt19937_64 rng(options.seed);
  std::array<double, kNumFeatures> w{};
  for (auto& wi : w) {
    wi = (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 0.02;
  }
  double b = 0.0;
  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    std::array<double, kNumFeatures> grad{};
    double grad_b = 0.0;
    for (size_t r = 0; r < n; ++r) {
      double z = b;
      for (size_t c = 0; c < kNumFeatures; ++c) z += w[c] * x[r][c];
      const double err = Sigmoid(z) - LabelToBinary(labels[r]);
      for (size_t c = 0; c < kNumFeatures; ++c) grad[c] += err * x[r][c];
      grad_b += err;
    }
    for (size_t c = 0; c < kNumFeatures; ++c) {
      w[c] -= options.learning_rate * grad[c] / static_cast<double>(n);
    }
    b -= options.learning_rate * grad_b / static_cast<double>(n);
  }

  LinearModel model;
  model.bias = b;
  for (size_t c = 0; c < kNumFeatures; ++c) {
    if (scale[c] > 0) {
      model.weights[c] = w[c] / scale[c];
      model.bias -= w[c] * mean[c] / scale[c];
    }
  }
  return model;
}

std::string LinearModelToJson(const LinearModel& model) {
  wire::Json doc;
  doc["version"] = kFeatureVersion;
  doc["features"] = wire::Json::array();
  for (auto name : FeatureVector::Names()) doc["features"].push_back(name);
  doc["weights"] = model.weights;
  doc["bias"] = model.bias;
  return doc.dump(2);
}

LinearModel LinearModelFromJson(std::string_view json) {
  LinearModel model;
  try {
    auto doc = wire::Json::parse(json);
    if (doc.at("version").get<int>() != kFeatureVersion) {
      throw Error(ErrorKind::kParseError, "unsupported feature version");
    }
    auto names = doc.at("features").get<std::vector<std::string>>();
    auto weights = doc.at("weights").get<std::vector<double>>();
    if (names.size() != kNumFeatures || weights.size() != kNumFeatures) {
      throw Error(ErrorKind::kParseError, "model has the wrong dimensionality");
    }
    for (size_t i = 0; i < kNumFeatures; ++i) {
      if (names[i] != FeatureVector::Names()[i]) {
        throw Error(ErrorKind::kParseError, "feature order mismatch at " + names[i]);
      }
      model.weights[i] = weights[i];
    }
    model.bias = doc.at("bias").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParseError, std::string("bad model file: ") + e.what());
  }
  return model;
}

void WriteFeatureCsv(std::span<const FeatureRow> rows, std::ostream& out) {
  out << "id";
  for (auto name : FeatureVector::Names()) out << ',' << name;
  out << ",label\n";
  for (const auto& row : rows) {
    const auto& f = row.features;
    out << CsvField(row.id) << ',' << f.headline_len_tokens << ','
        << f.article_len_tokens << ',' << f.headline_len_chars << ','
        << f.article_len_chars << ',' << f.overlap_word_count << ','
        << FormatReal(f.overlap_word_ratio) << ','
        << FormatReal(f.jaro_winkler_tokens) << ','
        << FormatReal(f.jaro_winkler_chars_title) << ',';
    if (row.label) out << LabelToBinary(*row.label);
    out << '\n';
  }
}

std::vector<FeatureRow> ReadFeatureCsv(std::istream& in, const std::string& path) {
  auto records = ReadCsv(in, path);
  if (records.empty()) throw ParseError(path, 1, "missing header");
  std::vector<std::string> expected = {"id"};
  for (auto name : FeatureVector::Names()) expected.emplace_back(name);
  expected.emplace_back("label");
  if (records[0].fields != expected) {
    throw ParseError(path, records[0].line, "unexpected header");
  }
  std::vector<FeatureRow> rows;
  for (size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != expected.size()) {
      throw ParseError(path, rec.line, "expected " + std::to_string(expected.size()) +
                                           " fields");
    }
    FeatureRow row;
    row.id = rec.fields[0];
    try {
      auto& f = row.features;
      f.headline_len_tokens = std::stoll(rec.fields[1]);
      f.article_len_tokens = std::stoll(rec.fields[2]);
      f.headline_len_chars = std::stoll(rec.fields[3]);
      f.article_len_chars = std::stoll(rec.fields[4]);
      f.overlap_word_count = std::stoll(rec.fields[5]);
      f.overlap_word_ratio = std::stod(rec.fields[6]);
      f.jaro_winkler_tokens = std::stod(rec.fields[7]);
      f.jaro_winkler_chars_title = std::stod(rec.fields[8]);
    } catch (const std::exception&) {
      throw ParseError(path, rec.line, "non-numeric feature value");
    }
    const std::string& label = rec.fields[9];
    if (label == "0" || label == "1") {
      row.label = LabelFromBinary(label[0] - '0');
    } else if (!label.empty()) {
      throw ParseError(path, rec.line, "label must be 0, 1 or empty");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hhd
