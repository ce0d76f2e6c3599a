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

#include "hhd/dataset_io.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hhd/csv.h"
#include "hhd/errors.h"
#include "hhd/wire.h"

namespace hhd {
namespace {

using Json = wire::Json;

std::ifstream OpenIn(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIoError, "cannot open " + path);
  return in;
}

std::ofstream OpenOut(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIoError, "cannot write " + path);
  return out;
}

// Optional string field: absent and null both read as nullopt.
std::optional<std::string> OptString(const Json& obj, const char* key,
                                     const std::string& path, size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw ParseError(path, line, std::string("field '") + key + "' must be a string");
  }
  return it->get<std::string>();
}

std::string IdField(const Json& obj, const char* key, const std::string& path,
                    size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) {
    throw ParseError(path, line, std::string("missing '") + key + "'");
  }
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_integer()) return std::to_string(it->get<int64_t>());
  throw ParseError(path, line, std::string("'") + key + "' must be a string or integer");
}

template <typename Fn>
void ForEachJsonLine(std::istream& in, const std::string& path, Fn&& fn) {
  std::string text;
  size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (Trim(text).empty()) continue;
    Json obj;
    try {
      obj = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path, line, std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) throw ParseError(path, line, "record is not an object");
    fn(obj, line);
  }
}

void Require(const LabeledExample& ex, const std::string& path, size_t line) {
  if (!ex.headline.IsValid()) throw ParseError(path, line, "empty headline");
  if (!ex.article.IsValid()) throw ParseError(path, line, "empty article");
}

std::optional<ArticleLayout> ParseLayout(std::string_view name) {
  if (name == "title_passage") return ArticleLayout::kTitlePassage;
  if (name == "concatenate") return ArticleLayout::kConcatenate;
  return std::nullopt;
}

std::string_view LayoutName(ArticleLayout layout) {
  return layout == ArticleLayout::kTitlePassage ? "title_passage" : "concatenate";
}

void ReadHhd(std::istream& in, const std::string& path, Dataset& ds) {
  ForEachJsonLine(in, path, [&](const Json& obj, size_t line) {
    LabeledExample ex;
    ex.id = IdField(obj, "id", path, line);
    ex.article.title = OptString(obj, "article_title", path, line).value_or("");
    ex.article.body = OptString(obj, "article_body", path, line).value_or("");
    ex.headline.text = OptString(obj, "headline", path, line).value_or("");
    if (auto label = OptString(obj, "label", path, line)) {
      ex.label = ParseLabelName(*label);
      if (!ex.label) throw ParseError(path, line, "unknown label '" + *label + "'");
    }
    if (auto e = OptString(obj, "explanation", path, line); e && !e->empty()) {
      if (!ex.label) throw ParseError(path, line, "explanation without a label");
      ex.explanation = Explanation{*e};
    }
    if (auto layout = OptString(obj, "article_layout", path, line)) {
      ex.article.layout = ParseLayout(*layout);
      if (!ex.article.layout) throw ParseError(path, line, "unknown article_layout");
    }
    if (auto origin = OptString(obj, "origin", path, line)) {
      auto parsed = ParseOriginName(*origin);
      if (!parsed) throw ParseError(path, line, "unknown origin '" + *origin + "'");
      ex.origin = *parsed;
    }
    Split split = Split::kUnsplit;
    if (auto s = OptString(obj, "split", path, line)) {
      auto parsed = ParseSplitName(*s);
      if (!parsed) throw ParseError(path, line, "unknown split '" + *s + "'");
      split = *parsed;
    }
    Require(ex, path, line);
    ds.examples.push_back(std::move(ex));
    ds.splits.push_back(split);
  });
}

// Returns false when the item was skipped.
bool AdaptOrSkip(std::string id, const std::string& premise,
                 const std::string& hypothesis, const std::string& label_text,
                 const std::vector<std::string>& explanations,
                 const ReadOptions& options, const std::string& path, size_t line,
                 Dataset& ds) {
  auto label = ParseNliLabel(label_text);
  if (!label) throw ParseError(path, line, "unknown NLI label '" + label_text + "'");
  if (*label == NliLabel::kNeutral && !options.neutral) {
    ++ds.skipped_neutral;
    return false;
  }
  try {
    ds.examples.push_back(AdaptNliExample(
        std::move(id), premise, hypothesis, *label, explanations,
        options.neutral.value_or(NeutralPolicy::kReject)));
  } catch (const Error& e) {
    throw ParseError(path, line, e.what());
  }
  ds.splits.push_back(Split::kUnsplit);
  return true;
}

std::map<std::string, size_t> HeaderIndex(const CsvRecord& header) {
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < header.fields.size(); ++i) {
    std::string name(Trim(header.fields[i]));
    // Tolerate a UTF-8 byte order mark on the first column.
    if (i == 0 && name.rfind("\xEF\xBB\xBF", 0) == 0) name.erase(0, 3);
    index.emplace(name, i);
  }
  return index;
}

size_t Column(const std::map<std::string, size_t>& index,
              std::initializer_list<const char*> names, const std::string& path) {
  for (const char* name : names) {
    if (auto it = index.find(name); it != index.end()) return it->second;
  }
  throw ParseError(path, 1, std::string("missing column '") + *names.begin() + "'");
}

const std::string& FieldAt(const CsvRecord& rec, size_t col,
                           const std::string& path) {
  if (col >= rec.fields.size()) {
    throw ParseError(path, rec.line, "record has too few fields");
  }
  return rec.fields[col];
}

void ReadEsnli(std::istream& in, const std::string& path,
               const ReadOptions& options, Dataset& ds) {
  auto records = ReadCsv(in, path);
  if (records.empty()) return;
  auto index = HeaderIndex(records[0]);
  const size_t id_col = Column(index, {"pairID"}, path);
  const size_t label_col = Column(index, {"gold_label"}, path);
  const size_t premise_col = Column(index, {"Sentence1"}, path);
  const size_t hypothesis_col = Column(index, {"Sentence2"}, path);
  std::vector<size_t> expl_cols;
  for (const char* name : {"Explanation_1", "Explanation_2", "Explanation_3"}) {
    if (auto it = index.find(name); it != index.end()) expl_cols.push_back(it->second);
  }
  for (size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    std::vector<std::string> explanations;
    for (size_t col : expl_cols) explanations.push_back(FieldAt(rec, col, path));
    AdaptOrSkip(FieldAt(rec, id_col, path), FieldAt(rec, premise_col, path),
                FieldAt(rec, hypothesis_col, path), FieldAt(rec, label_col, path),
                explanations, options, path, rec.line, ds);
  }
}

void ReadAnli(std::istream& in, const std::string& path,
              const ReadOptions& options, Dataset& ds) {
  ForEachJsonLine(in, path, [&](const Json& obj, size_t line) {
    std::string uid = IdField(obj, "uid", path, line);
    std::string premise = OptString(obj, "premise", path, line).value_or("");
    std::string hypothesis = OptString(obj, "hypothesis", path, line).value_or("");
    std::string label = OptString(obj, "label", path, line).value_or("");
    std::vector<std::string> reasons;
    for (const char* key : {"reason", "reasons", "explanations"}) {
      auto it = obj.find(key);
      if (it == obj.end() || it->is_null()) continue;
      if (it->is_string()) {
        reasons.push_back(it->get<std::string>());
      } else if (it->is_array()) {
        for (const auto& r : *it) {
          if (!r.is_string()) throw ParseError(path, line, "reason must be a string");
          reasons.push_back(r.get<std::string>());
        }
      } else {
        throw ParseError(path, line, std::string("'") + key + "' must be text");
      }
    }
    std::erase_if(reasons, [](const std::string& r) { return Trim(r).empty(); });
    if (reasons.size() <= 1) {
      AdaptOrSkip(uid, premise, hypothesis, label, reasons, options, path, line, ds);
      return;
    }
    for (size_t i = 0; i < reasons.size(); ++i) {
      std::vector<std::string> one = {reasons[i]};
      if (!AdaptOrSkip(uid + "#r" + std::to_string(i + 1), premise, hypothesis,
                       label, one, options, path, line, ds)) {
        break;
      }
    }
  });
}

void ReadTrue(std::istream& in, const std::string& path,
              const ReadOptions& options, Dataset& ds) {
  std::string name = options.true_dataset_name;
  if (name.empty()) name = std::filesystem::path(path).stem().string();
  TruePolarity polarity;
  if (auto it = TrueDatasetRegistry().find(name); it != TrueDatasetRegistry().end()) {
    polarity = it->second;
  }
  auto records = ReadCsv(in, path);
  if (records.empty()) return;
  auto index = HeaderIndex(records[0]);
  const size_t grounding_col = Column(index, {"grounding"}, path);
  const size_t target_col = Column(index, {"generated_text", "target"}, path);
  const size_t label_col = Column(index, {polarity.label_column.c_str()}, path);
  for (size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    TrueRecord tr;
    tr.grounding = FieldAt(rec, grounding_col, path);
    tr.target = FieldAt(rec, target_col, path);
    std::string flag(Trim(FieldAt(rec, label_col, path)));
    if (flag.empty()) throw ParseError(path, rec.line, "empty label");
    // Accept "1.0" for "1" and the like.
    try {
      size_t used = 0;
      double numeric = std::stod(flag, &used);
      if (used == flag.size()) {
        flag = std::to_string(static_cast<int64_t>(numeric));
        if (numeric != 0.0 && numeric != 1.0) {
          throw ParseError(path, rec.line, "label must be 0 or 1");
        }
      }
    } catch (const std::logic_error&) {
    }
    tr.grounded_flag = flag == polarity.grounded_value;
    tr.dataset_name = name;
    LabeledExample ex = TrueRecordToExample(tr, name + "-" + std::to_string(r));
    Require(ex, path, rec.line);
    ds.examples.push_back(std::move(ex));
    ds.splits.push_back(Split::kUnsplit);
  }
}

}  // namespace

DatasetFormat ParseDatasetFormat(std::string_view name) {
  if (name == "hhd") return DatasetFormat::kHhdJsonl;
  if (name == "esnli") return DatasetFormat::kEsnliCsv;
  if (name == "anli") return DatasetFormat::kAnliJsonl;
  if (name == "true") return DatasetFormat::kTrueCsv;
  throw Error(ErrorKind::kUnknownFormat, "unknown format '" + std::string(name) + "'");
}

std::string_view SplitName(Split split) {
  switch (split) {
    case Split::kTrain: return "train";
    case Split::kValidation: return "validation";
    case Split::kTest: return "test";
    case Split::kUnsplit: return "unsplit";
  }
  return "unsplit";
}

std::optional<Split> ParseSplitName(std::string_view name) {
  for (auto s : {Split::kTrain, Split::kValidation, Split::kTest, Split::kUnsplit}) {
    if (name == SplitName(s)) return s;
  }
  if (name == "dev") return Split::kValidation;
  return std::nullopt;
}

DatasetManifest CountManifest(std::string name, Split split,
                              std::span<const LabeledExample> examples) {
  DatasetManifest m;
  m.name = std::move(name);
  m.split = split;
  m.count = static_cast<int64_t>(examples.size());
  for (const auto& ex : examples) {
    if (ex.label == Label::kContradict) ++m.positive_count;
    if (ex.HasExplanation()) ++m.with_explanation_count;
  }
  return m;
}

std::vector<DatasetManifest> Dataset::SplitManifests() const {
  std::vector<DatasetManifest> out;
  for (auto s : {Split::kTrain, Split::kValidation, Split::kTest, Split::kUnsplit}) {
    std::vector<LabeledExample> part;
    for (size_t i = 0; i < examples.size(); ++i) {
      if (splits[i] == s) part.push_back(examples[i]);
    }
    if (!part.empty()) out.push_back(CountManifest(manifest.name, s, part));
  }
  return out;
}

const std::map<std::string, TruePolarity, std::less<>>& TrueDatasetRegistry() {
  static const auto* registry = new std::map<std::string, TruePolarity, std::less<>>{
      {"mnbm", {}},   {"frank", {}},  {"qags", {}},   {"qags_c", {}},
      {"qags_x", {}}, {"summeval", {}}, {"fever", {}}, {"vitc", {}},
  };
  return *registry;
}

LabeledExample TrueRecordToExample(const TrueRecord& record, std::string id) {
  LabeledExample ex;
  ex.id = std::move(id);
  ex.article.body = record.grounding;
  ex.article.layout = ArticleLayout::kConcatenate;
  ex.article.source_id = record.dataset_name;
  ex.headline.text = record.target;
  ex.label = record.grounded_flag ? Label::kEntail : Label::kContradict;
  return ex;
}

Dataset ReadExamplesFrom(std::istream& in, const std::string& path,
                         DatasetFormat format, const ReadOptions& options) {
  Dataset ds;
  switch (format) {
    case DatasetFormat::kHhdJsonl: ReadHhd(in, path, ds); break;
    case DatasetFormat::kEsnliCsv: ReadEsnli(in, path, options, ds); break;
    case DatasetFormat::kAnliJsonl: ReadAnli(in, path, options, ds); break;
    case DatasetFormat::kTrueCsv: ReadTrue(in, path, options, ds); break;
  }
  Split split = Split::kUnsplit;
  if (!ds.splits.empty() &&
      std::all_of(ds.splits.begin(), ds.splits.end(),
                  [&](Split s) { return s == ds.splits.front(); })) {
    split = ds.splits.front();
  }
  ds.manifest = CountManifest(std::filesystem::path(path).stem().string(), split,
                              ds.examples);
  return ds;
}

Dataset ReadExamples(const std::string& path, DatasetFormat format,
                     const ReadOptions& options) {
  auto in = OpenIn(path);
  return ReadExamplesFrom(in, path, format, options);
}

std::string ExampleToJsonLine(const LabeledExample& ex, std::optional<Split> split) {
  Json obj;
  obj["id"] = ex.id;
  obj["article_title"] = ex.article.title;
  obj["article_body"] = ex.article.body;
  obj["headline"] = ex.headline.text;
  obj["label"] = ex.label ? Json(LabelName(*ex.label)) : Json(nullptr);
  obj["explanation"] = ex.explanation ? Json(ex.explanation->text) : Json(nullptr);
  if (split && *split != Split::kUnsplit) obj["split"] = SplitName(*split);
  if (ex.article.layout) obj["article_layout"] = LayoutName(*ex.article.layout);
  if (ex.origin != ExampleOrigin::kHuman) obj["origin"] = OriginName(ex.origin);
  return obj.dump();
}

void WriteExamples(std::span<const LabeledExample> examples, std::ostream& out) {
  for (const auto& ex : examples) out << ExampleToJsonLine(ex) << '\n';
}

void WriteExamples(std::span<const LabeledExample> examples,
                   const std::string& path) {
  auto out = OpenOut(path);
  WriteExamples(examples, out);
  if (!out) throw Error(ErrorKind::kIoError, "write failed: " + path);
}

std::string PredictionToJsonLine(const std::string& id, const Prediction& p) {
  Json obj;
  obj["id"] = id;
  obj["hallucination_prob"] = p.hallucination_prob;
  obj["label"] = LabelName(p.label);
  obj["explanation"] = p.explanation.text;
  obj["reasoning_prob"] = p.reasoning_prob ? Json(*p.reasoning_prob) : Json(nullptr);
  obj["hinted_prob"] = p.hinted_prob ? Json(*p.hinted_prob) : Json(nullptr);
  obj["mode"] = PipelineModeName(p.mode);
  if (p.warning) obj["warning"] = *p.warning;
  return obj.dump();
}

void WritePredictions(std::span<const Prediction> preds,
                      std::span<const std::string> ids, const std::string& path) {
  if (preds.size() != ids.size()) {
    throw Error(ErrorKind::kLengthMismatch, "predictions and ids differ in length");
  }
  auto out = OpenOut(path);
  for (size_t i = 0; i < preds.size(); ++i) {
    out << PredictionToJsonLine(ids[i], preds[i]) << '\n';
  }
  if (!out) throw Error(ErrorKind::kIoError, "write failed: " + path);
}

void WriteOutcomes(std::span<const ScoreOutcome> outcomes,
                   std::span<const std::string> ids, std::ostream& out) {
  if (outcomes.size() != ids.size()) {
    throw Error(ErrorKind::kLengthMismatch, "outcomes and ids differ in length");
  }
  for (size_t i = 0; i < outcomes.size(); ++i) {
    if (const auto* pred = std::get_if<Prediction>(&outcomes[i])) {
      out << PredictionToJsonLine(ids[i], *pred) << '\n';
    } else {
      const auto& failure = std::get<ScoreFailure>(outcomes[i]);
      Json obj;
      obj["id"] = ids[i];
      obj["error"] = ErrorKindName(failure.kind);
      obj["message"] = failure.message;
      out << obj.dump() << '\n';
    }
  }
}

void WriteOutcomes(std::span<const ScoreOutcome> outcomes,
                   std::span<const std::string> ids, const std::string& path) {
  auto out = OpenOut(path);
  WriteOutcomes(outcomes, ids, out);
  if (!out) throw Error(ErrorKind::kIoError, "write failed: " + path);
}

std::vector<PredictionRecord> ReadPredictionsFrom(std::istream& in,
                                                  const std::string& path) {
  std::vector<PredictionRecord> records;
  ForEachJsonLine(in, path, [&](const Json& obj, size_t line) {
    PredictionRecord rec;
    rec.id = IdField(obj, "id", path, line);
    if (auto err = OptString(obj, "error", path, line)) {
      ScoreFailure failure{ErrorKind::kInvalidArgument,
                           OptString(obj, "message", path, line).value_or("")};
      for (int k = 0; k <= static_cast<int>(ErrorKind::kIoError); ++k) {
        if (ErrorKindName(static_cast<ErrorKind>(k)) == *err) {
          failure.kind = static_cast<ErrorKind>(k);
        }
      }
      rec.failure = failure;
      records.push_back(std::move(rec));
      return;
    }
    auto number = [&](const char* key) -> std::optional<double> {
      auto it = obj.find(key);
      if (it == obj.end() || it->is_null()) return std::nullopt;
      if (!it->is_number()) {
        throw ParseError(path, line, std::string("'") + key + "' must be a number");
      }
      return it->get<double>();
    };
    Prediction p;
    auto prob = number("hallucination_prob");
    if (!prob) throw ParseError(path, line, "missing 'hallucination_prob'");
    if (!(*prob >= 0.0 && *prob <= 1.0)) {
      throw ParseError(path, line, "hallucination_prob outside [0, 1]");
    }
    p.hallucination_prob = *prob;
    p.reasoning_prob = number("reasoning_prob");
    p.hinted_prob = number("hinted_prob");
    if (auto label = OptString(obj, "label", path, line)) {
      auto parsed = ParseLabelName(*label);
      if (!parsed) throw ParseError(path, line, "unknown label '" + *label + "'");
      p.label = *parsed;
    } else {
      p.label = DecideLabel(p.hallucination_prob, 0.5);
    }
    p.explanation.text = OptString(obj, "explanation", path, line).value_or("");
    if (auto mode = OptString(obj, "mode", path, line)) {
      auto parsed = ParsePipelineModeName(*mode);
      if (!parsed) throw ParseError(path, line, "unknown mode '" + *mode + "'");
      p.mode = *parsed;
    }
    p.warning = OptString(obj, "warning", path, line);
    rec.prediction = std::move(p);
    records.push_back(std::move(rec));
  });
  return records;
}

std::vector<PredictionRecord> ReadPredictions(const std::string& path) {
  auto in = OpenIn(path);
  return ReadPredictionsFrom(in, path);
}

}  // namespace hhd
