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

#include "hhd/cli.h"

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "hhd/augmentation.h"
#include "hhd/dataset_io.h"
#include "hhd/errors.h"
#include "hhd/features.h"
#include "hhd/http_backend.h"
#include "hhd/metrics.h"
#include "hhd/mock_backend.h"
#include "hhd/pipeline.h"
#include "hhd/server.h"

namespace hhd {
namespace {

template <typename T>
struct Flag {
  T value{};
  CLI::Option* opt = nullptr;

  bool set() const { return opt != nullptr && opt->count() > 0; }
};

// Flags mirroring the config file keys. Each subcommand owns one instance.
struct ConfigFlags {
  std::string config_path;

  Flag<std::string> backend;
  Flag<int> concurrency;
  Flag<int> max_attempts;
  Flag<bool> mock;
  Flag<std::string> mock_fixture;
  Flag<double> mock_temperature;

  Flag<std::string> entail_token;
  Flag<std::string> contradict_token;
  Flag<std::string> because_delimiter;
  Flag<std::string> headline_prefix;
  Flag<std::string> article_prefix;
  Flag<std::string> comment_prefix;
  Flag<std::string> explainer_class_separator;
  Flag<std::string> default_layout;

  Flag<std::string> mode;
  Flag<double> threshold;
  Flag<std::string> normalization;
  Flag<int64_t> seed;
  Flag<int> max_output_tokens;

  Flag<int> k;
  Flag<bool> no_dedupe;

  bool pipeline_seed = false;
  bool augmentation_seed = false;

  void AddConfig(CLI::App* app) {
    app->add_option("--config", config_path, "JSON config file")
        ->check(CLI::ExistingFile);
  }

  void AddBackend(CLI::App* app) {
    backend.opt = app->add_option("--backend", backend.value,
                                  "backend base URL, e.g. http://127.0.0.1:8080");
    concurrency.opt = app->add_option("--concurrency", concurrency.value,
                                      "max in-flight backend requests");
    max_attempts.opt = app->add_option("--max-attempts", max_attempts.value,
                                       "attempts per request on transport failure");
    AddMock(app, true);
  }

  void AddMock(CLI::App* app, bool with_switch) {
    if (with_switch) {
      mock.opt = app->add_flag("--mock", mock.value,
                               "use the built-in deterministic mock backend");
    }
    mock_fixture.opt = app->add_option("--mock-fixture", mock_fixture.value,
                                       "scripted mock fixture (implies --mock)")
                           ->check(CLI::ExistingFile);
    mock_temperature.opt = app->add_option(
        "--mock-temperature", mock_temperature.value, "mock heuristic temperature");
  }

  void AddTemplate(CLI::App* app) {
    entail_token.opt = app->add_option("--entail-token", entail_token.value);
    contradict_token.opt =
        app->add_option("--contradict-token", contradict_token.value);
    because_delimiter.opt =
        app->add_option("--because-delimiter", because_delimiter.value);
    headline_prefix.opt = app->add_option("--headline-prefix", headline_prefix.value);
    article_prefix.opt = app->add_option("--article-prefix", article_prefix.value);
    comment_prefix.opt = app->add_option("--comment-prefix", comment_prefix.value);
    explainer_class_separator.opt = app->add_option(
        "--explainer-class-separator", explainer_class_separator.value);
    default_layout.opt =
        app->add_option("--default-layout", default_layout.value)
            ->check(CLI::IsMember({"title_passage", "concatenate"}));
  }

  void AddPipeline(CLI::App* app) {
    mode.opt = app->add_option("--mode", mode.value, "full|no_hinted|no_explanation")
                   ->check(CLI::IsMember({"full", "no_hinted", "no_explanation"}));
    AddThreshold(app);
    normalization.opt =
        app->add_option("--normalization", normalization.value)
            ->check(CLI::IsMember({"renormalized_pair", "raw_first_token"}));
    seed.opt = app->add_option("--seed", seed.value, "backend sampling seed");
    max_output_tokens.opt =
        app->add_option("--max-output-tokens", max_output_tokens.value);
    pipeline_seed = true;
  }

  void AddThreshold(CLI::App* app) {
    threshold.opt = app->add_option("--threshold", threshold.value,
                                    "decision threshold in [0,1]");
  }

  void AddAugmentation(CLI::App* app) {
    k.opt = app->add_option("--k", k.value, "explanations generated per example");
    no_dedupe.opt = app->add_flag("--no-dedupe", no_dedupe.value,
                                  "keep duplicate generated explanations");
    seed.opt = app->add_option("--seed", seed.value, "explainer sampling seed");
    max_output_tokens.opt =
        app->add_option("--max-output-tokens", max_output_tokens.value);
    augmentation_seed = true;
  }

  CliConfig Resolve() const {
    CliConfig cfg;
    if (!config_path.empty()) cfg = LoadConfigFile(config_path, cfg);
    if (backend.set()) cfg.backend_url = backend.value;
    if (concurrency.set()) cfg.concurrency_limit = concurrency.value;
    if (max_attempts.set()) cfg.max_attempts = max_attempts.value;
    if (mock.set()) cfg.use_mock = mock.value;
    if (mock_fixture.set()) cfg.mock_fixture = mock_fixture.value;
    if (mock_temperature.set()) cfg.mock_temperature = mock_temperature.value;

    auto& t = cfg.templates;
    if (entail_token.set()) t.class_tokens.entail = entail_token.value;
    if (contradict_token.set()) t.class_tokens.contradict = contradict_token.value;
    if (because_delimiter.set()) t.because_delimiter = because_delimiter.value;
    if (headline_prefix.set()) t.headline_prefix = headline_prefix.value;
    if (article_prefix.set()) t.article_prefix = article_prefix.value;
    if (comment_prefix.set()) t.comment_prefix = comment_prefix.value;
    if (explainer_class_separator.set()) {
      t.explainer_class_separator = explainer_class_separator.value;
    }
    if (default_layout.set()) {
      t.default_layout = default_layout.value == "concatenate"
                             ? ArticleLayout::kConcatenate
                             : ArticleLayout::kTitlePassage;
    }

    auto& p = cfg.pipeline;
    if (mode.set()) p.mode = *ParsePipelineModeName(mode.value);
    if (threshold.set()) p.threshold = threshold.value;
    if (normalization.set()) p.normalization = *ParseNormalizationName(normalization.value);
    if (max_output_tokens.set()) {
      p.max_output_tokens = max_output_tokens.value;
      cfg.augmentation.max_output_tokens = max_output_tokens.value;
    }
    if (seed.set() && pipeline_seed) p.seed = seed.value;
    if (seed.set() && augmentation_seed) cfg.augmentation.seed = seed.value;
    if (k.set()) cfg.augmentation.k = k.value;
    if (no_dedupe.set()) cfg.augmentation.dedupe = !no_dedupe.value;

    p.templates = cfg.templates;
    cfg.augmentation.concurrency = cfg.concurrency_limit;
    cfg.Validate();
    return cfg;
  }
};

std::ofstream OpenOutput(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIoError, "cannot write " + path);
  return out;
}

void WriteMeta(const std::string& out_path, const wire::Json& meta) {
  auto out = OpenOutput(out_path + ".meta.json");
  out << meta.dump(2) << '\n';
}

std::vector<std::string> Ids(std::span<const LabeledExample> examples) {
  std::vector<std::string> ids;
  ids.reserve(examples.size());
  for (const auto& ex : examples) ids.push_back(ex.id);
  return ids;
}

// Gold labels joined with predictions by id.
struct Joined {
  std::vector<double> scores;
  std::vector<Label> labels;
  size_t excluded_failures = 0;
};

Joined JoinPredictions(const std::string& pred_path, const std::string& gold_path,
                       std::ostream& err) {
  auto preds = ReadPredictions(pred_path);
  auto gold = ReadExamples(gold_path, DatasetFormat::kHhdJsonl);
  std::map<std::string, const PredictionRecord*> by_id;
  for (const auto& rec : preds) {
    if (!by_id.emplace(rec.id, &rec).second) {
      throw Error(ErrorKind::kParseError,
                  pred_path + ": duplicate prediction id '" + rec.id + "'");
    }
  }
  Joined joined;
  for (const auto& ex : gold.examples) {
    if (!ex.label) {
      throw Error(ErrorKind::kParseError,
                  gold_path + ": example '" + ex.id + "' has no label");
    }
    auto it = by_id.find(ex.id);
    if (it == by_id.end()) {
      throw Error(ErrorKind::kParseError,
                  pred_path + ": no prediction for id '" + ex.id + "'");
    }
    if (!it->second->prediction) {
      ++joined.excluded_failures;
      continue;
    }
    joined.scores.push_back(it->second->prediction->hallucination_prob);
    joined.labels.push_back(*ex.label);
  }
  if (joined.excluded_failures > 0) {
    err << "note: " << joined.excluded_failures
        << " failed prediction(s) excluded from evaluation\n";
  }
  return joined;
}

int ReportBackendFailures(size_t failures, size_t backend_failures,
                          std::ostream& err) {
  if (failures == 0) return kExitOk;
  err << "warning: " << failures << " example(s) failed";
  if (backend_failures > 0) err << " (" << backend_failures << " backend error(s))";
  err << "\n";
  return backend_failures > 0 ? kExitBackend : kExitOk;
}

}  // namespace

int ExitCodeFor(const Error& error) {
  if (error.IsBackendError()) return kExitBackend;
  switch (error.kind()) {
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kUnknownFormat:
      return kExitUsage;
    default:
      return kExitData;
  }
}

std::unique_ptr<Backend> MakeBackend(const CliConfig& cfg) {
  if (cfg.use_mock || cfg.mock_fixture) {
    MockBackendSpec spec;
    if (cfg.mock_fixture) spec = LoadMockFixture(*cfg.mock_fixture);
    spec.heuristic_temperature = cfg.mock_temperature;
    spec.templates = cfg.templates;
    return std::make_unique<MockBackend>(std::move(spec));
  }
  if (cfg.backend_url.empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                "no backend configured: pass --backend URL or --mock");
  }
  HttpBackendOptions options;
  options.url = cfg.backend_url;
  options.concurrency_limit = cfg.concurrency_limit;
  options.max_attempts = cfg.max_attempts;
  return std::make_unique<HttpBackend>(options);
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Headline hallucination detection toolkit", "hhd"};
  app.require_subcommand(1);

  // score
  ConfigFlags score_flags;
  std::string score_in, score_out;
  auto* score = app.add_subcommand("score", "score article/headline pairs");
  score->add_option("--in", score_in, "pairs JSONL")->required()->check(CLI::ExistingFile);
  score->add_option("--out", score_out, "predictions JSONL")->required();
  score_flags.AddConfig(score);
  score_flags.AddBackend(score);
  score_flags.AddTemplate(score);
  score_flags.AddPipeline(score);

  // eval
  ConfigFlags eval_flags;
  std::string eval_pred, eval_gold;
  bool eval_json = false;
  auto* eval = app.add_subcommand("eval", "metrics of predictions against gold labels");
  eval->add_option("--pred", eval_pred)->required()->check(CLI::ExistingFile);
  eval->add_option("--gold", eval_gold)->required()->check(CLI::ExistingFile);
  eval->add_flag("--json", eval_json, "machine-readable output");
  eval_flags.AddConfig(eval);
  eval_flags.AddThreshold(eval);

  // tune-threshold
  ConfigFlags tune_flags;
  std::string tune_pred, tune_gold, tune_objective = "accuracy";
  bool tune_json = false;
  auto* tune = app.add_subcommand("tune-threshold", "pick a cutoff on dev predictions");
  tune->add_option("--pred", tune_pred)->required()->check(CLI::ExistingFile);
  tune->add_option("--gold", tune_gold)->required()->check(CLI::ExistingFile);
  tune->add_option("--objective", tune_objective)
      ->check(CLI::IsMember({"accuracy", "f1"}));
  tune->add_flag("--json", tune_json);
  tune_flags.AddConfig(tune);

  // augment
  ConfigFlags aug_flags;
  std::string aug_in, aug_out;
  auto* augment = app.add_subcommand("augment", "add explainer-generated explanations");
  augment->add_option("--in", aug_in, "labeled JSONL")->required()->check(CLI::ExistingFile);
  augment->add_option("--out", aug_out, "augmented JSONL")->required();
  aug_flags.AddConfig(augment);
  aug_flags.AddBackend(augment);
  aug_flags.AddTemplate(augment);
  aug_flags.AddAugmentation(augment);

  // adapt
  std::string adapt_format, adapt_in, adapt_out, adapt_neutral = "skip", adapt_name;
  auto* adapt = app.add_subcommand("adapt", "convert eSNLI/ANLI/TRUE files to JSONL");
  adapt->add_option("--format", adapt_format)
      ->required()
      ->check(CLI::IsMember({"esnli", "anli", "true", "hhd"}));
  adapt->add_option("--in", adapt_in)->required()->check(CLI::ExistingFile);
  adapt->add_option("--out", adapt_out)->required();
  adapt->add_option("--neutral", adapt_neutral, "skip|reject|contradict")
      ->check(CLI::IsMember({"skip", "reject", "contradict"}));
  adapt->add_option("--dataset-name", adapt_name, "TRUE registry key");

  // emit-train
  ConfigFlags emit_flags;
  std::string emit_in, emit_jsonl, emit_tsv;
  std::vector<std::string> emit_components = {"reasoning", "hinted", "explainer"};
  auto* emit = app.add_subcommand("emit-train", "write seq2seq training records");
  emit->add_option("--in", emit_in, "labeled JSONL")->required()->check(CLI::ExistingFile);
  emit->add_option("--out-jsonl", emit_jsonl);
  emit->add_option("--out-tsv", emit_tsv);
  emit->add_option("--components", emit_components)
      ->delimiter(',')
      ->check(CLI::IsMember({"reasoning", "hinted", "explainer"}));
  emit_flags.AddConfig(emit);
  emit_flags.AddTemplate(emit);

  // features
  std::string feat_in, feat_out;
  auto* features = app.add_subcommand("features", "export baseline features as CSV");
  features->add_option("--in", feat_in)->required()->check(CLI::ExistingFile);
  features->add_option("--out", feat_out)->required();

  // baseline
  auto* baseline = app.add_subcommand("baseline", "logistic regression over features");
  baseline->require_subcommand(1);
  std::string bt_in, bt_model;
  LinearTrainingOptions bt_options;
  auto* bt = baseline->add_subcommand("train", "fit on labeled JSONL");
  bt->add_option("--in", bt_in)->required()->check(CLI::ExistingFile);
  bt->add_option("--model", bt_model, "output model JSON")->required();
  bt->add_option("--epochs", bt_options.epochs);
  bt->add_option("--learning-rate", bt_options.learning_rate);
  bt->add_option("--seed", bt_options.seed);
  ConfigFlags bp_flags;
  std::string bp_in, bp_model, bp_out;
  auto* bp = baseline->add_subcommand("predict", "score pairs with a trained model");
  bp->add_option("--in", bp_in)->required()->check(CLI::ExistingFile);
  bp->add_option("--model", bp_model)->required()->check(CLI::ExistingFile);
  bp->add_option("--out", bp_out)->required();
  bp_flags.AddConfig(bp);
  bp_flags.AddThreshold(bp);

  // mock-serve
  ConfigFlags serve_flags;
  std::string serve_host = "127.0.0.1";
  int serve_port = 8080;
  size_t serve_max_input = 0;
  auto* serve = app.add_subcommand("mock-serve", "serve the mock backend over HTTP");
  serve->add_option("--host", serve_host);
  serve->add_option("--port", serve_port);
  serve->add_option("--max-input-chars", serve_max_input,
                    "refuse longer inputs with 413 (0 = no limit)");
  serve_flags.AddConfig(serve);
  serve_flags.AddMock(serve, false);
  serve_flags.AddTemplate(serve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*score) {
      CliConfig cfg = score_flags.Resolve();
      Dataset ds = ReadExamples(score_in, DatasetFormat::kHhdJsonl);
      auto backend = MakeBackend(cfg);
      auto outcomes =
          ScoreBatch(ds.examples, *backend, cfg.pipeline, cfg.concurrency_limit);
      auto ids = Ids(ds.examples);
      WriteOutcomes(outcomes, ids, score_out);
      size_t failures = 0, backend_failures = 0, warnings = 0;
      for (const auto& o : outcomes) {
        if (const auto* f = std::get_if<ScoreFailure>(&o)) {
          ++failures;
          backend_failures += Error(f->kind, "").IsBackendError();
        } else if (std::get<Prediction>(o).warning) {
          ++warnings;
        }
      }
      wire::Json meta;
      meta["command"] = "score";
      meta["config"] = ConfigToJson(cfg);
      meta["count"] = outcomes.size();
      meta["failures"] = failures;
      meta["warnings"] = warnings;
      WriteMeta(score_out, meta);
      if (warnings > 0) {
        err << "warning: " << warnings
            << " example(s) fell back to the reasoning score alone\n";
      }
      return ReportBackendFailures(failures, backend_failures, err);
    }

    if (*eval) {
      CliConfig cfg = eval_flags.Resolve();
      Joined joined = JoinPredictions(eval_pred, eval_gold, err);
      EvalReport report =
          ComputeMetrics(joined.scores, joined.labels, cfg.pipeline.threshold);
      if (eval_json) {
        wire::Json doc;
        doc["report"] = wire::Json::parse(EvalReportToJson(report));
        doc["excluded_failures"] = joined.excluded_failures;
        doc["config"] = ConfigToJson(cfg);
        out << doc.dump(2) << '\n';
      } else {
        out << FormatEvalTable(report);
      }
      return kExitOk;
    }

    if (*tune) {
      tune_flags.Resolve();
      Joined joined = JoinPredictions(tune_pred, tune_gold, err);
      auto objective = *ParseTuningObjective(tune_objective);
      double t = TuneThreshold(joined.scores, joined.labels, objective);
      EvalReport report = ComputeMetrics(joined.scores, joined.labels, t);
      if (tune_json) {
        wire::Json doc;
        doc["threshold"] = t;
        doc["objective"] = tune_objective;
        doc["report"] = wire::Json::parse(EvalReportToJson(report));
        out << doc.dump(2) << '\n';
      } else {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", t);
        out << buf << '\n';
      }
      return kExitOk;
    }

    if (*augment) {
      CliConfig cfg = aug_flags.Resolve();
      Dataset ds = ReadExamples(aug_in, DatasetFormat::kHhdJsonl);
      for (const auto& ex : ds.examples) {
        if (!ex.label) {
          throw Error(ErrorKind::kParseError,
                      aug_in + ": example '" + ex.id + "' has no label");
        }
      }
      auto backend = MakeBackend(cfg);
      auto result =
          AugmentWithExplainer(ds.examples, *backend, cfg.augmentation, cfg.templates);
      WriteExamples(result.examples, aug_out);
      wire::Json meta;
      meta["command"] = "augment";
      meta["config"] = ConfigToJson(cfg);
      meta["input_count"] = ds.examples.size();
      meta["output_count"] = result.examples.size();
      meta["dropped_duplicates"] = result.dropped_duplicates;
      meta["failures"] = result.failures.size();
      WriteMeta(aug_out, meta);
      size_t backend_failures = 0;
      for (const auto& f : result.failures) {
        err << "augment: " << f.id << ": " << f.message << '\n';
        backend_failures += Error(f.kind, "").IsBackendError();
      }
      return ReportBackendFailures(result.failures.size(), backend_failures, err);
    }

    if (*adapt) {
      ReadOptions options;
      if (adapt_neutral == "reject") options.neutral = NeutralPolicy::kReject;
      if (adapt_neutral == "contradict") options.neutral = NeutralPolicy::kContradict;
      options.true_dataset_name = adapt_name;
      Dataset ds = ReadExamples(adapt_in, ParseDatasetFormat(adapt_format), options);
      auto stream = OpenOutput(adapt_out);
      for (size_t i = 0; i < ds.examples.size(); ++i) {
        stream << ExampleToJsonLine(ds.examples[i], ds.splits[i]) << '\n';
      }
      out << "wrote " << ds.examples.size() << " examples ("
          << ds.manifest.positive_count << " contradict, "
          << ds.manifest.with_explanation_count << " with explanations";
      if (ds.skipped_neutral > 0) out << ", " << ds.skipped_neutral << " neutral skipped";
      out << ")\n";
      return kExitOk;
    }

    if (*emit) {
      CliConfig cfg = emit_flags.Resolve();
      if (emit_jsonl.empty() && emit_tsv.empty()) {
        throw Error(ErrorKind::kInvalidArgument,
                    "emit-train needs --out-jsonl and/or --out-tsv");
      }
      std::set<ComponentKind> components;
      for (const auto& c : emit_components) {
        if (c == "reasoning") components.insert(ComponentKind::kReasoningClassifier);
        if (c == "hinted") components.insert(ComponentKind::kHintedClassifier);
        if (c == "explainer") components.insert(ComponentKind::kExplainer);
      }
      Dataset ds = ReadExamples(emit_in, DatasetFormat::kHhdJsonl);
      for (const auto& ex : ds.examples) {
        if (!ex.label) {
          throw Error(ErrorKind::kParseError,
                      emit_in + ": example '" + ex.id + "' has no label");
        }
      }
      auto records = EmitTrainingRecords(ds.examples, components, cfg.templates);
      if (!emit_jsonl.empty()) {
        auto stream = OpenOutput(emit_jsonl);
        WriteTrainingJsonl(records, stream);
      }
      if (!emit_tsv.empty()) {
        auto stream = OpenOutput(emit_tsv);
        WriteTrainingTsv(records, stream);
      }
      out << "wrote " << records.size() << " training records\n";
      return kExitOk;
    }

    if (*features) {
      Dataset ds = ReadExamples(feat_in, DatasetFormat::kHhdJsonl);
      std::vector<FeatureRow> rows;
      for (const auto& ex : ds.examples) {
        rows.push_back({ex.id, ExtractFeatures(ex), ex.label});
      }
      auto stream = OpenOutput(feat_out);
      WriteFeatureCsv(rows, stream);
      return kExitOk;
    }

    if (*bt) {
      Dataset ds = ReadExamples(bt_in, DatasetFormat::kHhdJsonl);
      std::vector<FeatureVector> xs;
      std::vector<Label> ys;
      for (const auto& ex : ds.examples) {
        if (!ex.label) {
          throw Error(ErrorKind::kParseError,
                      bt_in + ": example '" + ex.id + "' has no label");
        }
        xs.push_back(ExtractFeatures(ex));
        ys.push_back(*ex.label);
      }
      LinearModel model = TrainLinear(xs, ys, bt_options);
      auto stream = OpenOutput(bt_model);
      stream << LinearModelToJson(model) << '\n';
      return kExitOk;
    }

    if (*bp) {
      CliConfig cfg = bp_flags.Resolve();
      std::ifstream model_in(bp_model);
      std::stringstream buffer;
      buffer << model_in.rdbuf();
      LinearModel model = LinearModelFromJson(buffer.str());
      Dataset ds = ReadExamples(bp_in, DatasetFormat::kHhdJsonl);
      auto stream = OpenOutput(bp_out);
      for (const auto& ex : ds.examples) {
        double p = model.PredictProbability(ExtractFeatures(ex));
        wire::Json line;
        line["id"] = ex.id;
        line["hallucination_prob"] = p;
        line["label"] = LabelName(DecideLabel(p, cfg.pipeline.threshold));
        stream << line.dump() << '\n';
      }
      return kExitOk;
    }

    if (*serve) {
      CliConfig cfg = serve_flags.Resolve();
      cfg.use_mock = true;
      MockBackendSpec spec;
      if (cfg.mock_fixture) spec = LoadMockFixture(*cfg.mock_fixture);
      spec.heuristic_temperature = cfg.mock_temperature;
      spec.templates = cfg.templates;
      if (serve_max_input > 0) spec.max_input_chars = serve_max_input;
      MockBackend backend(std::move(spec));
      BackendServer server(backend);
      err << "serving mock backend on " << serve_host << ":" << serve_port << '\n';
      server.Run(serve_host, serve_port);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace hhd
