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

// Python bindings for the core operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hhd/augmentation.h"
#include "hhd/dataset_io.h"
#include "hhd/errors.h"
#include "hhd/features.h"
#include "hhd/http_backend.h"
#include "hhd/jaro_winkler.h"
#include "hhd/metrics.h"
#include "hhd/mock_backend.h"
#include "hhd/pipeline.h"
#include "hhd/templates.h"
#include "hhd/text.h"

namespace py = pybind11;

namespace hhd {
namespace {

template <typename T>
std::optional<T> Opt(const py::dict& d, const char* key) {
  if (!d.contains(key) || d[key].is_none()) return std::nullopt;
  return d[key].cast<T>();
}

Label ToLabel(const std::string& name) {
  auto label = ParseLabelName(name);
  if (!label) throw Error(ErrorKind::kInvalidArgument, "unknown label '" + name + "'");
  return *label;
}

LabeledExample ToExample(const py::dict& d) {
  LabeledExample ex;
  ex.id = Opt<std::string>(d, "id").value_or("");
  ex.article.title = Opt<std::string>(d, "article_title").value_or("");
  ex.article.body = Opt<std::string>(d, "article_body").value_or("");
  ex.headline.text = Opt<std::string>(d, "headline").value_or("");
  if (auto label = Opt<std::string>(d, "label")) ex.label = ToLabel(*label);
  if (auto e = Opt<std::string>(d, "explanation"); e && !e->empty()) {
    ex.explanation = Explanation{*e};
  }
  if (auto layout = Opt<std::string>(d, "article_layout")) {
    ex.article.layout = *layout == "concatenate" ? ArticleLayout::kConcatenate
                                                 : ArticleLayout::kTitlePassage;
  }
  return ex;
}

py::dict FromExample(const LabeledExample& ex) {
  py::dict d;
  d["id"] = ex.id;
  d["article_title"] = ex.article.title;
  d["article_body"] = ex.article.body;
  d["headline"] = ex.headline.text;
  d["label"] = ex.label ? py::object(py::str(LabelName(*ex.label))) : py::none();
  d["explanation"] =
      ex.explanation ? py::object(py::str(ex.explanation->text)) : py::none();
  d["origin"] = std::string(OriginName(ex.origin));
  return d;
}

py::dict FromPrediction(const std::string& id, const Prediction& p) {
  py::dict d;
  d["id"] = id;
  d["hallucination_prob"] = p.hallucination_prob;
  d["label"] = std::string(LabelName(p.label));
  d["explanation"] = p.explanation.text;
  d["reasoning_prob"] = p.reasoning_prob;
  d["hinted_prob"] = p.hinted_prob;
  d["mode"] = std::string(PipelineModeName(p.mode));
  if (p.warning) d["warning"] = *p.warning;
  return d;
}

py::dict FromReport(const EvalReport& r) {
  py::dict d;
  d["accuracy"] = r.accuracy;
  d["precision"] = r.precision;
  d["recall"] = r.recall;
  d["f1"] = r.f1;
  d["tp"] = r.tp;
  d["fp"] = r.fp;
  d["tn"] = r.tn;
  d["fn"] = r.fn;
  d["threshold_used"] = r.threshold_used;
  d["n"] = r.n;
  return d;
}

std::vector<Label> ToLabels(const std::vector<std::string>& names) {
  std::vector<Label> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(ToLabel(n));
  return out;
}

std::unique_ptr<Backend> MakeBackendFor(const std::optional<std::string>& url,
                                        double temperature,
                                        const TemplateConfig& templates,
                                        int concurrency) {
  if (url) {
    HttpBackendOptions options;
    options.url = *url;
    options.concurrency_limit = concurrency;
    return std::make_unique<HttpBackend>(options);
  }
  MockBackendSpec spec;
  spec.heuristic_temperature = temperature;
  spec.templates = templates;
  return std::make_unique<MockBackend>(std::move(spec));
}

}  // namespace
}  // namespace hhd

PYBIND11_MODULE(_hhd, m) {
  using namespace hhd;
  m.doc() = "Headline hallucination detection core";

  static py::exception<Error> error(m, "HhdError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error.ptr())(py::str(e.what()));
      exc.attr("kind") = std::string(ErrorKindName(e.kind()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<TemplateConfig>(m, "TemplateConfig")
      .def(py::init<>())
      .def_property(
          "entail_token", [](const TemplateConfig& c) { return c.class_tokens.entail; },
          [](TemplateConfig& c, std::string v) { c.class_tokens.entail = std::move(v); })
      .def_property(
          "contradict_token",
          [](const TemplateConfig& c) { return c.class_tokens.contradict; },
          [](TemplateConfig& c, std::string v) {
            c.class_tokens.contradict = std::move(v);
          })
      .def_readwrite("because_delimiter", &TemplateConfig::because_delimiter)
      .def_readwrite("headline_prefix", &TemplateConfig::headline_prefix)
      .def_readwrite("article_prefix", &TemplateConfig::article_prefix)
      .def_readwrite("comment_prefix", &TemplateConfig::comment_prefix)
      .def_readwrite("explainer_class_separator",
                     &TemplateConfig::explainer_class_separator)
      .def("validate", &TemplateConfig::Validate);

  m.def(
      "render_reasoning_input",
      [](const py::dict& ex, const TemplateConfig& cfg) {
        return RenderReasoningInput(ToExample(ex), cfg);
      },
      py::arg("example"), py::arg("templates") = TemplateConfig{});
  m.def(
      "render_reasoning_target",
      [](const std::string& label, const std::string& explanation,
         const TemplateConfig& cfg) {
        return RenderReasoningTarget(ToLabel(label), Explanation{explanation}, cfg);
      },
      py::arg("label"), py::arg("explanation"), py::arg("templates") = TemplateConfig{});
  m.def(
      "render_hinted_input",
      [](const py::dict& ex, const std::string& hint, const TemplateConfig& cfg) {
        return RenderHintedInput(ToExample(ex), Explanation{hint}, cfg);
      },
      py::arg("example"), py::arg("hint"), py::arg("templates") = TemplateConfig{});
  m.def(
      "render_explainer_input",
      [](const py::dict& ex, const std::string& label, const TemplateConfig& cfg) {
        return RenderExplainerInput(ToExample(ex), ToLabel(label), cfg);
      },
      py::arg("example"), py::arg("label"), py::arg("templates") = TemplateConfig{});
  m.def(
      "parse_component_output",
      [](const std::string& text, const TemplateConfig& cfg) {
        auto parsed = ParseComponentOutput(text, cfg);
        return py::make_tuple(std::string(LabelName(parsed.label)),
                              parsed.explanation.text);
      },
      py::arg("text"), py::arg("templates") = TemplateConfig{});

  m.def(
      "score",
      [](const std::vector<py::dict>& examples, const std::string& mode,
         double threshold, std::optional<int64_t> seed,
         std::optional<std::string> backend_url, double mock_temperature,
         int concurrency, const TemplateConfig& templates) {
        std::vector<LabeledExample> exs;
        for (const auto& d : examples) exs.push_back(ToExample(d));
        PipelineConfig cfg;
        auto parsed_mode = ParsePipelineModeName(mode);
        if (!parsed_mode) throw Error(ErrorKind::kInvalidArgument, "unknown mode " + mode);
        cfg.mode = *parsed_mode;
        cfg.threshold = threshold;
        cfg.seed = seed;
        cfg.templates = templates;
        auto backend =
            MakeBackendFor(backend_url, mock_temperature, templates, concurrency);
        std::vector<ScoreOutcome> outcomes;
        {
          py::gil_scoped_release release;
          outcomes = ScoreBatch(exs, *backend, cfg, concurrency);
        }
        py::list out;
        for (size_t i = 0; i < outcomes.size(); ++i) {
          if (const auto* p = std::get_if<Prediction>(&outcomes[i])) {
            out.append(FromPrediction(exs[i].id, *p));
          } else {
            const auto& f = std::get<ScoreFailure>(outcomes[i]);
            py::dict d;
            d["id"] = exs[i].id;
            d["error"] = std::string(ErrorKindName(f.kind));
            d["message"] = f.message;
            out.append(d);
          }
        }
        return out;
      },
      py::arg("examples"), py::arg("mode") = "full", py::arg("threshold") = 0.5,
      py::arg("seed") = py::none(), py::arg("backend_url") = py::none(),
      py::arg("mock_temperature") = 0.25, py::arg("concurrency") = 1,
      py::arg("templates") = TemplateConfig{});

  m.def(
      "augment",
      [](const std::vector<py::dict>& examples, int k, bool dedupe, int64_t seed,
         std::optional<std::string> backend_url, const TemplateConfig& templates) {
        std::vector<LabeledExample> exs;
        for (const auto& d : examples) exs.push_back(ToExample(d));
        AugmentationConfig cfg;
        cfg.k = k;
        cfg.dedupe = dedupe;
        cfg.seed = seed;
        auto backend = MakeBackendFor(backend_url, 0.25, templates, 1);
        AugmentationResult res;
        {
          py::gil_scoped_release release;
          res = AugmentWithExplainer(exs, *backend, cfg, templates);
        }
        py::list out;
        for (const auto& ex : res.examples) out.append(FromExample(ex));
        return out;
      },
      py::arg("examples"), py::arg("k") = kFineTuningK, py::arg("dedupe") = true,
      py::arg("seed") = 0, py::arg("backend_url") = py::none(),
      py::arg("templates") = TemplateConfig{});

  m.def(
      "compute_metrics",
      [](const std::vector<double>& scores, const std::vector<std::string>& labels,
         double threshold) {
        return FromReport(ComputeMetrics(scores, ToLabels(labels), threshold));
      },
      py::arg("scores"), py::arg("labels"), py::arg("threshold") = 0.5);
  m.def(
      "tune_threshold",
      [](const std::vector<double>& scores, const std::vector<std::string>& labels,
         const std::string& objective) {
        auto obj = ParseTuningObjective(objective);
        if (!obj) throw Error(ErrorKind::kInvalidArgument, "unknown objective");
        return TuneThreshold(scores, ToLabels(labels), *obj);
      },
      py::arg("scores"), py::arg("labels"), py::arg("objective") = "accuracy");
  m.def(
      "paired_t_test",
      [](const std::vector<double>& a, const std::vector<double>& b) {
        auto r = PairedTTest(a, b);
        py::dict d;
        d["t_statistic"] = r.t_statistic;
        d["degrees_of_freedom"] = r.degrees_of_freedom;
        d["significant_at_95"] = r.significant_at_95;
        return d;
      },
      py::arg("runs_a"), py::arg("runs_b"));

  m.def(
      "jaro_winkler",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        return JaroWinkler(a, b);
      },
      py::arg("a"), py::arg("b"), "Word-level similarity over token lists.");
  m.def("jaro_winkler_chars", &JaroWinklerChars, py::arg("a"), py::arg("b"),
        "Similarity over Unicode code points.");
  m.def("normalized_tokens", &NormalizedTokens, py::arg("text"));
  m.def(
      "extract_features",
      [](const py::dict& ex) {
        auto f = ExtractFeatures(ToExample(ex));
        auto values = f.AsArray();
        py::dict d;
        for (size_t i = 0; i < kNumFeatures; ++i) {
          d[py::str(std::string(FeatureVector::Names()[i]))] = values[i];
        }
        return d;
      },
      py::arg("example"));

  m.def(
      "read_examples",
      [](const std::string& path, const std::string& format) {
        auto ds = ReadExamples(path, ParseDatasetFormat(format));
        py::list out;
        for (const auto& ex : ds.examples) out.append(FromExample(ex));
        return out;
      },
      py::arg("path"), py::arg("format") = "hhd");
}
