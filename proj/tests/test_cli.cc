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

#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "hhd/cli.h"
#include "hhd/config.h"
#include "hhd/dataset_io.h"
#include "hhd/errors.h"
#include "hhd/mock_backend.h"
#include "hhd/server.h"
#include "hhd/wire.h"
#include "test_util.h"

namespace hhd {
namespace {

using testing::ReadFile;
using testing::TempDir;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Run(std::vector<std::string> args) {
  args.insert(args.begin(), "hhd");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const char* kPairs =
    R"({"id":"a1","article_title":"Council approves park","article_body":"The city council voted to approve a new park.","headline":"City council approves new park","label":"entail","explanation":"the council approved the park","split":"train"})"
    "\n"
    R"({"id":"a2","article_title":"Council approves park","article_body":"The city council voted to approve a new park.","headline":"Mayor resigns after scandal","label":"contradict","explanation":"no resignation is mentioned","split":"validation"})"
    "\n"
    R"({"id":"a3","article_title":"Storm","article_body":"A storm knocked out power to thousands.","headline":"Storm knocks out power","label":"entail","split":"test"})"
    "\n"
    R"({"id":"a4","article_title":"Storm","article_body":"A storm knocked out power to thousands.","headline":"Earthquake destroys town","label":"contradict","split":"test"})"
    "\n";

TEST_CASE("config file precedence and validation") {
  TempDir dir;
  auto path = dir.Write("cfg.json", R"({
    "backend": {"concurrency": 2},
    "template": {"entail_token": "Yes", "contradict_token": "No"},
    "pipeline": {"mode": "no_hinted", "threshold": 0.3, "seed": 4},
    "augmentation": {"k": 1}
  })");
  auto cfg = LoadConfigFile(path);
  CHECK(cfg.concurrency_limit == 2);
  CHECK(cfg.templates.class_tokens.entail == "Yes");
  CHECK(cfg.pipeline.mode == PipelineMode::kNoHinted);
  CHECK(cfg.pipeline.threshold == 0.3);
  CHECK(cfg.pipeline.seed == 4);
  CHECK(cfg.augmentation.k == 1);

  // The echoed config reloads to the same effective values.
  auto echoed = dir.Write("echo.json", ConfigToJson(cfg).dump(2));
  auto again = LoadConfigFile(echoed);
  CHECK(ConfigToJson(again) == ConfigToJson(cfg));
  CHECK(ConfigToJson(cfg)["metadata"]["reasoning_prob_source"] ==
        "classify_and_explain.first_step");

  auto kind = [&](const std::string& text) {
    try {
      LoadConfigFile(dir.Write("bad.json", text)).Validate();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kIoError;
  };
  CHECK(kind(R"({"pipeline": {"treshold": 0.3}})") == ErrorKind::kInvalidArgument);
  CHECK(kind(R"({"extra": {}})") == ErrorKind::kInvalidArgument);
  CHECK(kind(R"({"pipeline": {"threshold": "high"}})") == ErrorKind::kInvalidArgument);
  CHECK(kind(R"({"pipeline": {"threshold": 2}})") == ErrorKind::kInvalidArgument);
  CHECK(kind(R"({"template": {"entail_token": "x", "contradict_token": "X"}})") ==
        ErrorKind::kInvalidArgument);
}

TEST_CASE("exit codes by error kind") {
  CHECK(ExitCodeFor(Error(ErrorKind::kInvalidArgument, "")) == kExitUsage);
  CHECK(ExitCodeFor(Error(ErrorKind::kParseError, "")) == kExitData);
  CHECK(ExitCodeFor(Error(ErrorKind::kBackendUnavailable, "")) == kExitBackend);
  CHECK(ExitCodeFor(Error(ErrorKind::kInputTooLong, "")) == kExitBackend);
  CHECK(ExitCodeFor(Error(ErrorKind::kDegenerateData, "")) == kExitData);
}

TEST_CASE("usage errors") {
  CHECK(Run({}).code == kExitUsage);
  auto unknown = Run({"frobnicate"});
  CHECK(unknown.code == kExitUsage);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(Run({"score", "--in", "/nonexistent.jsonl", "--out", "x"}).code == kExitUsage);
  CHECK(Run({"--help"}).code == kExitOk);
  TempDir dir;
  auto in = dir.Write("pairs.jsonl", kPairs);
  auto no_backend = Run({"score", "--in", in, "--out", dir.File("p.jsonl")});
  CHECK(no_backend.code == kExitUsage);
  CHECK(no_backend.err.find("--mock") != std::string::npos);
  CHECK(Run({"score", "--in", in, "--out", dir.File("p.jsonl"), "--mock", "--mode",
             "sideways"})
            .code == kExitUsage);
}

TEST_CASE("score, eval and tune-threshold with the mock backend") {
  TempDir dir;
  auto in = dir.Write("pairs.jsonl", kPairs);
  auto pred = dir.File("pred.jsonl");
  auto r = Run({"score", "--in", in, "--out", pred, "--mock", "--seed", "3",
                "--concurrency", "3"});
  REQUIRE_MESSAGE(r.code == kExitOk, r.err);
  auto preds = ReadPredictions(pred);
  REQUIRE(preds.size() == 4);
  CHECK(preds[0].id == "a1");
  CHECK(preds[0].prediction->label == Label::kEntail);
  CHECK(preds[1].prediction->label == Label::kContradict);

  auto meta = wire::Json::parse(ReadFile(pred + ".meta.json"));
  CHECK(meta["config"]["pipeline"]["seed"] == 3);
  CHECK(meta["config"]["backend"]["concurrency"] == 3);
  CHECK(meta["count"] == 4);

  auto pred2 = dir.File("pred2.jsonl");
  REQUIRE(Run({"score", "--in", in, "--out", pred2, "--mock", "--seed", "3"}).code ==
        kExitOk);
  CHECK(ReadFile(pred) == ReadFile(pred2));

  auto ev = Run({"eval", "--pred", pred, "--gold", in});
  REQUIRE_MESSAGE(ev.code == kExitOk, ev.err);
  CHECK(ev.out.rfind("Accuracy", 0) == 0);
  auto evj = Run({"eval", "--pred", pred, "--gold", in, "--json"});
  auto doc = wire::Json::parse(evj.out);
  CHECK(doc["report"]["n"] == 4);
  CHECK(doc["report"]["accuracy"] == 1.0);

  auto tj = Run({"tune-threshold", "--pred", pred, "--gold", in, "--objective", "f1",
                 "--json"});
  REQUIRE_MESSAGE(tj.code == kExitOk, tj.err);
  auto tdoc = wire::Json::parse(tj.out);
  CHECK(tdoc["report"]["f1"] == 1.0);

  // A gold id with no prediction is a data error.
  auto extra = dir.Write("gold.jsonl", std::string(kPairs) +
      R"({"id":"zz","article_body":"B","headline":"H","label":"entail"})" "\n");
  CHECK(Run({"eval", "--pred", pred, "--gold", extra}).code == kExitData);
}

TEST_CASE("config file and flag precedence in score") {
  TempDir dir;
  auto in = dir.Write("pairs.jsonl", kPairs);
  auto cfg = dir.Write("cfg.json",
                       R"({"pipeline": {"mode": "no_explanation", "threshold": 0.9},
                           "backend": {"mock": true}})");
  auto pred = dir.File("p.jsonl");
  REQUIRE(Run({"score", "--in", in, "--out", pred, "--config", cfg, "--threshold",
               "0.2"})
              .code == kExitOk);
  auto meta = wire::Json::parse(ReadFile(pred + ".meta.json"));
  CHECK(meta["config"]["pipeline"]["mode"] == "no_explanation");
  CHECK(meta["config"]["pipeline"]["threshold"] == 0.2);
  auto preds = ReadPredictions(pred);
  CHECK(preds[0].prediction->mode == PipelineMode::kNoExplanation);
}

TEST_CASE("score reports backend failures with exit code 3") {
  TempDir dir;
  auto in = dir.Write("pairs.jsonl", kPairs);
  auto fixture = dir.Write("fx.json", R"({"fallback": "error", "responses": []})");
  auto pred = dir.File("p.jsonl");
  auto r = Run({"score", "--in", in, "--out", pred, "--mock-fixture", fixture});
  CHECK(r.code == kExitBackend);
  auto recs = ReadPredictions(pred);
  REQUIRE(recs.size() == 4);
  CHECK(recs[0].failure.has_value());
  CHECK(Run({"eval", "--pred", pred, "--gold", in}).code != kExitOk);
}

TEST_CASE("score over HTTP against an in-process server") {
  MockBackend mock;
  BackendServer server(mock);
  int port = server.Start("127.0.0.1", 0);
  TempDir dir;
  auto in = dir.Write("pairs.jsonl", kPairs);
  auto http = dir.File("http.jsonl"), local = dir.File("local.jsonl");
  auto r = Run({"score", "--in", in, "--out", http, "--backend",
                "http://127.0.0.1:" + std::to_string(port)});
  REQUIRE_MESSAGE(r.code == kExitOk, r.err);
  REQUIRE(Run({"score", "--in", in, "--out", local, "--mock"}).code == kExitOk);
  CHECK(ReadFile(http) == ReadFile(local));
  server.Stop();
  auto down = Run({"score", "--in", in, "--out", http, "--backend",
                   "http://127.0.0.1:" + std::to_string(port), "--max-attempts", "1"});
  CHECK(down.code == kExitBackend);
}

TEST_CASE("augment, emit-train, features and baseline") {
  TempDir dir;
  auto in = dir.Write("pairs.jsonl", kPairs);
  auto aug = dir.File("aug.jsonl");
  auto r = Run({"augment", "--in", in, "--out", aug, "--mock", "--k", "2"});
  REQUIRE_MESSAGE(r.code == kExitOk, r.err);
  auto ds = ReadExamples(aug, DatasetFormat::kHhdJsonl);
  CHECK(ds.examples.size() == 12);
  CHECK(ds.examples[1].origin == ExampleOrigin::kExplainerGenerated);
  auto meta = wire::Json::parse(ReadFile(aug + ".meta.json"));
  CHECK(meta["config"]["augmentation"]["k"] == 2);

  auto jsonl = dir.File("train.jsonl"), tsv = dir.File("train.tsv");
  r = Run({"emit-train", "--in", aug, "--out-jsonl", jsonl, "--out-tsv", tsv,
           "--components", "reasoning,explainer"});
  REQUIRE_MESSAGE(r.code == kExitOk, r.err);
  auto text = ReadFile(jsonl);
  CHECK(std::count(text.begin(), text.end(), '\n') == 12 + 10);
  CHECK(Run({"emit-train", "--in", aug}).code == kExitUsage);

  auto csv = dir.File("f.csv");
  REQUIRE(Run({"features", "--in", in, "--out", csv}).code == kExitOk);
  CHECK(ReadFile(csv).rfind("id,headline_len_tokens", 0) == 0);

  auto model = dir.File("model.json"), bp = dir.File("bp.jsonl");
  r = Run({"baseline", "train", "--in", in, "--model", model, "--epochs", "200"});
  REQUIRE_MESSAGE(r.code == kExitOk, r.err);
  r = Run({"baseline", "predict", "--in", in, "--model", model, "--out", bp});
  REQUIRE_MESSAGE(r.code == kExitOk, r.err);
  auto preds = ReadPredictions(bp);
  CHECK(preds.size() == 4);
  CHECK(Run({"eval", "--pred", bp, "--gold", in}).code == kExitOk);

  auto one_class = dir.Write("one.jsonl",
      R"({"id":"1","article_body":"B","headline":"H","label":"entail"})" "\n");
  CHECK(Run({"baseline", "train", "--in", one_class, "--model", model}).code ==
        kExitData);
}

TEST_CASE("adapt converts corpora") {
  TempDir dir;
  auto esnli = dir.Write("e.csv",
                         "pairID,gold_label,Sentence1,Sentence2,Explanation_1\n"
                         "p1,entailment,P,H,why\np2,neutral,P,H2,x\n");
  auto out = dir.File("e.jsonl");
  auto r = Run({"adapt", "--format", "esnli", "--in", esnli, "--out", out});
  REQUIRE_MESSAGE(r.code == kExitOk, r.err);
  CHECK(r.out.find("neutral skipped") != std::string::npos);
  auto ds = ReadExamples(out, DatasetFormat::kHhdJsonl);
  REQUIRE(ds.examples.size() == 1);
  CHECK(ds.examples[0].origin == ExampleOrigin::kNliAdapted);
  CHECK(ds.examples[0].article.layout == ArticleLayout::kConcatenate);
  CHECK(Run({"adapt", "--format", "esnli", "--in", esnli, "--out", out, "--neutral",
             "reject"})
            .code == kExitData);
  auto truef = dir.Write("t.csv", "grounding,generated_text,label\nG,T,1\n");
  REQUIRE(Run({"adapt", "--format", "true", "--in", truef, "--out", out,
               "--dataset-name", "fever"})
              .code == kExitOk);
  CHECK(ReadExamples(out, DatasetFormat::kHhdJsonl).examples[0].id == "fever-1");
}

}  // namespace
}  // namespace hhd
