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

#include "hhd/pipeline.h"

#include <cmath>

namespace hhd {

double Combine(double reasoning_prob, double hinted_prob) {
  return 0.5 * (reasoning_prob + hinted_prob);
}

void PipelineConfig::Validate() const {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "threshold must be in [0, 1]");
  }
  if (max_output_tokens < 1) {
    throw Error(ErrorKind::kInvalidArgument, "max_output_tokens must be >= 1");
  }
  templates.Validate();
}

namespace {

GenerationResult Ask(Backend& backend, std::string input, GenerationMode mode,
                     const PipelineConfig& cfg) {
  GenerationRequest request;
  request.input = std::move(input);
  request.mode = mode;
  request.num_outputs = 1;
  request.seed = cfg.seed;
  request.max_output_tokens = cfg.max_output_tokens;
  GenerationResult result = backend.Generate(request);
  result.CheckAgainst(request);
  return result;
}

}  // namespace

Prediction Score(const LabeledExample& example, Backend& backend,
                 const PipelineConfig& cfg) {
  cfg.Validate();
  if (!example.article.IsValid() || !example.headline.IsValid()) {
    throw Error(ErrorKind::kInvalidArgument,
                "example '" + example.id + "' lacks an article or headline");
  }
  const std::string reasoning_input = RenderReasoningInput(example, cfg.templates);
  Prediction pred;
  pred.mode = cfg.mode;

  if (cfg.mode == PipelineMode::kNoExplanation) {
    auto result = Ask(backend, reasoning_input, GenerationMode::kClassify, cfg);
    pred.reasoning_prob =
        ClassProbability(result, Label::kContradict, cfg.normalization);
    pred.hallucination_prob = *pred.reasoning_prob;
    pred.label = DecideLabel(pred.hallucination_prob, cfg.threshold);
    return pred;
  }

  auto reasoning =
      Ask(backend, reasoning_input, GenerationMode::kClassifyAndExplain, cfg);
  pred.reasoning_prob =
      ClassProbability(reasoning, Label::kContradict, cfg.normalization);

  bool parsed = false;
  if (!reasoning.outputs.empty()) {
    try {
      pred.explanation =
          ParseComponentOutput(reasoning.outputs.front().text, cfg.templates)
              .explanation;
      parsed = true;
    } catch (const Error& e) {
      pred.warning = e.what();
    }
  } else {
    pred.warning = "reasoning classifier returned no output sequence";
  }

  if (cfg.mode == PipelineMode::kFull && parsed) {
    auto hinted = Ask(backend,
                      RenderHintedInput(example, pred.explanation, cfg.templates),
                      GenerationMode::kClassify, cfg);
    pred.hinted_prob =
        ClassProbability(hinted, Label::kContradict, cfg.normalization);
    pred.hallucination_prob =
        cfg.combiner ? cfg.combiner->Combine(*pred.reasoning_prob, *pred.hinted_prob)
                     : Combine(*pred.reasoning_prob, *pred.hinted_prob);
  } else {
    if (cfg.mode == PipelineMode::kFull) pred.mode = PipelineMode::kNoHinted;
    pred.hallucination_prob = *pred.reasoning_prob;
  }
  pred.label = DecideLabel(pred.hallucination_prob, cfg.threshold);
  return pred;
}

std::vector<ScoreOutcome> ScoreBatch(std::span<const LabeledExample> examples,
                                     Backend& backend, const PipelineConfig& cfg,
                                     int concurrency) {
  cfg.Validate();
  std::vector<ScoreOutcome> out(examples.size());
  ParallelFor(examples.size(), concurrency, [&](size_t i) {
    try {
      out[i] = Score(examples[i], backend, cfg);
    } catch (const Error& e) {
      out[i] = ScoreFailure{e.kind(), e.what()};
    } catch (const std::exception& e) {
      out[i] = ScoreFailure{ErrorKind::kInvalidArgument, e.what()};
    }
  });
  return out;
}

}  // namespace hhd
