# Copyright 2026 The hhd Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Headline hallucination detection toolkit."""

from ._hhd import (
    HhdError,
    TemplateConfig,
    augment,
    compute_metrics,
    extract_features,
    jaro_winkler,
    jaro_winkler_chars,
    normalized_tokens,
    paired_t_test,
    parse_component_output,
    read_examples,
    render_explainer_input,
    render_hinted_input,
    render_reasoning_input,
    render_reasoning_target,
    score,
    tune_threshold,
)

__all__ = [
    "HhdError",
    "TemplateConfig",
    "augment",
    "compute_metrics",
    "extract_features",
    "jaro_winkler",
    "jaro_winkler_chars",
    "normalized_tokens",
    "paired_t_test",
    "parse_component_output",
    "read_examples",
    "render_explainer_input",
    "render_hinted_input",
    "render_reasoning_input",
    "render_reasoning_target",
    "score",
    "tune_threshold",
]
