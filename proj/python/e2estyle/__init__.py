# Copyright 2026 The e2estyle Authors.
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

"""Stylistic analysis of restaurant-domain NLG corpora."""

import json

from ._e2estyle import (
    Error,
    IoError,
    ValidationError,
    __version__,
    align,
    annotate_file as _annotate_file,
    aggregation_json as _aggregation_json,
    canonical_key,
    delexicalize,
    detect_contrast,
    detect_emphasis,
    detect_style,
    evaluate_json as _evaluate_json,
    lexicon_fingerprint,
    map_positivity,
    normalize_mr,
    parse_mr,
    relation_kind,
    relexicalize,
    schema_fingerprint,
    score,
    select_file as _select_file,
    sentences,
    stats_json as _stats_json,
    tokenize,
)


def stats(path, split="train", jobs=1):
    return json.loads(_stats_json(path, split, jobs))


def select(path, out, split="train", schema=None, threshold=None, jobs=1):
    schema_json = json.dumps(schema) if isinstance(schema, dict) else schema
    return json.loads(_select_file(path, out, split, schema_json, threshold, jobs))


def annotate(path, out, split="train", contrast=True, emphasis=True, jobs=1):
    return json.loads(_annotate_file(path, out, split, contrast, emphasis, jobs))


def evaluate(pairs, metrics="ser,emph,contrast,conformance", strict=False,
             jobs=1, per_sample=True):
    if not isinstance(metrics, str):
        metrics = ",".join(metrics)
    return json.loads(_evaluate_json(list(pairs), metrics, strict, jobs, per_sample))


def aggregation_report(path, split="train"):
    return json.loads(_aggregation_json(path, split))
