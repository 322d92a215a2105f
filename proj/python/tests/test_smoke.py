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

import csv
import json
import os

import pytest

import e2estyle

RICE_BOAT_MR = (
    "name[The Rice Boat], food[French], priceRange[moderate], "
    "customer rating[3 out of 5], area[city centre], familyFriendly[no], "
    "near[Express by Holiday Inn]"
)
RICE_BOAT_TEXT = (
    "The Rice Boat is a French restaurant near Express by Holiday Inn in the "
    "city centre. It has a moderate price range and a 3 out of 5 rating, but "
    "it is not family friendly."
)
FIXTURE = os.path.join(os.path.dirname(__file__), "..", "..", "tests", "data",
                       "fixture.csv")


def test_version_and_fingerprints():
    assert e2estyle.__version__
    assert len(e2estyle.schema_fingerprint()) == 16
    assert len(e2estyle.lexicon_fingerprint()) == 16


def test_parse_and_normalize_mr():
    mr = e2estyle.parse_mr(
        "name[X], <emph> food[Thai], customer rating[low], priceRange[cheap], "
        "<contrast>[priceRange customer_rating]")
    assert [s["slot"] for s in mr["slots"]] == [
        "name", "food", "customerRating", "priceRange"]
    assert mr["slots"][1]["emphasized"]
    assert mr["relation"]["kind"] == "contrast"
    text = "name[X], food[Thai]"
    assert e2estyle.normalize_mr(text) == text
    assert e2estyle.canonical_key("food[Thai], name[X]") == \
        e2estyle.canonical_key(text)


def test_malformed_mr_raises_validation_error():
    with pytest.raises(e2estyle.ValidationError):
        e2estyle.parse_mr("name[X")
    assert issubclass(e2estyle.ValidationError, e2estyle.Error)


def test_tokenize_and_sentences():
    tokens = e2estyle.tokenize("It's £20-25. Try it!")
    assert [t["text"] for t in tokens][:2] == ["It's", "£20-25"]
    assert e2estyle.sentences("One. Two!") == ["One.", "Two!"]


def test_align_reports_every_slot():
    alignment = e2estyle.align(RICE_BOAT_MR, RICE_BOAT_TEXT)
    assert len(alignment) == 7
    assert all(a["spans"] for a in alignment)
    name = alignment[0]
    assert name["spans"][0]["text"] == "The Rice Boat"


def test_detect_and_score():
    profile = e2estyle.detect_style(RICE_BOAT_MR, RICE_BOAT_TEXT)
    assert "contrast" in profile["categories"]
    assert profile["hits"]["CONTRAST_MARKERS"] == ["but"]
    assert e2estyle.score(RICE_BOAT_MR, RICE_BOAT_TEXT) >= 3
    zero = {k: 0 for k in profile["hits"]}
    assert e2estyle.score(RICE_BOAT_MR, RICE_BOAT_TEXT, json.dumps(zero)) == 0


def test_positivity_and_relations():
    assert e2estyle.map_positivity("customerRating", "low") == 1
    assert e2estyle.map_positivity("familyFriendly", "yes") == 3
    assert e2estyle.map_positivity("priceRange", "cheap") == 3
    assert e2estyle.relation_kind(
        "priceRange", "cheap", "familyFriendly", "yes") == "concession"
    result = e2estyle.detect_contrast(RICE_BOAT_MR, RICE_BOAT_TEXT)
    assert result["outcome"] == "label"
    assert result["relation"] == {
        "kind": "contrast", "first": "customerRating",
        "second": "familyFriendly"}


def test_emphasis_and_delex_round_trip():
    mr = "name[Wildwood], eatType[pub], food[Indian], near[Raja Indian Cuisine]"
    text = "Near Raja Indian Cuisine, there is an Indian pub called Wildwood."
    assert e2estyle.detect_emphasis(mr, text) == ["eatType", "food", "near"]
    delex_mr, delex_text = e2estyle.delexicalize(mr, text)
    assert "<name>" in delex_text and "Wildwood" not in delex_text
    assert e2estyle.relexicalize(delex_text, mr) == text


def test_evaluate_pairs():
    report = e2estyle.evaluate(
        [(RICE_BOAT_MR, RICE_BOAT_TEXT), (RICE_BOAT_MR, "Nothing here.")],
        metrics=["ser"], per_sample=False)
    assert report["slot_error_rate"]["rate"] == pytest.approx(0.5)
    assert "emphasis_realization_rate" not in report


def test_corpus_level_calls(tmp_path):
    stats = e2estyle.stats(FIXTURE)
    assert stats["total_samples"] == 4
    selected = tmp_path / "selected.csv"
    report = e2estyle.select(FIXTURE, str(selected), threshold=0)
    assert report
    with open(selected, newline="", encoding="utf-8") as f:
        assert len(list(csv.DictReader(f))) == 4
    annotated = tmp_path / "annotated.csv"
    report = e2estyle.annotate(FIXTURE, str(annotated))
    assert set(report) == {"contrast", "emphasis"}
    assert "<contrast>" in annotated.read_text(encoding="utf-8")
    assert "rows" in e2estyle.aggregation_report(FIXTURE)


def test_missing_file_raises_io_error(tmp_path):
    with pytest.raises(e2estyle.IoError):
        e2estyle.stats(str(tmp_path / "missing.csv"))
