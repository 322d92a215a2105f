// Copyright 2026 The e2estyle Authors.
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

// Python bindings. Sample-level calls return plain Python objects; corpus
// level calls return the same JSON documents the command-line tool writes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "e2estyle/annotation.h"
#include "e2estyle/config.h"
#include "e2estyle/corpus.h"
#include "e2estyle/error.h"
#include "e2estyle/evaluation.h"
#include "e2estyle/mr.h"
#include "e2estyle/ontology.h"
#include "e2estyle/reports.h"
#include "e2estyle/selection.h"
#include "e2estyle/slot_aligner.h"
#include "e2estyle/stats.h"
#include "e2estyle/style_detector.h"
#include "e2estyle/text_analysis.h"

namespace py = pybind11;

namespace e2estyle {
namespace {

Slot SlotArg(const std::string &name) {
  const auto slot = SlotFromName(name);
  if (!slot) throw ValidationError("unknown slot: " + name);
  return *slot;
}

Split SplitArg(const std::string &name) {
  const auto split = SplitFromName(name);
  if (!split) throw ValidationError("unknown split: " + name);
  return *split;
}

std::string Str(std::string_view v) { return std::string(v); }

struct Sample {
  MeaningRepresentation mr;
  AnalyzedUtterance utterance;
  Alignment alignment;
};

Sample Prepare(const std::string &mr_text, const std::string &text) {
  const Toolkit &tk = Toolkit::Default();
  Sample s{ParseMr(mr_text), tk.analyzer.Analyze(text), {}};
  s.alignment = tk.aligner.Align(s.mr, s.utterance);
  return s;
}

py::dict RelationDict(const Relation &r) {
  py::dict d;
  d["kind"] = Str(RelationKindName(r.kind));
  d["first"] = Str(CanonicalName(r.first));
  d["second"] = Str(CanonicalName(r.second));
  return d;
}

py::dict ParseMrDict(const std::string &text) {
  const MeaningRepresentation mr = ParseMr(text);
  py::list slots;
  for (const SlotValue &sv : mr.slots()) {
    py::dict d;
    d["slot"] = Str(CanonicalName(sv.slot));
    d["value"] = sv.value;
    d["emphasized"] = sv.emphasized;
    slots.append(d);
  }
  py::dict out;
  out["slots"] = slots;
  out["relation"] = mr.relation() ? py::object(RelationDict(*mr.relation()))
                                  : py::object(py::none());
  return out;
}

py::list TokenizeList(const std::string &text) {
  const AnalyzedUtterance u = Toolkit::Default().analyzer.Analyze(text);
  py::list out;
  for (const Token &t : u.tokens) {
    py::dict d;
    d["text"] = t.text;
    d["begin"] = t.span.begin;
    d["end"] = t.span.end;
    d["tag"] = Str(TokenTagName(t.tag));
    out.append(d);
  }
  return out;
}

std::vector<std::string> SentenceList(const std::string &text) {
  const AnalyzedUtterance u = Toolkit::Default().analyzer.Analyze(text);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < u.sentences.size(); ++i) {
    const Span s = u.SentenceSpan(i);
    out.push_back(text.substr(s.begin, s.size()));
  }
  return out;
}

py::list AlignList(const std::string &mr, const std::string &text) {
  const Sample s = Prepare(mr, text);
  py::list out;
  for (const SlotAlignment &sa : s.alignment.slots) {
    py::list spans;
    for (const AlignedSpan &a : sa.spans) {
      py::dict d;
      d["begin"] = a.span.begin;
      d["end"] = a.span.end;
      d["text"] = text.substr(a.span.begin, a.span.size());
      d["confidence"] = Str(MatchConfidenceName(a.confidence));
      spans.append(d);
    }
    py::dict d;
    d["slot"] = Str(CanonicalName(sa.slot));
    d["position"] = sa.position;
    d["spans"] = spans;
    out.append(d);
  }
  return out;
}

py::dict DetectDict(const std::string &mr, const std::string &text) {
  const Sample s = Prepare(mr, text);
  const StyleProfile profile =
      Toolkit::Default().detector.Detect(s.utterance, s.mr);
  py::dict hits;
  for (MarkerSubset subset : kAllMarkerSubsets) {
    std::vector<std::string> markers;
    for (const MarkerHit &h : profile.HitsFor(subset)) {
      markers.push_back(text.substr(h.marker.begin, h.marker.size()));
    }
    hits[py::str(Str(MarkerSubsetId(subset)))] = markers;
  }
  std::vector<std::string> categories;
  for (Category c : kAllCategories) {
    if (profile.HasCategory(c)) categories.push_back(Str(CategoryName(c)));
  }
  py::dict out;
  out["hits"] = hits;
  out["categories"] = categories;
  out["name_found"] = profile.name_found;
  return out;
}

WeightingSchema SchemaArg(const std::optional<std::string> &json,
                          const std::optional<int> &threshold) {
  WeightingSchema schema =
      json ? WeightingSchema::FromJson(*json) : Toolkit::Default().schema;
  if (threshold) schema.threshold = *threshold;
  return schema;
}

int ScoreText(const std::string &mr, const std::string &text,
              const std::optional<std::string> &schema_json) {
  const Sample s = Prepare(mr, text);
  return ScoreUtterance(Toolkit::Default().detector.Detect(s.utterance, s.mr),
                        SchemaArg(schema_json, std::nullopt));
}

py::dict ContrastDict(const std::string &mr, const std::string &text) {
  const Sample s = Prepare(mr, text);
  const StyleProfile profile =
      Toolkit::Default().detector.Detect(s.utterance, s.mr);
  const ContrastDetection d =
      DetectContrastRelation(s.mr, s.utterance, s.alignment, profile);
  py::dict out;
  out["outcome"] = Str(ContrastOutcomeName(d.outcome));
  out["relation"] = d.relation ? py::object(RelationDict(*d.relation))
                               : py::object(py::none());
  out["detail"] = d.detail;
  return out;
}

std::vector<std::string> EmphasisList(const std::string &mr,
                                      const std::string &text) {
  const Sample s = Prepare(mr, text);
  std::vector<std::string> out;
  for (std::size_t pos : DetectEmphasis(s.mr, s.alignment).positions) {
    out.push_back(Str(CanonicalName(s.mr.slots()[pos].slot)));
  }
  return out;
}

std::pair<std::string, std::string> DelexPair(const std::string &mr,
                                              const std::string &text) {
  DelexResult r = Delexicalize(ParseMr(mr), text);
  return {SerializeMr(r.mr), std::move(r.utterance)};
}

std::string EvaluateJson(
    const std::vector<std::pair<std::string, std::string>> &pairs,
    const std::string &metrics, bool strict, std::size_t jobs,
    bool per_sample) {
  std::vector<EvalPair> eval;
  eval.reserve(pairs.size());
  for (const auto &[mr, text] : pairs) {
    eval.push_back(EvalPair{ParseMr(mr), text, "python"});
  }
  EvalOptions options;
  options.metrics = ParseMetrics(metrics);
  options.strict_ser = strict;
  options.jobs = jobs;
  options.per_sample = per_sample;
  py::gil_scoped_release release;
  return Evaluate(eval, Toolkit::Default(), options).ToJson();
}

std::string StatsJson(const std::string &path, const std::string &split,
                      std::size_t jobs) {
  LoadOptions options;
  options.allow_missing_ref = true;
  const Corpus corpus =
      LoadCorpusWithReport(path, SplitArg(split), options).corpus;
  py::gil_scoped_release release;
  return ComputeStats(corpus, Toolkit::Default().analyzer, jobs).ToJson();
}

std::string SelectFile(const std::string &in, const std::string &out,
                       const std::string &split,
                       const std::optional<std::string> &schema_json,
                       const std::optional<int> &threshold, std::size_t jobs) {
  const Corpus corpus = LoadCorpus(in, SplitArg(split));
  const WeightingSchema schema = SchemaArg(schema_json, threshold);
  py::gil_scoped_release release;
  const Toolkit &tk = Toolkit::Default();
  const auto scored =
      ScoreCorpus(corpus, tk.analyzer, tk.detector, schema, jobs);
  const SelectionResult result = SelectStylisticSubset(corpus, scored, schema);
  WriteCorpus(result.corpus, out, FormatForPath(out));
  return SelectionJson(result, schema, corpus.size());
}

std::string AnnotateFile(const std::string &in, const std::string &out,
                         const std::string &split, bool contrast,
                         bool emphasis, std::size_t jobs) {
  if (!contrast && !emphasis) {
    throw ValidationError("nothing to annotate: enable contrast or emphasis");
  }
  Corpus corpus = LoadCorpus(in, SplitArg(split));
  py::gil_scoped_release release;
  const Toolkit &tk = Toolkit::Default();
  std::string report = "{";
  if (contrast) {
    ContrastAnnotation a = AnnotateContrast(corpus, tk, jobs);
    report += "\"contrast\": " + ContrastJson(a);
    corpus = std::move(a.corpus);
  }
  if (emphasis) {
    EmphasisAnnotation a = AnnotateEmphasis(corpus, tk, jobs);
    if (contrast) report += ", ";
    report += "\"emphasis\": " + EmphasisJson(corpus, a);
    corpus = std::move(a.corpus);
  }
  WriteCorpus(corpus, out, FormatForPath(out));
  return report + "}";
}

std::string AggregationJson(const std::string &path,
                            const std::string &split) {
  return AggregationPotential(LoadCorpus(path, SplitArg(split))).ToJson();
}

}  // namespace
}  // namespace e2estyle

PYBIND11_MODULE(_e2estyle, m) {
  using namespace e2estyle;
  m.doc() = "Stylistic analysis of restaurant-domain NLG corpora";

  // Translators run newest first, so the base class is registered first.
  auto &error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", error.ptr());
  py::register_exception<IoError>(m, "IoError", error.ptr());

  m.attr("__version__") = Str(ToolkitVersion());
  m.def("schema_fingerprint", &DefaultSchemaFingerprint);
  m.def("lexicon_fingerprint", &DefaultLexiconFingerprint);

  m.def("parse_mr", &ParseMrDict, py::arg("mr"));
  m.def(
      "normalize_mr",
      [](const std::string &text) { return SerializeMr(ParseMr(text)); },
      py::arg("mr"));
  m.def(
      "canonical_key",
      [](const std::string &text) { return CanonicalKey(ParseMr(text)); },
      py::arg("mr"));

  m.def("tokenize", &TokenizeList, py::arg("text"));
  m.def("sentences", &SentenceList, py::arg("text"));
  m.def("align", &AlignList, py::arg("mr"), py::arg("text"));
  m.def("detect_style", &DetectDict, py::arg("mr"), py::arg("text"));
  m.def("score", &ScoreText, py::arg("mr"), py::arg("text"),
        py::arg("schema_json") = py::none());

  m.def(
      "map_positivity",
      [](const std::string &slot, const std::string &value) {
        return PositivityValue(MapPositivity(SlotArg(slot), value));
      },
      py::arg("slot"), py::arg("value"));
  m.def(
      "relation_kind",
      [](const std::string &a, const std::string &va, const std::string &b,
         const std::string &vb) {
        return Str(RelationKindName(
            RelationKindFor(SlotArg(a), va, SlotArg(b), vb)));
      },
      py::arg("slot_a"), py::arg("value_a"), py::arg("slot_b"),
      py::arg("value_b"));
  m.def("detect_contrast", &ContrastDict, py::arg("mr"), py::arg("text"));
  m.def("detect_emphasis", &EmphasisList, py::arg("mr"), py::arg("text"));

  m.def("delexicalize", &DelexPair, py::arg("mr"), py::arg("text"));
  m.def(
      "relexicalize",
      [](const std::string &text, const std::string &mr) {
        return Relexicalize(text, ParseMr(mr));
      },
      py::arg("text"), py::arg("mr"));

  m.def("evaluate_json", &EvaluateJson, py::arg("pairs"),
        py::arg("metrics") = "ser,emph,contrast,conformance",
        py::arg("strict") = false, py::arg("jobs") = 1,
        py::arg("per_sample") = true);
  m.def("stats_json", &StatsJson, py::arg("path"), py::arg("split") = "train",
        py::arg("jobs") = 1);
  m.def("select_file", &SelectFile, py::arg("path"), py::arg("out"),
        py::arg("split") = "train", py::arg("schema_json") = py::none(),
        py::arg("threshold") = py::none(), py::arg("jobs") = 1);
  m.def("annotate_file", &AnnotateFile, py::arg("path"), py::arg("out"),
        py::arg("split") = "train", py::arg("contrast") = true,
        py::arg("emphasis") = true, py::arg("jobs") = 1);
  m.def("aggregation_json", &AggregationJson, py::arg("path"),
        py::arg("split") = "train");
}
