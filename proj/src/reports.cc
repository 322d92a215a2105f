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

#include "e2estyle/reports.h"

#include "e2estyle/parallel.h"
#include "json.hpp"

namespace e2estyle {
namespace {

using Json = nlohmann::ordered_json;

Json SpanJson(const Span &s, const std::string &text) {
  Json j;
  j["begin"] = s.begin;
  j["end"] = s.end;
  j["text"] = text.substr(s.begin, s.size());
  return j;
}

}  // namespace

std::string ProfilesJson(const Corpus &corpus,
                         const std::vector<ScoredSample> &scored) {
  Json list = Json::array();
  for (std::size_t i = 0; i < scored.size(); ++i) {
    const ScoredSample &s = scored[i];
    const std::string &text = corpus.samples[i].ref;
    Json j;
    j["index"] = i;
    j["score"] = s.score;
    if (s.adjusted != static_cast<double>(s.score)) j["adjusted"] = s.adjusted;
    j["sentences"] = s.sentence_count;
    j["name_found"] = s.profile.name_found;
    Json cats = Json::array();
    for (const Category c : kAllCategories) {
      if (s.profile.HasCategory(c)) cats.push_back(CategoryName(c));
    }
    j["categories"] = cats;
    Json hits = Json::object();
    for (const MarkerSubset m : kAllMarkerSubsets) {
      if (!s.profile.Has(m)) continue;
      Json h = Json::array();
      for (const MarkerHit &hit : s.profile.HitsFor(m)) {
        Json e;
        e["marker"] = SpanJson(hit.marker, text);
        e["extent"] = SpanJson(hit.extent, text);
        h.push_back(std::move(e));
      }
      hits[std::string(MarkerSubsetId(m))] = h;
    }
    j["hits"] = hits;
    list.push_back(std::move(j));
  }
  Json doc;
  doc["samples"] = list;
  return doc.dump(2);
}

std::string SelectionJson(const SelectionResult &result,
                          const WeightingSchema &schema,
                          std::size_t input_size) {
  Json doc;
  doc["input_samples"] = input_size;
  doc["selected_samples"] = result.corpus.size();
  doc["fraction"] = input_size == 0 ? 0.0
                                    : static_cast<double>(result.corpus.size()) /
                                          static_cast<double>(input_size);
  doc["unique_mrs"] = result.unique_mrs;
  doc["fallback_mrs"] = result.fallback_mrs;
  doc["schema"] = Json::parse(schema.ToJson());
  doc["kept"] = result.kept;
  return doc.dump(2);
}

std::string ContrastJson(const ContrastAnnotation &annotation) {
  Json doc;
  Json counts;
  counts["labeled"] = annotation.counts.labeled;
  counts["contrast"] = annotation.counts.contrast;
  counts["concession"] = annotation.counts.concession;
  counts["discarded"] = annotation.counts.discarded;
  counts["passed"] = annotation.counts.passed;
  doc["counts"] = counts;
  Json list = Json::array();
  for (std::size_t i = 0; i < annotation.per_sample.size(); ++i) {
    const ContrastDetection &d = annotation.per_sample[i];
    if (d.outcome == ContrastOutcome::kNone && d.detail.empty()) continue;
    Json j;
    j["index"] = i;
    j["outcome"] = ContrastOutcomeName(d.outcome);
    if (d.relation) {
      j["label"] = RelationKindName(d.relation->kind);
      j["slots"] = {std::string(RelationName(d.relation->first)),
                    std::string(RelationName(d.relation->second))};
    }
    if (!d.detail.empty()) j["detail"] = d.detail;
    list.push_back(std::move(j));
  }
  doc["samples"] = list;
  return doc.dump(2);
}

std::string EmphasisJson(const Corpus &input,
                         const EmphasisAnnotation &annotation) {
  Json doc;
  doc["samples_total"] = annotation.per_sample.size();
  doc["emphasized_samples"] = annotation.emphasized_samples;
  doc["emphasized_slots"] = annotation.emphasized_slots;
  doc["name_unaligned"] = annotation.name_unaligned;
  Json list = Json::array();
  for (std::size_t i = 0; i < annotation.per_sample.size(); ++i) {
    const EmphasisDetection &d = annotation.per_sample[i];
    if (d.positions.empty() && d.name_aligned) continue;
    Json j;
    j["index"] = i;
    Json slots = Json::array();
    for (const std::size_t p : d.positions) {
      slots.push_back(CanonicalName(input.samples[i].mr.slots()[p].slot));
    }
    j["emphasized"] = slots;
    if (!d.name_aligned) j["diagnostic"] = "name unaligned";
    list.push_back(std::move(j));
  }
  doc["samples"] = list;
  return doc.dump(2);
}

AlignmentRun AlignCorpus(const Corpus &corpus, const Toolkit &toolkit,
                         std::size_t jobs) {
  struct One {
    Alignment alignment;
    bool exact = false;
  };
  auto results = ParallelMap(corpus.size(), jobs, [&](std::size_t i) {
    const CorpusSample &s = corpus.samples[i];
    const AnalyzedUtterance u = toolkit.analyzer.Analyze(s.ref);
    One one;
    one.alignment = toolkit.aligner.Align(s.mr, u);
    one.exact = IsExactlyAligned(s.mr, u, one.alignment);
    return one;
  });
  AlignmentRun run;
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (const SlotAlignment &sa : results[i].alignment.slots) {
      ++run.summary.slots;
      if (!sa.aligned()) continue;
      ++run.summary.aligned;
      switch (sa.spans.front().confidence) {
        case MatchConfidence::kExact:
          ++run.summary.exact;
          break;
        case MatchConfidence::kLexicon:
          ++run.summary.lexicon;
          break;
        case MatchConfidence::kFuzzy:
          ++run.summary.fuzzy;
          break;
      }
    }
    if (results[i].exact) ++run.summary.exactly_aligned_samples;
    run.alignments.push_back(std::move(results[i].alignment));
  }
  return run;
}

std::string AlignmentJson(const Corpus &corpus, const AlignmentRun &run) {
  Json doc;
  Json summary;
  summary["samples"] = run.alignments.size();
  summary["slots"] = run.summary.slots;
  summary["aligned"] = run.summary.aligned;
  summary["unaligned"] = run.summary.slots - run.summary.aligned;
  summary["exact"] = run.summary.exact;
  summary["lexicon"] = run.summary.lexicon;
  summary["fuzzy"] = run.summary.fuzzy;
  summary["exactly_aligned_samples"] = run.summary.exactly_aligned_samples;
  doc["summary"] = summary;
  Json list = Json::array();
  for (std::size_t i = 0; i < run.alignments.size(); ++i) {
    const std::string &text = corpus.samples[i].ref;
    const MeaningRepresentation &mr = corpus.samples[i].mr;
    Json j;
    j["index"] = i;
    Json slots = Json::array();
    for (const SlotAlignment &sa : run.alignments[i].slots) {
      Json s;
      s["slot"] = CanonicalName(sa.slot);
      s["value"] = mr.slots()[sa.position].value;
      s["aligned"] = sa.aligned();
      Json spans = Json::array();
      for (const AlignedSpan &as : sa.spans) {
        Json e = SpanJson(as.span, text);
        e["confidence"] = MatchConfidenceName(as.confidence);
        spans.push_back(std::move(e));
      }
      s["spans"] = spans;
      slots.push_back(std::move(s));
    }
    j["slots"] = slots;
    list.push_back(std::move(j));
  }
  doc["samples"] = list;
  return doc.dump(2);
}

}  // namespace e2estyle
