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

#include "e2estyle/annotation.h"

#include <algorithm>

#include "e2estyle/error.h"
#include "e2estyle/ontology.h"
#include "e2estyle/parallel.h"

namespace e2estyle {

RelationKind RelationKindFor(Slot a, std::string_view value_a, Slot b,
                             std::string_view value_b) {
  return MapPositivity(a, value_a) == MapPositivity(b, value_b)
             ? RelationKind::kConcession
             : RelationKind::kContrast;
}

std::string_view ContrastOutcomeName(ContrastOutcome o) {
  switch (o) {
    case ContrastOutcome::kNone:
      return "none";
    case ContrastOutcome::kLabel:
      return "label";
    case ContrastOutcome::kDiscarded:
      return "discarded";
  }
  return "none";
}

ContrastDetection DetectContrastRelation(const MeaningRepresentation &mr,
                                         const AnalyzedUtterance &utterance,
                                         const Alignment &alignment,
                                         const StyleProfile &profile) {
  ContrastDetection result;
  const auto &hits = profile.HitsFor(MarkerSubset::kContrastMarkers);
  if (hits.empty()) return result;
  const Span marker = hits.front().marker;
  const Span sentence =
      utterance.SentenceSpan(utterance.SentenceOfOffset(marker.begin));

  const SlotAlignment *left = nullptr;
  const SlotAlignment *right = nullptr;
  Span left_span, right_span;
  for (const SlotAlignment &sa : alignment.slots) {
    for (const AlignedSpan &as : sa.spans) {
      if (!sentence.Contains(as.span)) continue;
      if (as.span.end <= marker.begin &&
          (left == nullptr || as.span.end > left_span.end)) {
        left = &sa;
        left_span = as.span;
      }
      if (as.span.begin >= marker.end &&
          (right == nullptr || as.span.begin < right_span.begin)) {
        right = &sa;
        right_span = as.span;
      }
    }
  }
  if (left == nullptr || right == nullptr) {
    result.detail = "no aligned slot on one side of the marker";
    return result;
  }
  if (!IsRelationSlot(left->slot) || !IsRelationSlot(right->slot)) {
    result.outcome = ContrastOutcome::kDiscarded;
    result.detail = "marker between " +
                    std::string(CanonicalName(left->slot)) + " and " +
                    std::string(CanonicalName(right->slot));
    return result;
  }
  if (left->slot == right->slot) {
    result.outcome = ContrastOutcome::kDiscarded;
    result.detail = "marker flanked by the same slot";
    return result;
  }
  const SlotAlignment *first = left->position < right->position ? left : right;
  const SlotAlignment *second = first == left ? right : left;
  const SlotValue &a = mr.slots()[first->position];
  const SlotValue &b = mr.slots()[second->position];
  try {
    result.relation =
        Relation{RelationKindFor(a.slot, a.value, b.slot, b.value), a.slot,
                 b.slot};
  } catch (const OntologyError &e) {
    result.outcome = ContrastOutcome::kDiscarded;
    result.detail = e.what();
    return result;
  }
  result.outcome = ContrastOutcome::kLabel;
  return result;
}

ContrastAnnotation AnnotateContrast(const Corpus &corpus,
                                    const Toolkit &toolkit,
                                    std::size_t jobs) {
  ContrastAnnotation out;
  out.per_sample = ParallelMap(corpus.size(), jobs, [&](std::size_t i) {
    const CorpusSample &s = corpus.samples[i];
    const AnalyzedUtterance u = toolkit.analyzer.Analyze(s.ref);
    const Alignment alignment = toolkit.aligner.Align(s.mr, u);
    const StyleProfile profile = toolkit.detector.Detect(u, s.mr);
    return DetectContrastRelation(s.mr, u, alignment, profile);
  });
  out.corpus.provenance = corpus.provenance;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const ContrastDetection &d = out.per_sample[i];
    switch (d.outcome) {
      case ContrastOutcome::kDiscarded:
        ++out.counts.discarded;
        break;
      case ContrastOutcome::kLabel: {
        CorpusSample s = corpus.samples[i];
        s.mr.SetRelation(*d.relation);
        out.corpus.samples.push_back(std::move(s));
        ++out.counts.labeled;
        if (d.relation->kind == RelationKind::kContrast) {
          ++out.counts.contrast;
        } else {
          ++out.counts.concession;
        }
        break;
      }
      case ContrastOutcome::kNone:
        out.corpus.samples.push_back(corpus.samples[i]);
        ++out.counts.passed;
        break;
    }
  }
  return out;
}

EmphasisDetection DetectEmphasis(const MeaningRepresentation &mr,
                                 const Alignment &alignment) {
  EmphasisDetection result;
  const auto name_pos = mr.PositionOf(Slot::kName);
  if (!name_pos) return result;
  const auto name_start = alignment.slots[*name_pos].Leftmost();
  if (!name_start) return result;
  result.name_aligned = true;
  for (const SlotAlignment &sa : alignment.slots) {
    if (sa.position == *name_pos) continue;
    const auto start = sa.Leftmost();
    if (start && start->begin < name_start->begin) {
      result.positions.push_back(sa.position);
    }
  }
  std::sort(result.positions.begin(), result.positions.end());
  return result;
}

EmphasisAnnotation AnnotateEmphasis(const Corpus &corpus,
                                    const Toolkit &toolkit,
                                    std::size_t jobs) {
  EmphasisAnnotation out;
  out.per_sample = ParallelMap(corpus.size(), jobs, [&](std::size_t i) {
    const CorpusSample &s = corpus.samples[i];
    const AnalyzedUtterance u = toolkit.analyzer.Analyze(s.ref);
    return DetectEmphasis(s.mr, toolkit.aligner.Align(s.mr, u));
  });
  out.corpus.provenance = corpus.provenance;
  out.corpus.samples = corpus.samples;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const EmphasisDetection &d = out.per_sample[i];
    MeaningRepresentation &mr = out.corpus.samples[i].mr;
    mr.ClearEmphasis();
    for (const std::size_t p : d.positions) mr.SetEmphasis(p);
    if (!d.name_aligned) ++out.name_unaligned;
    if (!d.positions.empty()) ++out.emphasized_samples;
    out.emphasized_slots += d.positions.size();
  }
  return out;
}

}  // namespace e2estyle
