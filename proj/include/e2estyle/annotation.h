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

// Contrast/concession and emphasis annotation of corpus MRs.

#ifndef E2ESTYLE_ANNOTATION_H_
#define E2ESTYLE_ANNOTATION_H_

#include <optional>
#include <string>
#include <vector>

#include "e2estyle/config.h"
#include "e2estyle/corpus.h"
#include "e2estyle/mr.h"
#include "e2estyle/slot_aligner.h"
#include "e2estyle/style_detector.h"

namespace e2estyle {

// Contrast when the two levels differ, concession when they are equal.
RelationKind RelationKindFor(Slot a, std::string_view value_a, Slot b,
                             std::string_view value_b);

enum class ContrastOutcome { kNone, kLabel, kDiscarded };

std::string_view ContrastOutcomeName(ContrastOutcome o);

struct ContrastDetection {
  ContrastOutcome outcome = ContrastOutcome::kNone;
  std::optional<Relation> relation;  // set for kLabel
  // Why the sample was discarded or left unlabeled.
  std::string detail;
};

// Looks at the first contrast marker only. The nearest aligned slot
// realization on each side of it within its sentence forms the pair; the
// pair is returned in MR order. A side without any aligned realization
// yields kNone; a pair involving a slot other than priceRange,
// customerRating or familyFriendly yields kDiscarded.
ContrastDetection DetectContrastRelation(const MeaningRepresentation &mr,
                                         const AnalyzedUtterance &utterance,
                                         const Alignment &alignment,
                                         const StyleProfile &profile);

struct ContrastCounts {
  std::size_t labeled = 0;
  std::size_t contrast = 0;
  std::size_t concession = 0;
  std::size_t discarded = 0;
  std::size_t passed = 0;
};

struct ContrastAnnotation {
  // Labeled samples carry the relation; discarded samples are dropped.
  Corpus corpus;
  ContrastCounts counts;
  std::vector<ContrastDetection> per_sample;  // parallel to the input
};

ContrastAnnotation AnnotateContrast(const Corpus &corpus,
                                    const Toolkit &toolkit,
                                    std::size_t jobs = 1);

struct EmphasisDetection {
  std::vector<std::size_t> positions;  // MR slot positions, ascending
  bool name_aligned = false;
};

// Slots whose leftmost aligned span starts before the name's. An MR
// without an aligned name yields no positions and name_aligned = false.
EmphasisDetection DetectEmphasis(const MeaningRepresentation &mr,
                                 const Alignment &alignment);

struct EmphasisAnnotation {
  Corpus corpus;
  std::size_t emphasized_samples = 0;
  std::size_t emphasized_slots = 0;
  std::size_t name_unaligned = 0;
  std::vector<EmphasisDetection> per_sample;
};

// Replaces every sample's emphasis set with the detected one; references
// and relations are left alone.
EmphasisAnnotation AnnotateEmphasis(const Corpus &corpus,
                                    const Toolkit &toolkit,
                                    std::size_t jobs = 1);

}  // namespace e2estyle

#endif  // E2ESTYLE_ANNOTATION_H_
