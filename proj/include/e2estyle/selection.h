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

// Weighted scoring of style profiles and stylistic data selection.

#ifndef E2ESTYLE_SELECTION_H_
#define E2ESTYLE_SELECTION_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "e2estyle/corpus.h"
#include "e2estyle/style_detector.h"
#include "e2estyle/text_analysis.h"

namespace e2estyle {

struct WeightingSchema {
  // Indexed by SubsetIndex().
  std::array<int, kNumMarkerSubsets> weights = {3, 2, 2, 3, 2, 2, 1, 1, 2, 2};
  int threshold = 2;
  // Score multiplier applied once per sentence beyond the first, as
  // score * (1 - length_penalty)^(sentences - 1). 0 disables it.
  double length_penalty = 0.0;

  int Weight(MarkerSubset s) const { return weights[SubsetIndex(s)]; }

  // Parses {"AGG_LEXICAL": 3, ..., "threshold": 2, "length_penalty": 0}.
  // Omitted subsets keep their default weight. Unknown keys, negative
  // weights and non-integer values throw ConfigError.
  static WeightingSchema FromJson(std::string_view json_text);
  std::string ToJson() const;

  bool operator==(const WeightingSchema &) const = default;
};

// Sum of the weights of the subsets with at least one hit; each subset
// counts once however many hits it has.
int ScoreUtterance(const StyleProfile &profile, const WeightingSchema &schema);

// Score after the optional length penalty.
double AdjustedScore(int score, std::size_t sentence_count,
                     const WeightingSchema &schema);

struct ScoredSample {
  StyleProfile profile;
  int score = 0;
  double adjusted = 0.0;
  std::size_t sentence_count = 0;
};

std::vector<ScoredSample> ScoreCorpus(const Corpus &corpus,
                                      const TextAnalyzer &analyzer,
                                      const StyleDetector &detector,
                                      const WeightingSchema &schema,
                                      std::size_t jobs = 1);

// Indices (ascending) of the samples kept by threshold selection: per
// canonical MR, every sample with score >= threshold, or when none
// qualifies the single highest-scoring sample, earliest first on ties.
std::vector<std::size_t> SelectIndices(const Corpus &corpus,
                                       const std::vector<double> &scores,
                                       double threshold);

struct SelectionResult {
  Corpus corpus;
  std::vector<std::size_t> kept;   // indices into the input
  std::size_t unique_mrs = 0;
  std::size_t fallback_mrs = 0;    // MRs kept through the fallback
};

SelectionResult SelectStylisticSubset(const Corpus &corpus,
                                      const std::vector<ScoredSample> &scored,
                                      const WeightingSchema &schema);

SelectionResult SelectStylisticSubset(const Corpus &corpus,
                                      const TextAnalyzer &analyzer,
                                      const StyleDetector &detector,
                                      const WeightingSchema &schema,
                                      std::size_t jobs = 1);

// Samples whose reference has a hit in any subset of `category`.
Corpus ExtractCategorySubset(const Corpus &corpus, Category category,
                             const TextAnalyzer &analyzer,
                             const StyleDetector &detector,
                             std::size_t jobs = 1);

// Samples whose reference has a hit in one marker subset.
Corpus ExtractMarkerSubset(const Corpus &corpus, MarkerSubset subset,
                           const TextAnalyzer &analyzer,
                           const StyleDetector &detector,
                           std::size_t jobs = 1);

}  // namespace e2estyle

#endif  // E2ESTYLE_SELECTION_H_
