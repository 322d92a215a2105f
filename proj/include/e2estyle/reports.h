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

// JSON documents describing per-sample results of each pipeline stage.

#ifndef E2ESTYLE_REPORTS_H_
#define E2ESTYLE_REPORTS_H_

#include <string>
#include <vector>

#include "e2estyle/annotation.h"
#include "e2estyle/config.h"
#include "e2estyle/corpus.h"
#include "e2estyle/selection.h"

namespace e2estyle {

// One entry per sample: score, sentence count, categories and the hits of
// every subset with their text.
std::string ProfilesJson(const Corpus &corpus,
                         const std::vector<ScoredSample> &scored);

std::string SelectionJson(const SelectionResult &result,
                          const WeightingSchema &schema,
                          std::size_t input_size);

std::string ContrastJson(const ContrastAnnotation &annotation);

std::string EmphasisJson(const Corpus &input,
                         const EmphasisAnnotation &annotation);

struct AlignmentSummary {
  std::size_t slots = 0;
  std::size_t aligned = 0;
  std::size_t exact = 0;
  std::size_t lexicon = 0;
  std::size_t fuzzy = 0;
  std::size_t exactly_aligned_samples = 0;
};

struct AlignmentRun {
  std::vector<Alignment> alignments;
  std::vector<std::string> texts;
  AlignmentSummary summary;
};

AlignmentRun AlignCorpus(const Corpus &corpus, const Toolkit &toolkit,
                         std::size_t jobs = 1);

std::string AlignmentJson(const Corpus &corpus, const AlignmentRun &run);

}  // namespace e2estyle

#endif  // E2ESTYLE_REPORTS_H_
