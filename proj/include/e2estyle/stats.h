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

// Corpus-level statistics: sample and unique-MR counts, slot-count
// distribution, sentences per slot count and slot frequencies.

#ifndef E2ESTYLE_STATS_H_
#define E2ESTYLE_STATS_H_

#include <map>
#include <string>

#include "e2estyle/corpus.h"
#include "e2estyle/text_analysis.h"

namespace e2estyle {

struct CorpusStats {
  std::size_t total_samples = 0;
  std::size_t unique_mrs = 0;  // by CanonicalKey()
  // Slot count -> share of samples.
  std::map<std::size_t, double> slot_count_distribution;
  // Slot count -> share of unique MRs.
  std::map<std::size_t, double> unique_mr_slot_count_distribution;
  // Slot count -> mean number of sentences in the references.
  std::map<std::size_t, double> mean_sentences_by_slot_count;
  // Canonical slot name -> number of samples whose MR has it.
  std::map<std::string, std::size_t> slot_frequency;

  std::string ToJson() const;
};

CorpusStats ComputeStats(const Corpus &corpus, const TextAnalyzer &analyzer,
                         std::size_t jobs = 1);

}  // namespace e2estyle

#endif  // E2ESTYLE_STATS_H_
