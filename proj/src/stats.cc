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

#include "e2estyle/stats.h"

#include <set>

#include "e2estyle/parallel.h"
#include "json.hpp"

namespace e2estyle {

CorpusStats ComputeStats(const Corpus &corpus, const TextAnalyzer &analyzer,
                         std::size_t jobs) {
  CorpusStats stats;
  stats.total_samples = corpus.size();
  const auto sentences = ParallelMap(corpus.size(), jobs, [&](std::size_t i) {
    return analyzer.Analyze(corpus.samples[i].ref).sentences.size();
  });

  std::map<std::size_t, std::size_t> samples_by_count;
  std::map<std::size_t, std::size_t> sentences_by_count;
  std::map<std::string, std::size_t> unique;  // key -> slot count
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const MeaningRepresentation &mr = corpus.samples[i].mr;
    const std::size_t n = mr.size();
    ++samples_by_count[n];
    sentences_by_count[n] += sentences[i];
    unique.emplace(CanonicalKey(mr), n);
    for (const SlotValue &sv : mr.slots()) {
      ++stats.slot_frequency[std::string(CanonicalName(sv.slot))];
    }
  }
  stats.unique_mrs = unique.size();
  for (const auto &[n, count] : samples_by_count) {
    stats.slot_count_distribution[n] =
        static_cast<double>(count) / static_cast<double>(corpus.size());
    stats.mean_sentences_by_slot_count[n] =
        static_cast<double>(sentences_by_count[n]) / static_cast<double>(count);
  }
  std::map<std::size_t, std::size_t> unique_by_count;
  for (const auto &[key, n] : unique) ++unique_by_count[n];
  for (const auto &[n, count] : unique_by_count) {
    stats.unique_mr_slot_count_distribution[n] =
        static_cast<double>(count) / static_cast<double>(unique.size());
  }
  return stats;
}

std::string CorpusStats::ToJson() const {
  nlohmann::ordered_json doc;
  doc["total_samples"] = total_samples;
  doc["unique_mrs"] = unique_mrs;
  auto by_count = [](const std::map<std::size_t, double> &m) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto &[n, v] : m) j[std::to_string(n)] = v;
    return j;
  };
  doc["slot_count_distribution"] = by_count(slot_count_distribution);
  doc["mean_sentences_by_slot_count"] = by_count(mean_sentences_by_slot_count);
  doc["unique_mr_slot_count_distribution"] =
      by_count(unique_mr_slot_count_distribution);
  nlohmann::ordered_json freq = nlohmann::ordered_json::object();
  for (const auto &[name, n] : slot_frequency) freq[name] = n;
  doc["slot_frequency"] = freq;
  return doc.dump(2);
}

}  // namespace e2estyle
