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

#include "e2estyle/selection.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "e2estyle/error.h"
#include "e2estyle/parallel.h"
#include "json.hpp"

namespace e2estyle {
namespace {

std::vector<StyleProfile> Profiles(const Corpus &corpus,
                                   const TextAnalyzer &analyzer,
                                   const StyleDetector &detector,
                                   std::size_t jobs) {
  return ParallelMap(corpus.size(), jobs, [&](std::size_t i) {
    const CorpusSample &s = corpus.samples[i];
    return detector.Detect(analyzer.Analyze(s.ref), s.mr);
  });
}

Corpus Filter(const Corpus &corpus, const std::vector<bool> &keep) {
  Corpus out;
  out.provenance = corpus.provenance;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (keep[i]) out.samples.push_back(corpus.samples[i]);
  }
  return out;
}

}  // namespace

WeightingSchema WeightingSchema::FromJson(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ConfigError(std::string("schema: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("schema: expected a JSON object");
  WeightingSchema schema;
  for (const auto &[key, value] : doc.items()) {
    if (key == "length_penalty") {
      if (!value.is_number()) {
        throw ConfigError("schema: length_penalty must be a number");
      }
      const double p = value.get<double>();
      if (p < 0.0 || p >= 1.0) {
        throw ConfigError("schema: length_penalty must be in [0, 1)");
      }
      schema.length_penalty = p;
      continue;
    }
    if (!value.is_number_integer()) {
      throw ConfigError("schema: '" + key + "' must be an integer");
    }
    const auto n = value.get<long long>();
    if (n < 0 || n > 1000000) {
      throw ConfigError("schema: '" + key + "' out of range");
    }
    if (key == "threshold") {
      schema.threshold = static_cast<int>(n);
      continue;
    }
    const auto subset = MarkerSubsetFromId(key);
    if (!subset) throw ConfigError("schema: unknown subset id '" + key + "'");
    schema.weights[SubsetIndex(*subset)] = static_cast<int>(n);
  }
  return schema;
}

std::string WeightingSchema::ToJson() const {
  nlohmann::ordered_json doc;
  for (const MarkerSubset s : kAllMarkerSubsets) {
    doc[std::string(MarkerSubsetId(s))] = Weight(s);
  }
  doc["threshold"] = threshold;
  doc["length_penalty"] = length_penalty;
  return doc.dump(2);
}

int ScoreUtterance(const StyleProfile &profile, const WeightingSchema &schema) {
  int score = 0;
  for (const MarkerSubset s : kAllMarkerSubsets) {
    if (profile.Has(s)) score += schema.Weight(s);
  }
  return score;
}

double AdjustedScore(int score, std::size_t sentence_count,
                     const WeightingSchema &schema) {
  if (schema.length_penalty == 0.0 || sentence_count <= 1) {
    return static_cast<double>(score);
  }
  return score * std::pow(1.0 - schema.length_penalty,
                          static_cast<double>(sentence_count - 1));
}

std::vector<ScoredSample> ScoreCorpus(const Corpus &corpus,
                                      const TextAnalyzer &analyzer,
                                      const StyleDetector &detector,
                                      const WeightingSchema &schema,
                                      std::size_t jobs) {
  return ParallelMap(corpus.size(), jobs, [&](std::size_t i) {
    const CorpusSample &s = corpus.samples[i];
    const AnalyzedUtterance u = analyzer.Analyze(s.ref);
    ScoredSample out;
    out.profile = detector.Detect(u, s.mr);
    out.score = ScoreUtterance(out.profile, schema);
    out.sentence_count = u.sentences.size();
    out.adjusted = AdjustedScore(out.score, out.sentence_count, schema);
    return out;
  });
}

std::vector<std::size_t> SelectIndices(const Corpus &corpus,
                                       const std::vector<double> &scores,
                                       double threshold) {
  if (scores.size() != corpus.size()) {
    throw ValidationError("score count does not match corpus size");
  }
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    groups[CanonicalKey(corpus.samples[i].mr)].push_back(i);
  }
  std::vector<std::size_t> kept;
  for (const auto &[key, members] : groups) {
    bool any = false;
    for (const std::size_t i : members) {
      if (scores[i] >= threshold) {
        kept.push_back(i);
        any = true;
      }
    }
    if (any) continue;
    std::size_t best = members.front();
    for (const std::size_t i : members) {
      if (scores[i] > scores[best]) best = i;
    }
    kept.push_back(best);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

SelectionResult SelectStylisticSubset(const Corpus &corpus,
                                      const std::vector<ScoredSample> &scored,
                                      const WeightingSchema &schema) {
  std::vector<double> scores;
  scores.reserve(scored.size());
  for (const auto &s : scored) scores.push_back(s.adjusted);
  SelectionResult result;
  result.kept = SelectIndices(corpus, scores, schema.threshold);
  std::set<std::string> keys, qualified;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const std::string key = CanonicalKey(corpus.samples[i].mr);
    keys.insert(key);
    if (scores[i] >= schema.threshold) qualified.insert(key);
  }
  result.unique_mrs = keys.size();
  result.fallback_mrs = keys.size() - qualified.size();
  result.corpus.provenance = corpus.provenance;
  for (const std::size_t i : result.kept) {
    result.corpus.samples.push_back(corpus.samples[i]);
  }
  return result;
}

SelectionResult SelectStylisticSubset(const Corpus &corpus,
                                      const TextAnalyzer &analyzer,
                                      const StyleDetector &detector,
                                      const WeightingSchema &schema,
                                      std::size_t jobs) {
  return SelectStylisticSubset(
      corpus, ScoreCorpus(corpus, analyzer, detector, schema, jobs), schema);
}

Corpus ExtractCategorySubset(const Corpus &corpus, Category category,
                             const TextAnalyzer &analyzer,
                             const StyleDetector &detector,
                             std::size_t jobs) {
  const auto profiles = Profiles(corpus, analyzer, detector, jobs);
  std::vector<bool> keep(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    keep[i] = profiles[i].HasCategory(category);
  }
  return Filter(corpus, keep);
}

Corpus ExtractMarkerSubset(const Corpus &corpus, MarkerSubset subset,
                           const TextAnalyzer &analyzer,
                           const StyleDetector &detector,
                           std::size_t jobs) {
  const auto profiles = Profiles(corpus, analyzer, detector, jobs);
  std::vector<bool> keep(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    keep[i] = profiles[i].Has(subset);
  }
  return Filter(corpus, keep);
}

}  // namespace e2estyle
