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

// Output-quality metrics over (MR, utterance) pairs: slot error rate,
// emphasis and contrast realization, style conformance, and the
// aggregation-potential table.

#ifndef E2ESTYLE_EVALUATION_H_
#define E2ESTYLE_EVALUATION_H_

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "e2estyle/config.h"
#include "e2estyle/corpus.h"
#include "e2estyle/mr.h"
#include "e2estyle/style_detector.h"

namespace e2estyle {

struct EvalPair {
  MeaningRepresentation mr;
  std::string utterance;
  std::string source;
};

std::vector<EvalPair> PairsFromCorpus(const Corpus &corpus,
                                      std::string source = "reference");

// Reads a system-output file with columns `mr` (annotated MR) and `output`
// (falling back to `ref`). Throws IoError / RowError.
std::vector<EvalPair> LoadEvalPairs(const std::string &path,
                                    std::string source = "output");

struct PairAnalysis {
  AnalyzedUtterance utterance;
  Alignment alignment;
  StyleProfile profile;
};

std::vector<PairAnalysis> AnalyzePairs(const std::vector<EvalPair> &pairs,
                                       const Toolkit &toolkit,
                                       std::size_t jobs = 1);

struct Rate {
  std::size_t numerator = 0;
  std::size_t denominator = 0;

  // Undefined when the denominator is zero.
  std::optional<double> value() const {
    if (denominator == 0) return std::nullopt;
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  bool operator==(const Rate &) const = default;
};

struct SlotErrorResult {
  Rate overall;                           // erroneous / total content slots
  std::array<Rate, kNumSlots> per_slot;   // by SlotIndex()
  bool strict = false;
  std::size_t missing = 0;
  // familyFriendly slots with a cue of the opposite polarity (strict only).
  std::size_t contradicted = 0;
};

// Per-pair findings, also used to assemble the report diagnostics.
struct PairFindings {
  std::vector<std::size_t> missing;       // slot positions
  std::vector<std::size_t> contradicted;  // slot positions (strict)
  std::size_t emphasized = 0;
  std::size_t emphasis_realized = 0;
  bool name_aligned = false;
  bool has_relation = false;
  bool contrast_realized = false;
  std::string contrast_detail;
};

// Contradicting familyFriendly cues are only checked when `strict_aligner`
// is given.
PairFindings InspectPair(const EvalPair &pair, const PairAnalysis &analysis,
                         const SlotAligner *strict_aligner);

SlotErrorResult SlotErrorRate(const std::vector<EvalPair> &pairs,
                              const std::vector<PairAnalysis> &analyses,
                              const SlotAligner &aligner, bool strict = false);

// Per emphasized slot: realized when aligned and starting before the name.
Rate EmphasisRealizationRate(const std::vector<EvalPair> &pairs,
                             const std::vector<PairAnalysis> &analyses);

// Per annotated pair: both relation slots aligned, in one sentence, and
// that sentence has a contrast marker.
Rate ContrastRealizationRate(const std::vector<EvalPair> &pairs,
                             const std::vector<PairAnalysis> &analyses);

Rate StyleConformanceRate(const std::vector<PairAnalysis> &analyses,
                          Category category);

enum class Metric { kSer, kEmphasis, kContrast, kConformance };

std::string_view MetricName(Metric m);  // "ser", "emph", ...
// Parses a comma-separated list; throws ValidationError on unknown names.
std::set<Metric> ParseMetrics(std::string_view list);

struct EvalOptions {
  std::set<Metric> metrics = {Metric::kSer, Metric::kEmphasis,
                              Metric::kContrast, Metric::kConformance};
  bool strict_ser = false;
  std::vector<Category> categories = {kAllCategories.begin(),
                                      kAllCategories.end()};
  std::size_t jobs = 1;
  bool per_sample = true;
};

struct EvalReport {
  std::size_t pairs = 0;
  std::optional<SlotErrorResult> ser;
  std::optional<Rate> emphasis;
  std::optional<Rate> contrast;
  std::map<Category, Rate> conformance;
  std::vector<PairFindings> samples;

  std::string ToJson() const;
};

EvalReport Evaluate(const std::vector<EvalPair> &pairs, const Toolkit &toolkit,
                    const EvalOptions &options = {});

struct AggregationRow {
  std::string price_range;
  std::string customer_rating;
  std::size_t count = 0;
};

struct AggregationReport {
  std::vector<AggregationRow> rows;  // by magnitude, then value strings
  std::size_t total = 0;
  std::size_t corpus_size = 0;

  double fraction() const {
    return corpus_size == 0 ? 0.0
                            : static_cast<double>(total) /
                                  static_cast<double>(corpus_size);
  }
  std::string ToJson() const;
};

// Samples whose priceRange and customerRating sit at the same point of
// their own 3-point scales (cheap/less than £20 with low/1 out of 5, and so
// on), counted per exact value pair.
AggregationReport AggregationPotential(const Corpus &corpus);

}  // namespace e2estyle

#endif  // E2ESTYLE_EVALUATION_H_
