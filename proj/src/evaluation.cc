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

#include "e2estyle/evaluation.h"

#include <algorithm>
#include <tuple>

#include "e2estyle/csv.h"
#include "e2estyle/error.h"
#include "e2estyle/ontology.h"
#include "e2estyle/parallel.h"
#include "e2estyle/strings.h"
#include "json.hpp"

namespace e2estyle {
namespace {

using Json = nlohmann::ordered_json;

Json RateJson(const Rate &r) {
  Json j;
  j["numerator"] = r.numerator;
  j["denominator"] = r.denominator;
  if (const auto v = r.value()) {
    j["rate"] = *v;
  } else {
    j["rate"] = nullptr;
    j["undefined"] = true;
  }
  return j;
}

}  // namespace

std::vector<EvalPair> PairsFromCorpus(const Corpus &corpus,
                                      std::string source) {
  std::vector<EvalPair> pairs;
  pairs.reserve(corpus.size());
  for (const auto &s : corpus.samples) pairs.push_back({s.mr, s.ref, source});
  return pairs;
}

std::vector<EvalPair> LoadEvalPairs(const std::string &path,
                                    std::string source) {
  const Table table = ReadTable(path);
  const auto mr_col = table.Column("mr");
  auto out_col = table.Column("output");
  if (!out_col) out_col = table.Column("ref");
  if (!mr_col || !out_col) {
    throw ValidationError(path + ": expected columns 'mr' and 'output'");
  }
  std::vector<EvalPair> pairs;
  pairs.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto &row = table.rows[r];
    if (row.size() <= std::max(*mr_col, *out_col)) {
      throw RowError(r + 1, "too few fields");
    }
    try {
      pairs.push_back({ParseMr(row[*mr_col]), row[*out_col], source});
    } catch (const ValidationError &e) {
      throw RowError(r + 1, e.what());
    }
    if (TrimView(pairs.back().utterance).empty()) {
      throw RowError(r + 1, "empty utterance");
    }
  }
  return pairs;
}

std::vector<PairAnalysis> AnalyzePairs(const std::vector<EvalPair> &pairs,
                                       const Toolkit &toolkit,
                                       std::size_t jobs) {
  return ParallelMap(pairs.size(), jobs, [&](std::size_t i) {
    PairAnalysis a;
    a.utterance = toolkit.analyzer.Analyze(pairs[i].utterance);
    a.alignment = toolkit.aligner.Align(pairs[i].mr, a.utterance);
    a.profile = toolkit.detector.Detect(a.utterance, pairs[i].mr);
    return a;
  });
}

PairFindings InspectPair(const EvalPair &pair, const PairAnalysis &analysis,
                         const SlotAligner *strict_aligner) {
  PairFindings f;
  const auto &slots = pair.mr.slots();
  const Alignment &al = analysis.alignment;
  for (const SlotAlignment &sa : al.slots) {
    if (!sa.aligned()) {
      f.missing.push_back(sa.position);
    } else if (strict_aligner != nullptr && sa.slot == Slot::kFamilyFriendly &&
               !strict_aligner
                    ->ContradictingFamilyCues(slots[sa.position].value,
                                              analysis.utterance)
                    .empty()) {
      f.contradicted.push_back(sa.position);
    }
  }

  std::optional<Span> name;
  if (const auto pos = pair.mr.PositionOf(Slot::kName)) {
    name = al.slots[*pos].Leftmost();
  }
  f.name_aligned = name.has_value();
  for (const std::size_t p : pair.mr.EmphasisPositions()) {
    ++f.emphasized;
    if (!name || slots[p].slot == Slot::kName) continue;
    const auto start = al.slots[p].Leftmost();
    if (start && start->begin < name->begin) ++f.emphasis_realized;
  }

  if (const auto &rel = pair.mr.relation()) {
    f.has_relation = true;
    const auto pa = pair.mr.PositionOf(rel->first);
    const auto pb = pair.mr.PositionOf(rel->second);
    const auto sa = pa ? al.slots[*pa].Leftmost() : std::nullopt;
    const auto sb = pb ? al.slots[*pb].Leftmost() : std::nullopt;
    const AnalyzedUtterance &u = analysis.utterance;
    if (!sa || !sb) {
      f.contrast_detail = "relation slot unaligned";
    } else if (u.SentenceOfOffset(sa->begin) != u.SentenceOfOffset(sb->begin)) {
      f.contrast_detail = "relation slots in different sentences";
    } else {
      const Span sentence = u.SentenceSpan(u.SentenceOfOffset(sa->begin));
      for (const MarkerHit &h :
           analysis.profile.HitsFor(MarkerSubset::kContrastMarkers)) {
        if (sentence.Contains(h.marker)) f.contrast_realized = true;
      }
      if (!f.contrast_realized) f.contrast_detail = "no contrast marker";
    }
  }
  return f;
}

SlotErrorResult SlotErrorRate(const std::vector<EvalPair> &pairs,
                              const std::vector<PairAnalysis> &analyses,
                              const SlotAligner &aligner, bool strict) {
  SlotErrorResult r;
  r.strict = strict;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const PairFindings f =
        InspectPair(pairs[i], analyses[i], strict ? &aligner : nullptr);
    for (const SlotValue &sv : pairs[i].mr.slots()) {
      ++r.per_slot[SlotIndex(sv.slot)].denominator;
      ++r.overall.denominator;
    }
    for (const std::size_t p : f.missing) {
      ++r.per_slot[SlotIndex(pairs[i].mr.slots()[p].slot)].numerator;
      ++r.overall.numerator;
      ++r.missing;
    }
    for (const std::size_t p : f.contradicted) {
      ++r.per_slot[SlotIndex(pairs[i].mr.slots()[p].slot)].numerator;
      ++r.overall.numerator;
      ++r.contradicted;
    }
  }
  return r;
}

Rate EmphasisRealizationRate(const std::vector<EvalPair> &pairs,
                             const std::vector<PairAnalysis> &analyses) {
  Rate r;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const PairFindings f = InspectPair(pairs[i], analyses[i], nullptr);
    r.numerator += f.emphasis_realized;
    r.denominator += f.emphasized;
  }
  return r;
}

Rate ContrastRealizationRate(const std::vector<EvalPair> &pairs,
                             const std::vector<PairAnalysis> &analyses) {
  Rate r;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const PairFindings f = InspectPair(pairs[i], analyses[i], nullptr);
    if (!f.has_relation) continue;
    ++r.denominator;
    if (f.contrast_realized) ++r.numerator;
  }
  return r;
}

Rate StyleConformanceRate(const std::vector<PairAnalysis> &analyses,
                          Category category) {
  Rate r;
  r.denominator = analyses.size();
  for (const auto &a : analyses) {
    if (a.profile.HasCategory(category)) ++r.numerator;
  }
  return r;
}

std::string_view MetricName(Metric m) {
  switch (m) {
    case Metric::kSer:
      return "ser";
    case Metric::kEmphasis:
      return "emph";
    case Metric::kContrast:
      return "contrast";
    case Metric::kConformance:
      return "conformance";
  }
  return "ser";
}

std::set<Metric> ParseMetrics(std::string_view list) {
  std::set<Metric> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    std::size_t end = list.find(',', pos);
    if (end == std::string_view::npos) end = list.size();
    const std::string name = AsciiLower(TrimView(list.substr(pos, end - pos)));
    pos = end + 1;
    if (name.empty()) continue;
    if (name == "ser") {
      out.insert(Metric::kSer);
    } else if (name == "emph" || name == "emphasis") {
      out.insert(Metric::kEmphasis);
    } else if (name == "contrast") {
      out.insert(Metric::kContrast);
    } else if (name == "conformance" || name == "style") {
      out.insert(Metric::kConformance);
    } else if (name == "all") {
      out = {Metric::kSer, Metric::kEmphasis, Metric::kContrast,
             Metric::kConformance};
    } else {
      throw ValidationError("unknown metric '" + name + "'");
    }
  }
  if (out.empty()) throw ValidationError("no metrics requested");
  return out;
}

EvalReport Evaluate(const std::vector<EvalPair> &pairs, const Toolkit &toolkit,
                    const EvalOptions &options) {
  const auto analyses = AnalyzePairs(pairs, toolkit, options.jobs);
  EvalReport report;
  report.pairs = pairs.size();
  const auto &m = options.metrics;
  if (m.contains(Metric::kSer)) {
    report.ser = SlotErrorRate(pairs, analyses, toolkit.aligner,
                               options.strict_ser);
  }
  if (m.contains(Metric::kEmphasis)) {
    report.emphasis = EmphasisRealizationRate(pairs, analyses);
  }
  if (m.contains(Metric::kContrast)) {
    report.contrast = ContrastRealizationRate(pairs, analyses);
  }
  if (m.contains(Metric::kConformance)) {
    for (const Category c : options.categories) {
      report.conformance[c] = StyleConformanceRate(analyses, c);
    }
  }
  if (options.per_sample) {
    report.samples.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      report.samples.push_back(InspectPair(
          pairs[i], analyses[i],
          options.strict_ser ? &toolkit.aligner : nullptr));
    }
  }
  return report;
}

std::string EvalReport::ToJson() const {
  Json doc;
  doc["pairs"] = pairs;
  if (ser) {
    Json j = RateJson(ser->overall);
    j["strict"] = ser->strict;
    j["missing"] = ser->missing;
    j["contradicted"] = ser->contradicted;
    Json per_slot = Json::object();
    for (const Slot s : kAllSlots) {
      const Rate &r = ser->per_slot[SlotIndex(s)];
      if (r.denominator > 0) per_slot[std::string(CanonicalName(s))] = RateJson(r);
    }
    j["per_slot"] = per_slot;
    doc["slot_error_rate"] = j;
  }
  if (emphasis) doc["emphasis_realization_rate"] = RateJson(*emphasis);
  if (contrast) doc["contrast_realization_rate"] = RateJson(*contrast);
  if (!conformance.empty()) {
    Json j = Json::object();
    for (const auto &[c, r] : conformance) {
      j[std::string(CategoryName(c))] = RateJson(r);
    }
    doc["style_conformance"] = j;
  }
  if (!samples.empty()) {
    Json list = Json::array();
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const PairFindings &f = samples[i];
      Json j;
      j["index"] = i;
      j["missing_slots"] = f.missing;
      if (ser && ser->strict) j["contradicted_slots"] = f.contradicted;
      j["name_aligned"] = f.name_aligned;
      if (f.emphasized > 0) {
        j["emphasized"] = f.emphasized;
        j["emphasis_realized"] = f.emphasis_realized;
      }
      if (f.has_relation) {
        j["contrast_realized"] = f.contrast_realized;
        if (!f.contrast_detail.empty()) j["contrast_detail"] = f.contrast_detail;
      }
      list.push_back(std::move(j));
    }
    doc["samples"] = list;
  }
  return doc.dump(2);
}

AggregationReport AggregationPotential(const Corpus &corpus) {
  using Key = std::tuple<int, std::string, std::string>;
  std::map<Key, std::size_t> counts;
  AggregationReport report;
  report.corpus_size = corpus.size();
  for (const auto &s : corpus.samples) {
    const SlotValue *price = s.mr.Find(Slot::kPriceRange);
    const SlotValue *rating = s.mr.Find(Slot::kCustomerRating);
    if (price == nullptr || rating == nullptr) continue;
    int pm = 0, rm = 0;
    try {
      pm = ScalarMagnitude(Slot::kPriceRange, price->value);
      rm = ScalarMagnitude(Slot::kCustomerRating, rating->value);
    } catch (const OntologyError &) {
      continue;
    }
    if (pm != rm) continue;
    ++counts[{pm, Trim(price->value), Trim(rating->value)}];
    ++report.total;
  }
  for (const auto &[key, n] : counts) {
    report.rows.push_back({std::get<1>(key), std::get<2>(key), n});
  }
  return report;
}

std::string AggregationReport::ToJson() const {
  Json doc;
  Json rows_json = Json::array();
  for (const auto &r : rows) {
    Json j;
    j["price_range"] = r.price_range;
    j["customer_rating"] = r.customer_rating;
    j["count"] = r.count;
    rows_json.push_back(j);
  }
  doc["rows"] = rows_json;
  doc["total"] = total;
  doc["corpus_size"] = corpus_size;
  doc["fraction"] = fraction();
  return doc.dump(2);
}

}  // namespace e2estyle
