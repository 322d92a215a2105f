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

// Randomized properties over generated corpora and utterances.

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "e2estyle/config.h"
#include "e2estyle/evaluation.h"
#include "e2estyle/selection.h"
#include "e2estyle/slot_aligner.h"
#include "test_support.h"

namespace e2estyle {
namespace {

constexpr int kSelectionCases = 1000;

std::set<std::string> Keys(const Corpus &corpus) {
  std::set<std::string> keys;
  for (const CorpusSample &s : corpus.samples) keys.insert(CanonicalKey(s.mr));
  return keys;
}

WeightingSchema RandomSchema(testing::SampleGenerator &gen) {
  WeightingSchema schema;
  for (int &w : schema.weights) w = static_cast<int>(gen.Uniform(4));
  schema.threshold = static_cast<int>(gen.Uniform(7));
  return schema;
}

TEST(SelectionProperties, RandomCorpora) {
  testing::SampleGenerator gen(101);
  const Toolkit &tk = Toolkit::Default();
  for (int c = 0; c < kSelectionCases; ++c) {
    const std::size_t distinct = 1 + gen.Uniform(8);
    const Corpus corpus = gen.MakeCorpus(distinct + gen.Uniform(20), distinct);
    WeightingSchema schema = RandomSchema(gen);
    const auto scored =
        ScoreCorpus(corpus, tk.analyzer, tk.detector, schema, 1);
    const SelectionResult r = SelectStylisticSubset(corpus, scored, schema);

    // Fallback: every MR survives.
    ASSERT_EQ(Keys(r.corpus), Keys(corpus)) << "case " << c;
    ASSERT_EQ(r.unique_mrs, Keys(corpus).size());

    // Subset of the input, in input order.
    ASSERT_TRUE(std::is_sorted(r.kept.begin(), r.kept.end()));
    ASSERT_EQ(r.kept.size(), r.corpus.size());
    for (std::size_t i = 0; i < r.kept.size(); ++i) {
      ASSERT_EQ(r.corpus.samples[i], corpus.samples[r.kept[i]]);
    }

    // Raising the threshold never grows the output.
    WeightingSchema higher = schema;
    higher.threshold += 1 + static_cast<int>(gen.Uniform(3));
    ASSERT_LE(SelectStylisticSubset(corpus, scored, higher).corpus.size(),
              r.corpus.size());

    // Zero weights keep exactly one reference per MR.
    WeightingSchema zero = schema;
    zero.weights.fill(0);
    zero.threshold = 1 + static_cast<int>(gen.Uniform(5));
    const SelectionResult z = SelectStylisticSubset(
        corpus, ScoreCorpus(corpus, tk.analyzer, tk.detector, zero, 1), zero);
    ASSERT_EQ(z.corpus.size(), Keys(corpus).size());

    // Same result under any degree of parallelism.
    const std::size_t jobs = 2 + gen.Uniform(7);
    ASSERT_EQ(SelectStylisticSubset(corpus, tk.analyzer, tk.detector, schema,
                                    jobs)
                  .kept,
              r.kept);

    // Selecting the selection changes nothing.
    const SelectionResult again = SelectStylisticSubset(
        r.corpus, tk.analyzer, tk.detector, schema, 1);
    ASSERT_EQ(again.corpus, r.corpus);
  }
}

// Scores drawn directly, so the fallback tie rule is exercised hard.
TEST(SelectionProperties, RandomScores) {
  testing::SampleGenerator gen(103);
  for (int c = 0; c < kSelectionCases; ++c) {
    const std::size_t distinct = 1 + gen.Uniform(6);
    const Corpus corpus = gen.MakeCorpus(distinct + gen.Uniform(15), distinct);
    std::vector<double> scores;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      scores.push_back(static_cast<double>(gen.Uniform(5)));
    }
    const double threshold = static_cast<double>(gen.Uniform(6));
    const auto kept = SelectIndices(corpus, scores, threshold);

    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      groups[CanonicalKey(corpus.samples[i].mr)].push_back(i);
    }
    std::vector<std::size_t> expected;
    for (const auto &[key, members] : groups) {
      std::size_t best = members[0];
      bool any = false;
      for (std::size_t i : members) {
        if (scores[i] >= threshold) {
          expected.push_back(i);
          any = true;
        }
        if (scores[i] > scores[best]) best = i;
      }
      if (!any) expected.push_back(best);
    }
    std::sort(expected.begin(), expected.end());
    ASSERT_EQ(kept, expected) << "case " << c;
  }
}

TEST(DetectorProperties, AppendingASentenceKeepsHits) {
  testing::SampleGenerator gen(107);
  const Toolkit &tk = Toolkit::Default();
  for (int c = 0; c < 2000; ++c) {
    const MeaningRepresentation mr = gen.Mr();
    std::string text = gen.Coin() ? gen.Reference(mr) : gen.Sentence();
    if (gen.Coin()) text += " " + gen.Sentence();
    const std::string longer = text + " " + gen.Sentence();
    const StyleProfile before = tk.detector.Detect(tk.analyzer.Analyze(text), mr);
    const StyleProfile after =
        tk.detector.Detect(tk.analyzer.Analyze(longer), mr);
    for (MarkerSubset s : kAllMarkerSubsets) {
      for (const MarkerHit &h : before.HitsFor(s)) {
        bool found = false;
        for (const MarkerHit &g : after.HitsFor(s)) {
          found = found || g.marker == h.marker;
        }
        ASSERT_TRUE(found) << MarkerSubsetId(s) << " lost in: " << longer;
      }
    }
  }
}

TEST(EvaluationProperties, DeletingAnAlignedSpanNeverLowersSer) {
  testing::SampleGenerator gen(109);
  const Toolkit &tk = Toolkit::Default();
  EvalOptions options;
  options.metrics = {Metric::kSer};
  for (int c = 0; c < 1000; ++c) {
    const MeaningRepresentation mr = gen.Mr();
    const std::string text = gen.Reference(mr);
    const EvalPair pair{mr, text, "generated"};
    const auto analysis = AnalyzePairs({pair}, tk);
    const Alignment &al = analysis[0].alignment;
    std::vector<Span> spans;
    for (const SlotAlignment &sa : al.slots) {
      for (const AlignedSpan &s : sa.spans) spans.push_back(s.span);
    }
    if (spans.empty()) continue;
    const Span cut = gen.Pick(spans);
    const std::string shorter =
        text.substr(0, cut.begin) + text.substr(cut.end);
    const Rate before = Evaluate({pair}, tk, options).ser->overall;
    const Rate after =
        Evaluate({EvalPair{mr, shorter, "generated"}}, tk, options).ser->overall;
    ASSERT_GE(after.numerator, before.numerator) << text << " -> " << shorter;
  }
}

TEST(DelexProperties, RoundTripOnExactlyAlignedSlice) {
  testing::SampleGenerator gen(113);
  const Toolkit &tk = Toolkit::Default();
  const Corpus slice = gen.MakeCorpus(1000, 900);
  std::size_t eligible = 0;
  for (const CorpusSample &s : slice.samples) {
    const AnalyzedUtterance u = tk.analyzer.Analyze(s.ref);
    const Alignment al = tk.aligner.Align(s.mr, u);
    if (!IsExactlyAligned(s.mr, u, al)) continue;
    ++eligible;
    const DelexResult d = Delexicalize(s.mr, u, al);
    for (const SlotValue &sv : d.mr.slots()) {
      if (IsDelexicalizedSlot(sv.slot)) {
        ASSERT_EQ(sv.value, Placeholder(sv.slot));
      }
    }
    ASSERT_EQ(Relexicalize(d.utterance, s.mr), s.ref);
  }
  EXPECT_EQ(eligible, slice.size());
}

}  // namespace
}  // namespace e2estyle
