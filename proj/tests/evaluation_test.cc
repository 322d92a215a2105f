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

#include <gtest/gtest.h>

#include <map>

#include "e2estyle/annotation.h"
#include "e2estyle/config.h"
#include "e2estyle/csv.h"
#include "e2estyle/error.h"
#include "e2estyle/evaluation.h"
#include "e2estyle/selection.h"
#include "test_support.h"

namespace e2estyle {
namespace {

constexpr char kWildwoodMr[] =
    "name[Wildwood], eatType[coffee shop], food[English], "
    "priceRange[moderate], customer rating[1 out of 5], near[Ranch]";
constexpr char kWildwoodEmphMr[] =
    "name[Wildwood], <emph> eatType[coffee shop], <emph> food[English], "
    "priceRange[moderate], customer rating[1 out of 5], <emph> near[Ranch]";

EvalReport Eval(std::vector<EvalPair> pairs, bool strict = false,
                std::size_t jobs = 1) {
  EvalOptions options;
  options.strict_ser = strict;
  options.jobs = jobs;
  return Evaluate(pairs, Toolkit::Default(), options);
}

EvalPair Pair(const std::string &mr, const std::string &text) {
  return {ParseMr(mr), text, "test"};
}

TEST(SlotErrorRate, FullyRealizedPairHasNoErrors) {
  const EvalReport r = Eval({Pair(
      kWildwoodMr,
      "There is an English coffee shop near Ranch called Wildwood. It has a "
      "moderate price range and a customer rating of 1 out of 5.")});
  EXPECT_EQ(r.ser->overall, (Rate{0, 6}));
}

TEST(SlotErrorRate, UnemphasizedReferenceMissesRating) {
  const EvalReport r = Eval({Pair(
      kWildwoodMr,
      "Wildwood is a coffee shop providing English food in the moderate "
      "price range. It is located near Ranch.")});
  EXPECT_EQ(r.ser->overall, (Rate{1, 6}));
  EXPECT_EQ(r.ser->per_slot[SlotIndex(Slot::kCustomerRating)], (Rate{1, 1}));
  ASSERT_EQ(r.samples.size(), 1u);
  EXPECT_EQ(r.samples[0].missing, std::vector<std::size_t>{4});
}

TEST(SlotErrorRate, AnnotationsNotInDenominator) {
  const EvalReport r = Eval({Pair(
      "name[X], <emph> customer rating[5 out of 5], familyFriendly[no], "
      "<contrast>[customer_rating familyFriendly]",
      "X has a 5 out of 5 rating but is not family friendly.")});
  EXPECT_EQ(r.ser->overall.denominator, 3u);
}

TEST(SlotErrorRate, StrictModeCountsContradictions) {
  const EvalPair p =
      Pair("name[X], eatType[pub], familyFriendly[no]",
           "X is a pub. It is not family friendly, it is family friendly.");
  EXPECT_EQ(Eval({p}).ser->overall.numerator, 0u);
  const EvalReport strict = Eval({p}, true);
  EXPECT_EQ(strict.ser->overall.numerator, 1u);
  EXPECT_EQ(strict.ser->contradicted, 1u);
}

TEST(EmphasisRealization, EmphasizedReference) {
  const EvalReport r = Eval({Pair(
      kWildwoodEmphMr,
      "There is an English coffee shop near Ranch called Wildwood. It has a "
      "moderate price range and a customer rating of 1 out of 5.")});
  EXPECT_EQ(*r.emphasis, (Rate{3, 3}));
}

TEST(EmphasisRealization, NameFirstRealizesNothing) {
  const EvalReport r = Eval({Pair("name[Zizzi], <emph> eatType[pub]",
                                  "Zizzi is a pub.")});
  EXPECT_EQ(*r.emphasis, (Rate{0, 1}));
}

TEST(EmphasisRealization, UndefinedWithoutAnnotations) {
  const EvalReport r = Eval({Pair("name[Zizzi], eatType[pub]", "Zizzi is a pub.")});
  ASSERT_TRUE(r.emphasis.has_value());
  EXPECT_EQ(r.emphasis->denominator, 0u);
  EXPECT_FALSE(r.emphasis->value().has_value());
  EXPECT_NE(r.ToJson().find("\"rate\": null"), std::string::npos);
}

TEST(ContrastRealization, RiceBoatRealized) {
  const EvalReport r = Eval({Pair(
      "name[The Rice Boat], food[Chinese], customer rating[5 out of 5], "
      "area[riverside], familyFriendly[no], "
      "<contrast>[customer_rating familyFriendly]",
      "The Rice Boat is a Chinese restaurant in the riverside area. It has a "
      "customer rating of 5 out of 5 but is not family friendly.")});
  EXPECT_EQ(*r.contrast, (Rate{1, 1}));
}

TEST(ContrastRealization, SeparateSentencesWithoutMarker) {
  const EvalReport r = Eval({Pair(
      "name[X], customer rating[5 out of 5], familyFriendly[no], "
      "<contrast>[customer_rating familyFriendly]",
      "X has a 5 out of 5 rating. It is not family friendly.")});
  EXPECT_EQ(*r.contrast, (Rate{0, 1}));
}

TEST(StyleConformance, BareDeclarativesConformToNothing) {
  std::vector<EvalPair> pairs;
  for (const char *name : {"Zizzi", "Cotto", "Aromi"}) {
    pairs.push_back(Pair(std::string("name[") + name + "], eatType[pub]",
                         std::string(name) + " is a pub."));
  }
  const EvalReport r = Eval(pairs);
  for (Category c : kAllCategories) {
    EXPECT_EQ(r.conformance.at(c), (Rate{0, 3})) << CategoryName(c);
  }
}

TEST(StyleConformance, CategorySubsetConformsFully) {
  testing::SampleGenerator gen(47);
  Corpus corpus = gen.MakeCorpus(400, 300);
  for (const auto &ex : testing::CategoryExamples()) {
    corpus.samples.push_back({ParseMr(ex.mr), ex.text, Split::kTraining});
  }
  const Toolkit &tk = Toolkit::Default();
  for (Category c : kAllCategories) {
    const Corpus subset =
        ExtractCategorySubset(corpus, c, tk.analyzer, tk.detector);
    ASSERT_FALSE(subset.empty()) << CategoryName(c);
    const std::vector<EvalPair> pairs = PairsFromCorpus(subset);
    const auto analyses = AnalyzePairs(pairs, tk);
    const Rate r = StyleConformanceRate(analyses, c);
    EXPECT_EQ(r.numerator, r.denominator) << CategoryName(c);
  }
}

// Closure: annotations produced from references are realized by them.
TEST(OracleClosure, EmphasisAndContrastOnSyntheticSlice) {
  testing::SampleGenerator gen(53);
  Corpus corpus = gen.MakeCorpus(500, 400);
  for (const auto &ex : testing::CategoryExamples()) {
    corpus.samples.push_back({ParseMr(ex.mr), ex.text, Split::kTraining});
  }
  corpus.samples.push_back(
      {ParseMr("name[X], customer rating[5 out of 5], priceRange[cheap]"),
       "X is highly rated but cheap.", Split::kTraining});
  const Toolkit &tk = Toolkit::Default();
  const EmphasisAnnotation emph = AnnotateEmphasis(corpus, tk);
  const EvalReport er = Eval(PairsFromCorpus(emph.corpus));
  ASSERT_GT(er.emphasis->denominator, 0u);
  EXPECT_EQ(er.emphasis->numerator, er.emphasis->denominator);
  EXPECT_EQ(er.emphasis->denominator, emph.emphasized_slots);

  const ContrastAnnotation con = AnnotateContrast(corpus, tk);
  Corpus labeled;
  for (const CorpusSample &s : con.corpus.samples) {
    if (s.mr.relation()) labeled.samples.push_back(s);
  }
  ASSERT_GT(labeled.size(), 0u);
  const EvalReport cr = Eval(PairsFromCorpus(labeled));
  EXPECT_EQ(cr.contrast->numerator, cr.contrast->denominator);
}

// Hand-built outputs that must score 0% and 100% on every metric.
TEST(Adversarial, ZeroAndFullScores) {
  const std::string mr =
      "name[X], <emph> food[English], customer rating[5 out of 5], "
      "familyFriendly[no], <contrast>[customer_rating familyFriendly]";
  const EvalReport good = Eval({Pair(
      mr,
      "For English food, try X. It has a 5 out of 5 rating but is not family "
      "friendly.")});
  EXPECT_EQ(good.ser->overall.numerator, 0u);
  EXPECT_EQ(*good.emphasis, (Rate{1, 1}));
  EXPECT_EQ(*good.contrast, (Rate{1, 1}));

  const EvalReport bad = Eval({Pair(mr, "It is a place to go.")});
  EXPECT_EQ(bad.ser->overall, (Rate{4, 4}));
  EXPECT_EQ(*bad.emphasis, (Rate{0, 1}));
  EXPECT_EQ(*bad.contrast, (Rate{0, 1}));
  for (Category c : kAllCategories) {
    if (c == Category::kImperativeModal) continue;
    EXPECT_EQ(bad.conformance.at(c).numerator, 0u) << CategoryName(c);
  }
}

TEST(ParseMetrics, NamesAndErrors) {
  EXPECT_EQ(ParseMetrics("ser,emph"),
            (std::set<Metric>{Metric::kSer, Metric::kEmphasis}));
  EXPECT_EQ(ParseMetrics("all").size(), 4u);
  EXPECT_THROW(ParseMetrics("ser,bleu"), ValidationError);
}

TEST(Evaluate, OnlyRequestedMetrics) {
  EvalOptions options;
  options.metrics = {Metric::kSer};
  const EvalReport r =
      Evaluate({Pair("name[Zizzi], eatType[pub]", "Zizzi is a pub.")},
               Toolkit::Default(), options);
  EXPECT_TRUE(r.ser.has_value());
  EXPECT_FALSE(r.emphasis.has_value());
  EXPECT_TRUE(r.conformance.empty());
}

TEST(Evaluate, IdenticalAcrossJobs) {
  testing::SampleGenerator gen(59);
  const Corpus corpus = gen.MakeCorpus(400, 300);
  const auto pairs = PairsFromCorpus(corpus);
  const std::string one = Eval(pairs, true, 1).ToJson();
  EXPECT_EQ(Eval(pairs, true, 3).ToJson(), one);
  EXPECT_EQ(Eval(pairs, true, 8).ToJson(), one);
}

TEST(AggregationPotential, CountsLevelMatchedPairsOnly) {
  Corpus corpus;
  const auto add = [&](const char *price, const char *rating, int times) {
    for (int i = 0; i < times; ++i) {
      corpus.samples.push_back(
          {ParseMr(std::string("name[A], priceRange[") + price +
                   "], customer rating[" + rating + "]"),
           "", Split::kTraining});
    }
  };
  add("less than £20", "low", 3);
  add("£20-25", "average", 2);
  add("more than £30", "high", 1);
  add("more than £30", "5 out of 5", 1);
  add("cheap", "1 out of 5", 1);
  add("cheap", "5 out of 5", 4);        // levels differ
  add("moderate", "low", 2);            // levels differ
  corpus.samples.push_back(
      {ParseMr("name[B], priceRange[cheap]"), "", Split::kTraining});
  const AggregationReport r = AggregationPotential(corpus);
  EXPECT_EQ(r.total, 8u);
  EXPECT_EQ(r.corpus_size, 15u);
  ASSERT_EQ(r.rows.size(), 5u);
  std::map<std::pair<std::string, std::string>, std::size_t> rows;
  for (const AggregationRow &row : r.rows) {
    rows[{row.price_range, row.customer_rating}] = row.count;
  }
  EXPECT_EQ((rows[{"less than £20", "low"}]), 3u);
  EXPECT_EQ((rows[{"£20-25", "average"}]), 2u);
  EXPECT_EQ((rows[{"more than £30", "high"}]), 1u);
  EXPECT_EQ((rows[{"more than £30", "5 out of 5"}]), 1u);
  EXPECT_EQ((rows[{"cheap", "1 out of 5"}]), 1u);
}

TEST(AggregationPotential, EmptyWhenSlotsAbsent) {
  Corpus corpus;
  corpus.samples.push_back(
      {ParseMr("name[B], customer rating[low]"), "", Split::kTraining});
  EXPECT_TRUE(AggregationPotential(corpus).rows.empty());
}

TEST(LoadEvalPairs, OutputColumnWithRefFallback) {
  const std::string path = ::testing::TempDir() + "/outputs.csv";
  WriteFile(path, "mr,output\n\"name[A], eatType[pub]\",A is a pub.\n");
  const auto pairs = LoadEvalPairs(path);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].utterance, "A is a pub.");
  WriteFile(path, "mr,ref\n\"name[A], eatType[pub]\",A is a pub!\n");
  EXPECT_EQ(LoadEvalPairs(path)[0].utterance, "A is a pub!");
  WriteFile(path, "mr,text\n\"name[A]\",x\n");
  EXPECT_THROW(LoadEvalPairs(path), ValidationError);
}

}  // namespace
}  // namespace e2estyle
