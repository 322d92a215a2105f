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

#include "e2estyle/error.h"
#include "e2estyle/mr.h"
#include "test_support.h"

namespace e2estyle {
namespace {

constexpr char kWaterman[] =
    "name[The Waterman], food[English], priceRange[cheap], "
    "customer rating[low], area[city centre], familyFriendly[yes]";

TEST(ParseMr, KeepsSlotOrderAndValues) {
  const MeaningRepresentation mr = ParseMr(kWaterman);
  ASSERT_EQ(mr.size(), 6u);
  EXPECT_EQ(mr.slots()[0].slot, Slot::kName);
  EXPECT_EQ(mr.slots()[0].value, "The Waterman");
  EXPECT_EQ(mr.slots()[3].slot, Slot::kCustomerRating);
  EXPECT_EQ(mr.slots()[3].value, "low");
  EXPECT_EQ(mr.slots()[5].slot, Slot::kFamilyFriendly);
  EXPECT_FALSE(mr.HasEmphasis());
  EXPECT_FALSE(mr.relation().has_value());
}

TEST(ParseMr, SingleSlotIsAccepted) {
  const MeaningRepresentation mr = ParseMr("name[X]");
  EXPECT_EQ(mr.size(), 1u);
  EXPECT_FALSE(HasCorpusSlotCount(mr));
}

TEST(ParseMr, EmphasisTokens) {
  const MeaningRepresentation mr = ParseMr(
      "name[Wildwood], <emph> eatType[coffee shop], <emph> food[English], "
      "priceRange[moderate], customer rating[1 out of 5], <emph> near[Ranch]");
  EXPECT_EQ(mr.EmphasisPositions(), (std::vector<std::size_t>{1, 2, 5}));
  EXPECT_EQ(ParseMr(SerializeMr(mr)), mr);
}

TEST(ParseMr, SlotNameVariants) {
  const MeaningRepresentation a = ParseMr("name[A], customer rating[low]");
  const MeaningRepresentation b = ParseMr("name[A], customerRating[low]");
  EXPECT_EQ(a.slots()[1].slot, Slot::kCustomerRating);
  EXPECT_EQ(b.slots()[1].slot, Slot::kCustomerRating);
  EXPECT_EQ(CanonicalKey(a), CanonicalKey(b));
}

TEST(ParseMr, RelationItem) {
  const MeaningRepresentation mr = ParseMr(
      "name[A], priceRange[cheap], customer rating[high], "
      "<concession>[priceRange customer_rating]");
  ASSERT_TRUE(mr.relation().has_value());
  EXPECT_EQ(mr.relation()->kind, RelationKind::kConcession);
  EXPECT_EQ(mr.relation()->first, Slot::kPriceRange);
  EXPECT_EQ(mr.relation()->second, Slot::kCustomerRating);
  EXPECT_EQ(mr.size(), 3u);
}

TEST(ParseMr, MalformedItemsReportOffsets) {
  for (const char *bad : {"name[X", "name[X], bogus[1]", "name[]",
                          "name[X], food", "name[X],, food[English]"}) {
    try {
      ParseMr(bad);
      ADD_FAILURE() << "accepted: " << bad;
    } catch (const ParseError &e) {
      EXPECT_LE(e.offset(), std::string_view(bad).size()) << bad;
    }
  }
}

TEST(ParseMr, DuplicateSlotIsStructural) {
  EXPECT_THROW(ParseMr("name[X], food[English], food[French]"),
               StructuralError);
}

TEST(ParseMr, DanglingRelationIsStructural) {
  EXPECT_THROW(ParseMr("name[X], priceRange[cheap], "
                       "<contrast>[priceRange customer_rating]"),
               StructuralError);
}

TEST(SerializeMr, SingleSlot) {
  MeaningRepresentation mr;
  mr.Add(Slot::kName, "Fitzbillies");
  EXPECT_EQ(SerializeMr(mr), "name[Fitzbillies]");
}

TEST(SerializeMr, RelationSuffixUsesSnakeCase) {
  MeaningRepresentation mr = ParseMr(
      "name[A], priceRange[high], customer rating[5 out of 5]");
  mr.SetRelation({RelationKind::kContrast, Slot::kPriceRange,
                  Slot::kCustomerRating});
  const std::string text = SerializeMr(mr);
  const std::string suffix = "<contrast>[priceRange customer_rating]";
  ASSERT_GE(text.size(), suffix.size());
  EXPECT_EQ(text.substr(text.size() - suffix.size()), suffix);
}

TEST(SerializeMr, WatermanRoundTrip) {
  EXPECT_EQ(SerializeMr(ParseMr(kWaterman)), kWaterman);
}

TEST(CanonicalKey, IgnoresOrderSpacingAndAnnotations) {
  const MeaningRepresentation a =
      ParseMr("name[A], food[English], priceRange[cheap]");
  const MeaningRepresentation b = ParseMr(
      "<emph> priceRange[ cheap ], name[A], food[English], "
      "<contrast>[priceRange food]");
  EXPECT_EQ(CanonicalKey(a), CanonicalKey(b));
  EXPECT_NE(CanonicalKey(a),
            CanonicalKey(ParseMr("name[A], food[French], priceRange[cheap]")));
}

TEST(MrRoundTrip, RandomMrsWithAnnotations) {
  testing::SampleGenerator gen(11);
  for (int i = 0; i < 2000; ++i) {
    MeaningRepresentation mr = gen.Mr(1, 8);
    for (std::size_t p = 0; p < mr.size(); ++p) {
      if (gen.Coin(0.3)) mr.SetEmphasis(p);
    }
    std::vector<Slot> relation_slots;
    for (const SlotValue &sv : mr.slots()) {
      if (sv.slot != Slot::kName && sv.slot != Slot::kEatType) {
        relation_slots.push_back(sv.slot);
      }
    }
    if (relation_slots.size() >= 2 && gen.Coin()) {
      mr.SetRelation({gen.Coin() ? RelationKind::kContrast
                                 : RelationKind::kConcession,
                      relation_slots[0], relation_slots[1]});
    }
    const std::string text = SerializeMr(mr);
    ASSERT_EQ(ParseMr(text), mr) << text;
    ASSERT_EQ(SerializeMr(ParseMr(text)), text);
  }
}

}  // namespace
}  // namespace e2estyle
