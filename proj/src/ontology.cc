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

#include "e2estyle/ontology.h"

#include <array>
#include <string>

#include "e2estyle/error.h"
#include "e2estyle/strings.h"

namespace e2estyle {
namespace {

constexpr std::array<std::string_view, 6> kPriceValues = {
    "cheap", "moderate", "high", "less than £20", "£20-25", "more than £30",
};
constexpr std::array<int, 6> kPriceMagnitude = {1, 2, 3, 1, 2, 3};

constexpr std::array<std::string_view, 6> kRatingValues = {
    "low", "average", "high", "1 out of 5", "3 out of 5", "5 out of 5",
};
constexpr std::array<int, 6> kRatingMagnitude = {1, 2, 3, 1, 2, 3};

constexpr std::array<std::string_view, 2> kFamilyValues = {"yes", "no"};

template <std::size_t N>
int IndexOf(const std::array<std::string_view, N> &values,
            std::string_view value) {
  const std::string_view v = TrimView(value);
  for (std::size_t i = 0; i < N; ++i) {
    if (EqualsIgnoreCase(values[i], v)) return static_cast<int>(i);
  }
  return -1;
}

[[noreturn]] void Unknown(Slot slot, std::string_view value) {
  throw OntologyError("value '" + std::string(value) + "' is not in the " +
                      std::string(CanonicalName(slot)) + " ontology");
}

}  // namespace

bool IsRelationSlot(Slot slot) {
  return slot == Slot::kPriceRange || slot == Slot::kCustomerRating ||
         slot == Slot::kFamilyFriendly;
}

std::span<const std::string_view> DocumentedValues(Slot slot) {
  switch (slot) {
    case Slot::kPriceRange:
      return kPriceValues;
    case Slot::kCustomerRating:
      return kRatingValues;
    case Slot::kFamilyFriendly:
      return kFamilyValues;
    default:
      return {};
  }
}

int ScalarMagnitude(Slot slot, std::string_view value) {
  if (slot == Slot::kPriceRange) {
    const int i = IndexOf(kPriceValues, value);
    if (i < 0) Unknown(slot, value);
    return kPriceMagnitude[static_cast<std::size_t>(i)];
  }
  if (slot == Slot::kCustomerRating) {
    const int i = IndexOf(kRatingValues, value);
    if (i < 0) Unknown(slot, value);
    return kRatingMagnitude[static_cast<std::size_t>(i)];
  }
  throw OntologyError("slot '" + std::string(CanonicalName(slot)) +
                      "' is not scalar");
}

Positivity MapPositivity(Slot slot, std::string_view value) {
  switch (slot) {
    case Slot::kCustomerRating:
      return static_cast<Positivity>(ScalarMagnitude(slot, value));
    case Slot::kPriceRange:
      // Expensive is the negative end of the scale.
      return static_cast<Positivity>(4 - ScalarMagnitude(slot, value));
    case Slot::kFamilyFriendly: {
      const int i = IndexOf(kFamilyValues, value);
      if (i < 0) Unknown(slot, value);
      return i == 0 ? Positivity::kPositive : Positivity::kNegative;
    }
    default:
      throw OntologyError("slot '" + std::string(CanonicalName(slot)) +
                          "' has no positivity scale");
  }
}

}  // namespace e2estyle
