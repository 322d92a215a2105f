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

#ifndef E2ESTYLE_SLOT_H_
#define E2ESTYLE_SLOT_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace e2estyle {

// The eight content slots of the restaurant ontology.
enum class Slot {
  kName,
  kEatType,
  kFood,
  kPriceRange,
  kCustomerRating,
  kArea,
  kFamilyFriendly,
  kNear,
};

inline constexpr std::size_t kNumSlots = 8;

inline constexpr std::array<Slot, kNumSlots> kAllSlots = {
    Slot::kName,          Slot::kEatType, Slot::kFood,
    Slot::kPriceRange,    Slot::kCustomerRating,
    Slot::kArea,          Slot::kFamilyFriendly, Slot::kNear,
};

inline constexpr std::size_t SlotIndex(Slot slot) {
  return static_cast<std::size_t>(slot);
}

// camelCase name used internally and in reports, e.g. "customerRating".
std::string_view CanonicalName(Slot slot);

// Name used inside auxiliary relation values, e.g. "customer_rating".
std::string_view RelationName(Slot slot);

// Name as it appears in the public E2E files, e.g. "customer rating".
std::string_view CorpusSurfaceName(Slot slot);

// Accepts camelCase, the E2E surface form and the snake_case relation form,
// in any ASCII case.
std::optional<Slot> SlotFromName(std::string_view name);

}  // namespace e2estyle

#endif  // E2ESTYLE_SLOT_H_
