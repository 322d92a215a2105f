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

#include "e2estyle/slot.h"

#include "e2estyle/strings.h"

namespace e2estyle {
namespace {

struct SlotNames {
  std::string_view canonical;
  std::string_view relation;
  std::string_view surface;
};

constexpr std::array<SlotNames, kNumSlots> kNames = {{
    {"name", "name", "name"},
    {"eatType", "eatType", "eatType"},
    {"food", "food", "food"},
    {"priceRange", "priceRange", "priceRange"},
    {"customerRating", "customer_rating", "customer rating"},
    {"area", "area", "area"},
    {"familyFriendly", "familyFriendly", "familyFriendly"},
    {"near", "near", "near"},
}};

}  // namespace

std::string_view CanonicalName(Slot slot) {
  return kNames[SlotIndex(slot)].canonical;
}

std::string_view RelationName(Slot slot) {
  return kNames[SlotIndex(slot)].relation;
}

std::string_view CorpusSurfaceName(Slot slot) {
  return kNames[SlotIndex(slot)].surface;
}

std::optional<Slot> SlotFromName(std::string_view name) {
  // Compare with separators removed so "customer rating", "customer_rating"
  // and "customerRating" all resolve to the same slot.
  std::string key;
  for (const char c : name) {
    if (c == ' ' || c == '_' || c == '-') continue;
    key.push_back(c);
  }
  for (const Slot slot : kAllSlots) {
    std::string canonical;
    for (const char c : CanonicalName(slot)) canonical.push_back(c);
    if (EqualsIgnoreCase(key, canonical)) return slot;
  }
  return std::nullopt;
}

}  // namespace e2estyle
