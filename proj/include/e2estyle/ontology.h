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

// Value sets of the scalar and boolean slots and their positivity scale.

#ifndef E2ESTYLE_ONTOLOGY_H_
#define E2ESTYLE_ONTOLOGY_H_

#include <span>
#include <string_view>

#include "e2estyle/slot.h"

namespace e2estyle {

// 1 = negative, 2 = neutral, 3 = positive.
enum class Positivity { kNegative = 1, kNeutral = 2, kPositive = 3 };

inline int PositivityValue(Positivity p) { return static_cast<int>(p); }

// Slots that may take part in a contrast/concession relation.
bool IsRelationSlot(Slot slot);

// Documented values of priceRange, customerRating and familyFriendly; empty
// for other slots.
std::span<const std::string_view> DocumentedValues(Slot slot);

// Positivity of a relation slot value. Price is inverted: cheap is
// positive. familyFriendly only maps to 1 or 3. Throws OntologyError for
// other slots or unknown values. Matching ignores case and outer spaces.
Positivity MapPositivity(Slot slot, std::string_view value);

// Raw magnitude of a scalar slot value on its own 3-point scale, without
// the price inversion: cheap / less than £20 and low / 1 out of 5 are 1,
// moderate / £20-25 and average / 3 out of 5 are 2, high / more than £30
// and high / 5 out of 5 are 3. Throws OntologyError as MapPositivity.
int ScalarMagnitude(Slot slot, std::string_view value);

}  // namespace e2estyle

#endif  // E2ESTYLE_ONTOLOGY_H_
