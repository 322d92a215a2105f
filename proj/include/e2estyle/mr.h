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

// Meaning representations: parsing, serialization and canonical keys.
//
// The textual form is the E2E one, a comma-separated list of
// `slotName[value]` items, extended with two kinds of annotation:
//
//   <emph> food[English]                    emphasis flag on the next item
//   <contrast>[priceRange customer_rating]  relation between two slots
//   <concession>[priceRange customer_rating]

#ifndef E2ESTYLE_MR_H_
#define E2ESTYLE_MR_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "e2estyle/slot.h"

namespace e2estyle {

struct SlotValue {
  Slot slot = Slot::kName;
  std::string value;
  // Slot name exactly as written in the source text ("customer rating",
  // "customerRating", ...). Serialization reproduces it.
  std::string surface;
  bool emphasized = false;

  bool operator==(const SlotValue &) const = default;
};

enum class RelationKind { kContrast, kConcession };

std::string_view RelationKindName(RelationKind kind);  // "contrast" etc.

struct Relation {
  RelationKind kind = RelationKind::kContrast;
  Slot first = Slot::kPriceRange;
  Slot second = Slot::kCustomerRating;

  bool operator==(const Relation &) const = default;
};

class MeaningRepresentation {
 public:
  MeaningRepresentation() = default;

  const std::vector<SlotValue> &slots() const { return slots_; }
  std::size_t size() const { return slots_.size(); }
  bool empty() const { return slots_.empty(); }

  // Appends a content slot. Throws StructuralError if the slot is already
  // present. An empty surface defaults to the E2E surface name.
  void Add(Slot slot, std::string value, std::string surface = {});

  bool Has(Slot slot) const { return Find(slot) != nullptr; }
  const SlotValue *Find(Slot slot) const;
  std::optional<std::size_t> PositionOf(Slot slot) const;

  void SetEmphasis(std::size_t position, bool on = true);
  void ClearEmphasis();
  std::vector<std::size_t> EmphasisPositions() const;
  bool HasEmphasis() const;

  const std::optional<Relation> &relation() const { return relation_; }
  // Throws StructuralError when either slot is absent or both are equal.
  void SetRelation(const Relation &relation);
  void ClearRelation() { relation_.reset(); }

  // Replaces the value of a present slot.
  void SetValue(Slot slot, std::string value);

  bool operator==(const MeaningRepresentation &) const = default;

 private:
  std::vector<SlotValue> slots_;
  std::optional<Relation> relation_;
};

// Parses MR text. Throws ParseError for malformed items (carrying the byte
// offset) and StructuralError for duplicate slots or dangling references.
// The 3-to-8 slot corpus invariant is not enforced here.
MeaningRepresentation ParseMr(std::string_view text);

// Inverse of ParseMr on canonical text: items joined by ", ", each emphasized
// item preceded by "<emph> ", and the relation appended as the last item.
std::string SerializeMr(const MeaningRepresentation &mr);

// Order-insensitive identity of an MR: slots sorted by canonical name,
// values trimmed, annotations dropped.
std::string CanonicalKey(const MeaningRepresentation &mr);

// Corpus invariant: 3 to 8 content slots.
bool HasCorpusSlotCount(const MeaningRepresentation &mr);

}  // namespace e2estyle

#endif  // E2ESTYLE_MR_H_
