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

#include "e2estyle/mr.h"

#include <algorithm>

#include "e2estyle/error.h"
#include "e2estyle/strings.h"

namespace e2estyle {
namespace {

constexpr std::string_view kEmphToken = "<emph>";
constexpr std::string_view kContrastToken = "<contrast>";
constexpr std::string_view kConcessionToken = "<concession>";

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

// Recursive-descent style cursor over the MR text.
class MrParser {
 public:
  explicit MrParser(std::string_view text) : text_(text) {}

  MeaningRepresentation Parse() {
    SkipSpace();
    if (AtEnd()) throw ParseError("empty meaning representation", pos_);
    while (true) {
      ParseItem();
      SkipSpace();
      if (AtEnd()) break;
      if (text_[pos_] != ',') {
        throw ParseError("expected ',' between items", pos_);
      }
      ++pos_;
      SkipSpace();
      if (AtEnd()) throw ParseError("trailing ',' with no item", pos_);
    }
    if (pending_relation_) mr_.SetRelation(*pending_relation_);
    return std::move(mr_);
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }

  void SkipSpace() {
    while (!AtEnd() && IsSpace(text_[pos_])) ++pos_;
  }

  bool Consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void ParseItem() {
    const std::size_t item_start = pos_;
    bool emphasized = false;
    while (Consume(kEmphToken)) {
      emphasized = true;
      SkipSpace();
    }
    if (Consume(kContrastToken)) {
      if (emphasized) throw ParseError("<emph> before a relation", item_start);
      ParseRelation(RelationKind::kContrast, item_start);
      return;
    }
    if (Consume(kConcessionToken)) {
      if (emphasized) throw ParseError("<emph> before a relation", item_start);
      ParseRelation(RelationKind::kConcession, item_start);
      return;
    }
    ParseSlot(emphasized, item_start);
  }

  void ParseSlot(bool emphasized, std::size_t item_start) {
    const std::size_t name_start = pos_;
    while (!AtEnd() && text_[pos_] != '[' && text_[pos_] != ',' &&
           text_[pos_] != ']') {
      ++pos_;
    }
    if (AtEnd() || text_[pos_] != '[') {
      throw ParseError("missing '[' after slot name in item '" +
                           std::string(text_.substr(item_start,
                                                    pos_ - item_start)) +
                           "'",
                       item_start);
    }
    const std::string_view name =
        TrimView(text_.substr(name_start, pos_ - name_start));
    if (name.empty()) throw ParseError("missing slot name", name_start);
    const auto slot = SlotFromName(name);
    if (!slot) {
      throw ParseError("unknown slot name '" + std::string(name) + "'",
                       name_start);
    }
    ++pos_;  // '['
    const std::size_t value_start = pos_;
    const std::size_t close = text_.find(']', pos_);
    if (close == std::string_view::npos) {
      throw ParseError("missing ']' in item '" + std::string(name) + "'",
                       item_start);
    }
    const std::string_view value =
        TrimView(text_.substr(value_start, close - value_start));
    if (value.empty()) {
      throw ParseError("empty value for slot '" + std::string(name) + "'",
                       value_start);
    }
    pos_ = close + 1;
    if (mr_.Has(*slot)) {
      throw StructuralError("duplicate slot '" +
                            std::string(CanonicalName(*slot)) +
                            "' at byte " + std::to_string(item_start));
    }
    mr_.Add(*slot, std::string(value), std::string(name));
    if (emphasized) mr_.SetEmphasis(mr_.size() - 1);
  }

  void ParseRelation(RelationKind kind, std::size_t item_start) {
    SkipSpace();
    if (AtEnd() || text_[pos_] != '[') {
      throw ParseError("missing '[' in relation item", item_start);
    }
    const std::size_t value_start = ++pos_;
    const std::size_t close = text_.find(']', pos_);
    if (close == std::string_view::npos) {
      throw ParseError("missing ']' in relation item", item_start);
    }
    const auto names =
        SplitWhitespace(text_.substr(value_start, close - value_start));
    if (names.size() != 2) {
      throw ParseError("relation must name exactly two slots", value_start);
    }
    const auto first = SlotFromName(names[0]);
    const auto second = SlotFromName(names[1]);
    if (!first || !second) {
      throw ParseError("unknown slot name in relation", value_start);
    }
    if (pending_relation_) {
      throw StructuralError("more than one relation item at byte " +
                            std::to_string(item_start));
    }
    pending_relation_ = Relation{kind, *first, *second};
    pos_ = close + 1;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  MeaningRepresentation mr_;
  std::optional<Relation> pending_relation_;
};

}  // namespace

std::string_view RelationKindName(RelationKind kind) {
  return kind == RelationKind::kContrast ? "contrast" : "concession";
}

void MeaningRepresentation::Add(Slot slot, std::string value,
                                std::string surface) {
  if (Has(slot)) {
    throw StructuralError("duplicate slot '" +
                          std::string(CanonicalName(slot)) + "'");
  }
  if (surface.empty()) surface = std::string(CorpusSurfaceName(slot));
  slots_.push_back(SlotValue{slot, std::move(value), std::move(surface), false});
}

const SlotValue *MeaningRepresentation::Find(Slot slot) const {
  for (const auto &sv : slots_) {
    if (sv.slot == slot) return &sv;
  }
  return nullptr;
}

std::optional<std::size_t> MeaningRepresentation::PositionOf(Slot slot) const {
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (slots_[i].slot == slot) return i;
  }
  return std::nullopt;
}

void MeaningRepresentation::SetEmphasis(std::size_t position, bool on) {
  if (position >= slots_.size()) {
    throw StructuralError("emphasis position " + std::to_string(position) +
                          " out of range");
  }
  slots_[position].emphasized = on;
}

void MeaningRepresentation::ClearEmphasis() {
  for (auto &sv : slots_) sv.emphasized = false;
}

std::vector<std::size_t> MeaningRepresentation::EmphasisPositions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (slots_[i].emphasized) out.push_back(i);
  }
  return out;
}

bool MeaningRepresentation::HasEmphasis() const {
  return std::any_of(slots_.begin(), slots_.end(),
                     [](const SlotValue &sv) { return sv.emphasized; });
}

void MeaningRepresentation::SetRelation(const Relation &relation) {
  if (relation.first == relation.second) {
    throw StructuralError("relation slots must differ");
  }
  if (!Has(relation.first) || !Has(relation.second)) {
    throw StructuralError("relation refers to a slot missing from the MR");
  }
  relation_ = relation;
}

void MeaningRepresentation::SetValue(Slot slot, std::string value) {
  for (auto &sv : slots_) {
    if (sv.slot == slot) {
      sv.value = std::move(value);
      return;
    }
  }
  throw StructuralError("slot '" + std::string(CanonicalName(slot)) +
                        "' not present");
}

MeaningRepresentation ParseMr(std::string_view text) {
  return MrParser(text).Parse();
}

std::string SerializeMr(const MeaningRepresentation &mr) {
  std::string out;
  for (const auto &sv : mr.slots()) {
    if (!out.empty()) out += ", ";
    if (sv.emphasized) {
      out += kEmphToken;
      out += ' ';
    }
    out += sv.surface;
    out += '[';
    out += sv.value;
    out += ']';
  }
  if (const auto &rel = mr.relation()) {
    if (!out.empty()) out += ", ";
    out += rel->kind == RelationKind::kContrast ? kContrastToken
                                                : kConcessionToken;
    out += '[';
    out += RelationName(rel->first);
    out += ' ';
    out += RelationName(rel->second);
    out += ']';
  }
  return out;
}

std::string CanonicalKey(const MeaningRepresentation &mr) {
  std::vector<std::pair<std::string_view, std::string_view>> items;
  items.reserve(mr.size());
  for (const auto &sv : mr.slots()) {
    items.emplace_back(CanonicalName(sv.slot), TrimView(sv.value));
  }
  std::sort(items.begin(), items.end());
  std::string key;
  for (const auto &[name, value] : items) {
    if (!key.empty()) key += ", ";
    key += name;
    key += '[';
    key += value;
    key += ']';
  }
  return key;
}

bool HasCorpusSlotCount(const MeaningRepresentation &mr) {
  return mr.size() >= 3 && mr.size() <= kNumSlots;
}

}  // namespace e2estyle
