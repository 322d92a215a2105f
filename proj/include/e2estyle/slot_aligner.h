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

// Heuristic slot aligner.
//
// Each MR slot is searched for in three tiers, and the first tier that
// finds an unclaimed span wins:
//
//   exact    the value itself (case-insensitive, hyphens and spaces
//            interchangeable, Latin-1 accents folded)
//   lexicon  realization phrases for the value: aliases for names, cue
//            phrases for food and area, magnitude classes for the scalar
//            slots (plus a value-word-near-keyword rule) and polarity cues
//            for familyFriendly
//   fuzzy    token overlap >= 0.8 with the value over a sliding window,
//            multiword name/near/food values only
//
// Spans claimed by one slot are unavailable to the others, and within a
// tier the leftmost match wins.

#ifndef E2ESTYLE_SLOT_ALIGNER_H_
#define E2ESTYLE_SLOT_ALIGNER_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "e2estyle/mr.h"
#include "e2estyle/text_analysis.h"

namespace e2estyle {

enum class MatchConfidence { kExact, kLexicon, kFuzzy };

std::string_view MatchConfidenceName(MatchConfidence c);

struct AlignedSpan {
  Span span;
  MatchConfidence confidence = MatchConfidence::kExact;

  bool operator==(const AlignedSpan &) const = default;
};

struct SlotAlignment {
  std::size_t position = 0;  // index into the MR's slot list
  Slot slot = Slot::kName;
  // Sorted, disjoint. Empty means unaligned.
  std::vector<AlignedSpan> spans;

  bool aligned() const { return !spans.empty(); }
  std::optional<Span> Leftmost() const;

  bool operator==(const SlotAlignment &) const = default;
};

struct Alignment {
  std::vector<SlotAlignment> slots;  // parallel to mr.slots()

  const SlotAlignment *ForSlot(Slot slot) const;
  std::size_t AlignedCount() const;

  bool operator==(const Alignment &) const = default;
};

struct ScalarContext {
  // Words that name the slot ("price", "rating", ...).
  std::vector<std::string> keywords;
  // Value words by magnitude 1..3 that only count near a keyword.
  std::array<std::vector<std::string>, 3> value_words;
};

struct ValueLexicon {
  // Realization phrases per slot, keyed by lower-cased value.
  std::array<std::map<std::string, std::vector<std::string>>, kNumSlots>
      phrases;
  ScalarContext price_context;
  ScalarContext rating_context;
  // familyFriendly cue phrases. Positive cues flip under negation.
  std::vector<std::string> family_positive_cues;
  std::vector<std::string> family_negative_cues;
  std::vector<std::string> negators;
  // Words that complete a post-cue negation ("children are not welcome").
  std::vector<std::string> acceptability_words;
  // Negation window in tokens.
  std::size_t negation_window = 3;
  double fuzzy_threshold = 0.8;

  static const ValueLexicon &Default();

  // Adds phrases from a JSON document of the form
  // {"slotName": {"value": ["phrase", ...]}}. Throws ConfigError.
  void MergeJson(std::string_view json_text);
};

class SlotAligner {
 public:
  SlotAligner() : SlotAligner(ValueLexicon::Default()) {}
  explicit SlotAligner(ValueLexicon lexicon);

  Alignment Align(const MeaningRepresentation &mr,
                  const AnalyzedUtterance &utterance) const;

  // Every exact or lexicon realization of (slot, value) inside `window`,
  // ignoring other slots' claims. Used where a local reading is needed
  // rather than the global alignment.
  std::vector<AlignedSpan> FindRealizations(Slot slot, std::string_view value,
                                            const AnalyzedUtterance &utterance,
                                            const Span &window) const;

  // familyFriendly cues in the utterance whose polarity contradicts
  // `value`.
  std::vector<Span> ContradictingFamilyCues(std::string_view value,
                                            const AnalyzedUtterance &u) const;

  const ValueLexicon &lexicon() const { return lexicon_; }

 private:
  struct Candidate {
    Span span;
    MatchConfidence confidence;
  };

  std::vector<Candidate> ExactCandidates(Slot slot, std::string_view value,
                                         const AnalyzedUtterance &u) const;
  std::vector<Candidate> LexiconCandidates(Slot slot, std::string_view value,
                                           const AnalyzedUtterance &u) const;
  std::vector<Candidate> FuzzyCandidates(Slot slot, std::string_view value,
                                         const AnalyzedUtterance &u) const;
  std::vector<Candidate> ScalarContextCandidates(
      Slot slot, int magnitude, const AnalyzedUtterance &u) const;
  std::vector<Candidate> FamilyCandidates(bool want_positive,
                                          const AnalyzedUtterance &u) const;
  bool IsNegated(const AnalyzedUtterance &u, const Span &span) const;

  ValueLexicon lexicon_;
};

Alignment AlignSlots(const MeaningRepresentation &mr,
                     const AnalyzedUtterance &utterance);

// Slots whose values always propagate verbatim into utterances.
bool IsDelexicalizedSlot(Slot slot);  // name, near, food
std::string Placeholder(Slot slot);   // "<name>", ...

struct DelexResult {
  MeaningRepresentation mr;
  std::string utterance;
  // One line per delexicalized slot that had no span in the utterance.
  std::vector<std::string> diagnostics;
};

// Replaces name/near/food values by placeholders in the MR and every
// aligned span of those slots in the utterance. Unaligned slots are still
// delexicalized on the MR side and reported in `diagnostics`.
DelexResult Delexicalize(const MeaningRepresentation &mr,
                         const AnalyzedUtterance &utterance,
                         const Alignment &alignment);
DelexResult Delexicalize(const MeaningRepresentation &mr,
                         std::string_view utterance);

// Substitutes MR values for <name>, <near> and <food>. Throws
// SubstitutionError naming the placeholder when the MR lacks that slot.
std::string Relexicalize(std::string_view utterance,
                         const MeaningRepresentation &mr);

// True when every delexicalized slot present in the MR is aligned, and every
// one of its spans is an exact match whose text is byte-identical to the
// value, so that Relexicalize(Delexicalize(x)) reproduces x.
bool IsExactlyAligned(const MeaningRepresentation &mr,
                      const AnalyzedUtterance &utterance,
                      const Alignment &alignment);

}  // namespace e2estyle

#endif  // E2ESTYLE_SLOT_ALIGNER_H_
