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

// Rule-based detection of discourse markers in reference utterances.
//
// Ten marker subsets are grouped into six categories. Every rule works on
// the coarse token stream of an AnalyzedUtterance plus the MR, which is
// needed to locate the restaurant name and, for "while", the clause-level
// polarity of the relation slots.
//
// A token can mark at most one subset. Subsets claim tokens in this order:
//
//   CONTRAST_MARKERS > SUBORD_CONJ > AGG_LEXICAL > EXISTENTIAL >
//   IMPERATIVE > MODAL > SUBORD_RELPRON > AGG_APPOSITION > FRONTING >
//   AGG_GERUND

#ifndef E2ESTYLE_STYLE_DETECTOR_H_
#define E2ESTYLE_STYLE_DETECTOR_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "e2estyle/mr.h"
#include "e2estyle/slot_aligner.h"
#include "e2estyle/text_analysis.h"

namespace e2estyle {

enum class MarkerSubset {
  kAggLexical,
  kAggApposition,
  kAggGerund,
  kContrastMarkers,
  kFronting,
  kSubordConj,
  kSubordRelpron,
  kExistential,
  kImperative,
  kModal,
};

inline constexpr std::size_t kNumMarkerSubsets = 10;

inline constexpr std::array<MarkerSubset, kNumMarkerSubsets> kAllMarkerSubsets =
    {
        MarkerSubset::kAggLexical,      MarkerSubset::kAggApposition,
        MarkerSubset::kAggGerund,       MarkerSubset::kContrastMarkers,
        MarkerSubset::kFronting,        MarkerSubset::kSubordConj,
        MarkerSubset::kSubordRelpron,   MarkerSubset::kExistential,
        MarkerSubset::kImperative,      MarkerSubset::kModal,
};

inline std::size_t SubsetIndex(MarkerSubset s) {
  return static_cast<std::size_t>(s);
}

// "AGG_LEXICAL", "CONTRAST_MARKERS", ...
std::string_view MarkerSubsetId(MarkerSubset s);
std::optional<MarkerSubset> MarkerSubsetFromId(std::string_view id);

enum class Category {
  kAggregation,
  kContrast,
  kFronting,
  kSubordination,
  kExistential,
  kImperativeModal,
};

inline constexpr std::array<Category, 6> kAllCategories = {
    Category::kAggregation,   Category::kContrast,
    Category::kFronting,      Category::kSubordination,
    Category::kExistential,   Category::kImperativeModal,
};

// "aggregation", "contrast", "fronting", "subordination", "existential",
// "imperative_modal".
std::string_view CategoryName(Category c);
// Accepts the names above, ignoring case, with '-', '/' or ' ' in place of
// '_'.
std::optional<Category> CategoryFromName(std::string_view name);

Category CategoryOf(MarkerSubset s);
std::vector<MarkerSubset> SubsetsOf(Category c);

struct MarkerHit {
  Span marker;  // the tokens that triggered the rule
  Span extent;  // the construction they introduce; contains `marker`

  bool operator==(const MarkerHit &) const = default;
};

struct StyleProfile {
  std::array<std::vector<MarkerHit>, kNumMarkerSubsets> hits;
  // False when the MR has no name or the name was not found, in which case
  // fronting and apposition were not checked.
  bool name_found = false;

  const std::vector<MarkerHit> &HitsFor(MarkerSubset s) const {
    return hits[SubsetIndex(s)];
  }
  bool Has(MarkerSubset s) const { return !HitsFor(s).empty(); }
  bool HasCategory(Category c) const;

  bool operator==(const StyleProfile &) const = default;
};

// Word lists behind the rules. Entries are lower-case and may be multiword
// phrases where noted.
struct DetectorLexicons {
  std::vector<std::string> agg_lexical;          // phrases
  std::vector<std::string> quantitative_adjectives;
  std::vector<std::string> contrast_markers;     // phrases; "while" is special
  std::vector<std::string> subord_conj;          // "as" only before a subject
  std::vector<std::string> relative_pronouns;    // "that" is context-checked
  std::vector<std::string> be_forms;
  std::vector<std::string> imperative_verbs;
  std::vector<std::string> imperative_skip;      // "please", "just", ...
  std::vector<std::string> fronting_openers;     // prepositions, adjectives
  std::vector<std::string> fronting_exclusions;  // phrases ("in addition")
  std::vector<std::string> appositive_openers;
  std::vector<std::string> venue_nouns;
  std::vector<std::string> subject_pronouns;

  static const DetectorLexicons &Default();

  // Names accepted by Replace(), in declaration order.
  static const std::vector<std::string_view> &ListNames();

  // Replaces one list. Throws ConfigError for an unknown list name.
  void Replace(std::string_view list, std::vector<std::string> words);
};

class StyleDetector {
 public:
  StyleDetector();
  StyleDetector(DetectorLexicons lexicons, SlotAligner aligner);

  StyleProfile Detect(const AnalyzedUtterance &utterance,
                      const MeaningRepresentation &mr) const;

  const DetectorLexicons &lexicons() const { return lexicons_; }
  const SlotAligner &aligner() const { return aligner_; }

 private:
  struct Candidate;

  // Realizations of the name slot, sorted.
  std::vector<Span> NameSpans(const AnalyzedUtterance &u,
                              const MeaningRepresentation &mr) const;
  bool ContrastiveWhile(const AnalyzedUtterance &u,
                        const MeaningRepresentation &mr,
                        std::size_t token) const;

  DetectorLexicons lexicons_;
  SlotAligner aligner_;
};

StyleProfile DetectStyle(const AnalyzedUtterance &utterance,
                         const MeaningRepresentation &mr);

bool HasStyle(const StyleProfile &profile, Category category);

}  // namespace e2estyle

#endif  // E2ESTYLE_STYLE_DETECTOR_H_
