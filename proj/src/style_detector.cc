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

#include "e2estyle/style_detector.h"

#include <algorithm>

#include "e2estyle/error.h"
#include "e2estyle/ontology.h"
#include "e2estyle/strings.h"

namespace e2estyle {
namespace {

constexpr std::array<std::string_view, kNumMarkerSubsets> kSubsetIds = {
    "AGG_LEXICAL", "AGG_APPOSITION", "AGG_GERUND",     "CONTRAST_MARKERS",
    "FRONTING",    "SUBORD_CONJ",    "SUBORD_RELPRON", "EXISTENTIAL",
    "IMPERATIVE",  "MODAL",
};

constexpr std::array<MarkerSubset, kNumMarkerSubsets> kPrecedence = {
    MarkerSubset::kContrastMarkers, MarkerSubset::kSubordConj,
    MarkerSubset::kAggLexical,      MarkerSubset::kExistential,
    MarkerSubset::kImperative,      MarkerSubset::kModal,
    MarkerSubset::kSubordRelpron,   MarkerSubset::kAggApposition,
    MarkerSubset::kFronting,        MarkerSubset::kAggGerund,
};

std::size_t PrecedenceRank(MarkerSubset s) {
  for (std::size_t i = 0; i < kPrecedence.size(); ++i) {
    if (kPrecedence[i] == s) return i;
  }
  return kPrecedence.size();
}

bool In(const std::vector<std::string> &list, std::string_view word) {
  return std::find(list.begin(), list.end(), word) != list.end();
}

bool IsPunct(const Token &t) { return t.tag == TokenTag::kPunct; }

bool IsAlpha(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  });
}

bool IsSentenceEnd(const Token &t) {
  return t.norm == "." || t.norm == "!" || t.norm == "?" ||
         t.norm.starts_with("..");
}

// Number of tokens matched by `phrase` starting at token `i`, or 0. The
// match may not run past token `limit`.
std::size_t MatchPhrase(const AnalyzedUtterance &u, std::size_t i,
                        std::string_view phrase, std::size_t limit) {
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos < phrase.size()) {
    std::size_t end = phrase.find(' ', pos);
    if (end == std::string_view::npos) end = phrase.size();
    const std::string_view word = phrase.substr(pos, end - pos);
    pos = end + 1;
    if (word.empty()) continue;
    if (i + n >= limit || u.tokens[i + n].norm != word) return 0;
    ++n;
  }
  return n;
}

Span TokenSpan(const AnalyzedUtterance &u, std::size_t first,
               std::size_t last) {
  return Span{u.tokens[first].span.begin, u.tokens[last - 1].span.end};
}

std::size_t FirstWord(const AnalyzedUtterance &u, std::size_t first,
                      std::size_t last) {
  while (first < last && IsPunct(u.tokens[first])) ++first;
  return first;
}

enum class HeadKind { kNone, kPrice, kRating };

// Scalar head noun starting at token `i`: returns its kind and end token.
std::pair<HeadKind, std::size_t> MatchHead(const AnalyzedUtterance &u,
                                           std::size_t i, std::size_t limit) {
  static const std::array<std::pair<std::string_view, HeadKind>, 10> kHeads = {{
      {"customer ratings", HeadKind::kRating},
      {"customer rating", HeadKind::kRating},
      {"price ranges", HeadKind::kPrice},
      {"price range", HeadKind::kPrice},
      {"ratings", HeadKind::kRating},
      {"rating", HeadKind::kRating},
      {"prices", HeadKind::kPrice},
      {"price", HeadKind::kPrice},
      {"pricing", HeadKind::kPrice},
      {"reviews", HeadKind::kRating},
  }};
  for (const auto &[phrase, kind] : kHeads) {
    if (const std::size_t n = MatchPhrase(u, i, phrase, limit)) {
      return {kind, i + n};
    }
  }
  return {HeadKind::kNone, i};
}

const std::vector<std::string> &ThatBlockers() {
  static const std::vector<std::string> kWords = {
      "is",   "are",  "was",  "were", "be",  "been", "so",   "and",
      "but",  "or",   "of",   "in",   "at",  "on",   "to",   "than",
      "that", "the",  "a",    "an",   "such", "now", "know", "say",
      "says", "said", "think", "note", "mean", "means", "sure", "fact",
      "with", "for",  "like", "all",
  };
  return kWords;
}

const std::vector<std::string> &VerbishWords() {
  static const std::vector<std::string> kWords = {
      "has",   "have",  "had",     "does",   "do",     "did",   "doesn't",
      "don't", "also",  "only",    "just",   "really", "always", "still",
      "serve", "offer", "provide", "sell",   "cater",  "caters", "is",
      "are",   "was",   "were",    "isn't",  "aren't", "gets",  "got",
  };
  return kWords;
}

const std::vector<std::string> &ThatPronouns() {
  static const std::vector<std::string> kWords = {
      "it",     "they",      "you",      "we",     "i",      "he",
      "she",    "people",    "customers", "families", "guests", "diners",
      "visitors", "everyone",
  };
  return kWords;
}

const std::vector<std::string> &ApposBlockers() {
  static const std::vector<std::string> kWords = {"has", "have", "had"};
  return kWords;
}

}  // namespace

// Names ----------------------------------------------------------------------

std::string_view MarkerSubsetId(MarkerSubset s) {
  return kSubsetIds[SubsetIndex(s)];
}

std::optional<MarkerSubset> MarkerSubsetFromId(std::string_view id) {
  for (const MarkerSubset s : kAllMarkerSubsets) {
    if (EqualsIgnoreCase(MarkerSubsetId(s), TrimView(id))) return s;
  }
  return std::nullopt;
}

std::string_view CategoryName(Category c) {
  switch (c) {
    case Category::kAggregation:
      return "aggregation";
    case Category::kContrast:
      return "contrast";
    case Category::kFronting:
      return "fronting";
    case Category::kSubordination:
      return "subordination";
    case Category::kExistential:
      return "existential";
    case Category::kImperativeModal:
      return "imperative_modal";
  }
  return "aggregation";
}

std::optional<Category> CategoryFromName(std::string_view name) {
  std::string key = AsciiLower(TrimView(name));
  for (char &c : key) {
    if (c == '-' || c == '/' || c == ' ') c = '_';
  }
  for (const Category c : kAllCategories) {
    if (CategoryName(c) == key) return c;
  }
  return std::nullopt;
}

Category CategoryOf(MarkerSubset s) {
  switch (s) {
    case MarkerSubset::kAggLexical:
    case MarkerSubset::kAggApposition:
    case MarkerSubset::kAggGerund:
      return Category::kAggregation;
    case MarkerSubset::kContrastMarkers:
      return Category::kContrast;
    case MarkerSubset::kFronting:
      return Category::kFronting;
    case MarkerSubset::kSubordConj:
    case MarkerSubset::kSubordRelpron:
      return Category::kSubordination;
    case MarkerSubset::kExistential:
      return Category::kExistential;
    case MarkerSubset::kImperative:
    case MarkerSubset::kModal:
      return Category::kImperativeModal;
  }
  return Category::kAggregation;
}

std::vector<MarkerSubset> SubsetsOf(Category c) {
  std::vector<MarkerSubset> out;
  for (const MarkerSubset s : kAllMarkerSubsets) {
    if (CategoryOf(s) == c) out.push_back(s);
  }
  return out;
}

bool StyleProfile::HasCategory(Category c) const {
  for (const MarkerSubset s : kAllMarkerSubsets) {
    if (CategoryOf(s) == c && Has(s)) return true;
  }
  return false;
}

bool HasStyle(const StyleProfile &profile, Category category) {
  return profile.HasCategory(category);
}

// Lexicons -------------------------------------------------------------------

const DetectorLexicons &DetectorLexicons::Default() {
  static const DetectorLexicons *lexicons = [] {
    auto *l = new DetectorLexicons;
    l->agg_lexical = {"also", "both", "neither", "nor", "as well as",
                      "as well"};
    l->quantitative_adjectives = {"low",   "high",     "average",
                                  "moderate", "good",  "excellent",
                                  "poor",  "great",    "medium",
                                  "reasonable", "higher", "lower"};
    l->contrast_markers = {"but",      "however",      "although",
                           "though",   "despite",      "in spite of",
                           "yet",      "even if",      "even though",
                           "nevertheless", "nonetheless", "while",
                           "whilst"};
    l->subord_conj = {"if",      "while",  "whilst", "since", "because",
                      "when",    "whereas", "unless", "as"};
    l->relative_pronouns = {"which", "who", "whose", "whom", "where", "that"};
    l->be_forms = {"is",    "are",    "was",     "were",   "be",
                   "been",  "'s",     "isn't",   "aren't", "wasn't",
                   "weren't"};
    l->imperative_verbs = {"try",   "visit", "come",  "bring", "don't",
                           "do not", "stop", "check", "go",    "enjoy",
                           "avoid", "head"};
    l->imperative_skip = {"please", "just", "so", "then", "and", "now"};
    l->fronting_openers = {
        "in",        "at",         "on",        "near",       "by",
        "with",      "for",        "from",      "along",      "beside",
        "next",      "close",      "within",    "across",     "opposite",
        "outside",   "inside",     "among",     "amongst",    "around",
        "alongside", "nestled",    "overlooking", "down",     "behind",
        "beyond",    "towards",    "toward",    "past",       "cheap",
        "expensive", "affordable", "inexpensive", "pricey",   "moderately",
        "reasonably", "highly",    "lowly",     "poorly",     "low",
        "high",      "average",    "averagely", "family",     "kid",
        "kids",      "child",      "children",  "non",        "popular",
        "excellent", "great",      "top",       "five",       "three",
        "one",       "5",          "1",         "3",
    };
    l->fronting_exclusions = {
        "in addition", "in fact",    "in summary", "in conclusion",
        "in short",    "in general", "for example", "for instance",
        "on the other hand", "additionally", "also", "however", "overall",
        "moreover",    "furthermore", "indeed",   "finally", "lastly",
        "besides",
    };
    l->appositive_openers = {
        "a",       "an",       "the",        "one",     "another",
        "cheap",   "expensive", "affordable", "inexpensive", "family",
        "kid",     "child",    "non",        "highly",  "low",
        "high",    "moderately", "average",  "popular", "local",
        "5",       "1",        "3",          "five",    "three",
    };
    l->venue_nouns = {"restaurant", "pub",   "shop",  "place", "eatery",
                      "venue",      "establishment", "cafe", "spot",
                      "joint",      "bistro", "diner", "bar"};
    l->subject_pronouns = {"it", "they", "he", "she", "we", "you",
                           "i",  "there", "this", "one"};
    return l;
  }();
  return *lexicons;
}

const std::vector<std::string_view> &DetectorLexicons::ListNames() {
  static const std::vector<std::string_view> kNames = {
      "agg_lexical",       "quantitative_adjectives", "contrast_markers",
      "subord_conj",       "relative_pronouns",       "be_forms",
      "imperative_verbs",  "imperative_skip",         "fronting_openers",
      "fronting_exclusions", "appositive_openers",    "venue_nouns",
      "subject_pronouns",
  };
  return kNames;
}

void DetectorLexicons::Replace(std::string_view list,
                               std::vector<std::string> words) {
  for (auto &w : words) w = AsciiLower(Trim(w));
  std::vector<std::string> *target = nullptr;
  if (list == "agg_lexical") target = &agg_lexical;
  else if (list == "quantitative_adjectives") target = &quantitative_adjectives;
  else if (list == "contrast_markers") target = &contrast_markers;
  else if (list == "subord_conj") target = &subord_conj;
  else if (list == "relative_pronouns") target = &relative_pronouns;
  else if (list == "be_forms") target = &be_forms;
  else if (list == "imperative_verbs") target = &imperative_verbs;
  else if (list == "imperative_skip") target = &imperative_skip;
  else if (list == "fronting_openers") target = &fronting_openers;
  else if (list == "fronting_exclusions") target = &fronting_exclusions;
  else if (list == "appositive_openers") target = &appositive_openers;
  else if (list == "venue_nouns") target = &venue_nouns;
  else if (list == "subject_pronouns") target = &subject_pronouns;
  if (target == nullptr) {
    throw ConfigError("unknown detector lexicon '" + std::string(list) + "'");
  }
  *target = std::move(words);
}

// Detector -------------------------------------------------------------------

struct StyleDetector::Candidate {
  MarkerSubset subset;
  std::size_t first;  // marker tokens [first, last)
  std::size_t last;
  Span extent;
};

StyleDetector::StyleDetector()
    : StyleDetector(DetectorLexicons::Default(), SlotAligner()) {}

StyleDetector::StyleDetector(DetectorLexicons lexicons, SlotAligner aligner)
    : lexicons_(std::move(lexicons)), aligner_(std::move(aligner)) {}

std::vector<Span> StyleDetector::NameSpans(
    const AnalyzedUtterance &u, const MeaningRepresentation &mr) const {
  const SlotValue *name = mr.Find(Slot::kName);
  if (name == nullptr) return {};
  std::vector<Span> found;
  for (const auto &r : aligner_.FindRealizations(
           Slot::kName, name->value, u, Span{0, u.text.size()})) {
    found.push_back(r.span);
  }
  std::sort(found.begin(), found.end());
  std::vector<Span> out;
  for (const Span &s : found) {
    if (!out.empty() && out.back().Overlaps(s)) continue;
    out.push_back(s);
  }
  return out;
}

bool StyleDetector::ContrastiveWhile(const AnalyzedUtterance &u,
                                     const MeaningRepresentation &mr,
                                     std::size_t token) const {
  const auto &range = u.sentences[u.SentenceOfToken(token)];
  const std::size_t first = FirstWord(u, range.first, range.last);
  Span left, right;
  if (token == first) {
    // "While it is cheap, it has a low rating."
    std::size_t comma = token + 1;
    while (comma < range.last && u.tokens[comma].norm != ",") ++comma;
    if (comma + 1 >= range.last || comma == token + 1) return false;
    left = TokenSpan(u, token + 1, comma);
    right = TokenSpan(u, comma + 1, range.last);
  } else {
    if (token + 1 >= range.last) return false;
    left = TokenSpan(u, range.first, token);
    right = TokenSpan(u, token + 1, range.last);
  }

  struct Reading {
    Slot slot;
    Positivity level;
  };
  std::vector<Reading> left_levels, right_levels;
  for (const SlotValue &sv : mr.slots()) {
    if (!IsRelationSlot(sv.slot)) continue;
    Positivity level;
    try {
      level = MapPositivity(sv.slot, sv.value);
    } catch (const OntologyError &) {
      continue;
    }
    if (!aligner_.FindRealizations(sv.slot, sv.value, u, left).empty()) {
      left_levels.push_back({sv.slot, level});
    }
    if (!aligner_.FindRealizations(sv.slot, sv.value, u, right).empty()) {
      right_levels.push_back({sv.slot, level});
    }
  }
  for (const Reading &a : left_levels) {
    for (const Reading &b : right_levels) {
      if (a.slot != b.slot && a.level != b.level) return true;
    }
  }
  return false;
}

StyleProfile StyleDetector::Detect(const AnalyzedUtterance &u,
                                   const MeaningRepresentation &mr) const {
  StyleProfile profile;
  const auto &toks = u.tokens;
  if (toks.empty()) return profile;
  const DetectorLexicons &lx = lexicons_;
  const std::vector<Span> names = NameSpans(u, mr);
  profile.name_found = !names.empty();

  std::vector<Candidate> cands;
  auto add = [&](MarkerSubset s, std::size_t first, std::size_t last,
                 Span extent) { cands.push_back({s, first, last, extent}); };

  for (const SentenceRange &range : u.sentences) {
    const std::size_t f = range.first;
    const std::size_t l = range.last;
    const std::size_t a = FirstWord(u, f, l);
    if (a >= l) continue;

    for (std::size_t i = a; i < l; ++i) {
      const Token &tok = toks[i];
      if (IsPunct(tok)) continue;

      for (const auto &phrase : lx.contrast_markers) {
        const std::size_t n = MatchPhrase(u, i, phrase, l);
        if (n == 0) continue;
        if (phrase == "while" || phrase == "whilst") {
          if (!ContrastiveWhile(u, mr, i)) continue;
        } else if (phrase == "yet" && i > a) {
          static const std::vector<std::string> kNotMarker = {"not", "as",
                                                              "has", "have"};
          if (In(kNotMarker, toks[i - 1].norm)) continue;
        }
        add(MarkerSubset::kContrastMarkers, i, i + n, TokenSpan(u, i, l));
      }

      for (const auto &phrase : lx.subord_conj) {
        const std::size_t n = MatchPhrase(u, i, phrase, l);
        if (n == 0) continue;
        if (phrase == "as" &&
            (i + 1 >= l || !In(lx.subject_pronouns, toks[i + 1].norm))) {
          continue;
        }
        add(MarkerSubset::kSubordConj, i, i + n, TokenSpan(u, i, l));
      }

      for (const auto &phrase : lx.agg_lexical) {
        if (const std::size_t n = MatchPhrase(u, i, phrase, l)) {
          add(MarkerSubset::kAggLexical, i, i + n, TokenSpan(u, i, i + n));
        }
      }
      if (In(lx.quantitative_adjectives, tok.norm)) {
        // "low customer rating and price range"
        const auto [kind1, end1] = MatchHead(u, i + 1, l);
        if (kind1 != HeadKind::kNone && end1 < l &&
            (toks[end1].norm == "and" || toks[end1].norm == "&")) {
          const auto [kind2, end2] = MatchHead(u, end1 + 1, l);
          if (kind2 != HeadKind::kNone && kind2 != kind1) {
            add(MarkerSubset::kAggLexical, i, end2, TokenSpan(u, i, end2));
          }
        }
      }

      if (tok.norm == "there" && i + 1 < l) {
        static const std::vector<std::string> kAdverbs = {
            "also", "still", "only", "just", "definitely", "currently",
            "now"};
        const Token &next = toks[i + 1];
        std::size_t end = 0;
        if (In(lx.be_forms, next.norm)) {
          end = i + 2;
        } else if (i + 2 < l && (next.tag == TokenTag::kModal ||
                                 In(kAdverbs, next.norm)) &&
                   In(lx.be_forms, toks[i + 2].norm)) {
          end = i + 3;
        }
        if (end != 0) {
          add(MarkerSubset::kExistential, i, i + 1, TokenSpan(u, i, end));
        }
      } else if (tok.norm.starts_with("there'")) {
        add(MarkerSubset::kExistential, i, i + 1, tok.span);
      }

      if (tok.tag == TokenTag::kModal) {
        add(MarkerSubset::kModal, i, i + 1, tok.span);
      }

      if (i > a && In(lx.relative_pronouns, tok.norm)) {
        bool relative = true;
        if (tok.norm == "that") {
          const Token &prev = toks[i - 1];
          relative = !IsPunct(prev) && !In(ThatBlockers(), prev.norm) &&
                     i + 1 < l;
          if (relative) {
            const Token &next = toks[i + 1];
            const std::string &w = next.norm;
            const bool verbish =
                next.tag == TokenTag::kModal ||
                next.tag == TokenTag::kVerbIng || In(VerbishWords(), w) ||
                In(lx.be_forms, w) ||
                (IsAlpha(w) && w.size() >= 4 && w.ends_with("s") &&
                 !w.ends_with("ss") && !w.ends_with("us")) ||
                (IsAlpha(w) && w.size() >= 4 && w.ends_with("ed"));
            relative = verbish || In(ThatPronouns(), w);
          }
        }
        if (relative) {
          add(MarkerSubset::kSubordRelpron, i, i + 1, TokenSpan(u, i, l));
        }
      }

      if (tok.tag == TokenTag::kVerbIng) {
        add(MarkerSubset::kAggGerund, i, i + 1, tok.span);
      }
    }

    // Imperative: bare verb opening the sentence, or the main clause after
    // a leading if/when clause.
    std::size_t v = a;
    if (toks[v].norm == "if" || toks[v].norm == "when") {
      while (v < l && toks[v].norm != ",") ++v;
      ++v;
    }
    while (v < l && (IsPunct(toks[v]) || In(lx.imperative_skip, toks[v].norm))) {
      ++v;
    }
    if (v < l) {
      for (const auto &phrase : lx.imperative_verbs) {
        if (const std::size_t n = MatchPhrase(u, v, phrase, l)) {
          add(MarkerSubset::kImperative, v, v + n, TokenSpan(u, v, l));
          break;
        }
      }
    }

    // Fronting within the sentence.
    if (names.empty()) continue;
    const Span sentence = TokenSpan(u, f, l);
    const Span *name = nullptr;
    for (const Span &n : names) {
      if (sentence.Contains(n)) {
        name = &n;
        break;
      }
    }
    if (name == nullptr || name->begin <= toks[a].span.begin) continue;
    const std::size_t name_tok = u.TokenAtOrAfter(name->begin);
    bool excluded = false;
    for (const auto &phrase : lx.fronting_exclusions) {
      if (MatchPhrase(u, a, phrase, l) != 0) excluded = true;
    }
    const Token &opener = toks[a];
    bool fronted = false;
    if (!excluded) {
      const std::string &w = opener.norm;
      const std::string head = w.substr(0, w.find('-'));
      fronted = In(lx.fronting_openers, w) ||
                opener.tag == TokenTag::kVerbIng ||
                (IsAlpha(w) && w.size() >= 5 && w.ends_with("ed")) ||
                w.ends_with("-friendly") ||
                (head.size() < w.size() && In(lx.fronting_openers, head));
    }
    if (!fronted && name_tok >= a + 3 &&
        In(lx.be_forms, toks[name_tok - 1].norm)) {
      // Specificational copular clause: "A family friendly option is X."
      static const std::vector<std::string> kNotSubjects = {
          "there", "it", "this", "that", "which", "what", "here",
          "who",   "where", "they", "he", "she"};
      fronted = !In(kNotSubjects, opener.norm);
    }
    if (fronted) {
      add(MarkerSubset::kFronting, a, a + 1, TokenSpan(u, a, name_tok));
    }
  }

  if (!names.empty()) {
    // The name only appears after the first sentence: the whole first
    // sentence is fronted material.
    const SentenceRange &s0 = u.sentences.front();
    const std::size_t a = FirstWord(u, s0.first, s0.last);
    if (u.sentences.size() > 1 && a < s0.last &&
        names.front().begin >= toks[s0.last - 1].span.end) {
      add(MarkerSubset::kFronting, a, a + 1, TokenSpan(u, s0.first, s0.last));
    }

    for (const Span &n : names) {
      const std::size_t sentence = u.SentenceOfOffset(n.begin);
      const std::size_t l = u.sentences[sentence].last;
      // "X, a cheap coffee shop, ..."
      const std::size_t comma = u.TokenAtOrAfter(n.end);
      if (comma + 1 < l && toks[comma].norm == "," &&
          In(lx.appositive_openers, toks[comma + 1].norm)) {
        std::size_t m = comma + 1;
        bool ok = false;
        while (m < l && m <= comma + 13) {
          const Token &t = toks[m];
          if (IsPunct(t)) {
            ok = t.norm == "," || IsSentenceEnd(t);
            break;
          }
          if (In(lx.be_forms, t.norm) || In(ApposBlockers(), t.norm) ||
              t.tag == TokenTag::kModal) {
            break;
          }
          ++m;
        }
        if (m == l) ok = true;
        if (ok && m > comma + 1) {
          add(MarkerSubset::kAggApposition, comma, comma + 2,
              Span{n.begin, toks[m - 1].span.end});
          continue;
        }
      }
      // "a coffee shop, X, ..."
      const std::size_t first_name_tok = u.TokenAtOrAfter(n.begin);
      const std::size_t first = u.sentences[sentence].first;
      if (first_name_tok >= first + 2 &&
          toks[first_name_tok - 1].norm == "," &&
          In(lx.venue_nouns, toks[first_name_tok - 2].norm)) {
        const bool closed = comma >= l || toks[comma].norm == "," ||
                            IsSentenceEnd(toks[comma]);
        if (closed) {
          add(MarkerSubset::kAggApposition, first_name_tok - 1,
              first_name_tok, Span{toks[first_name_tok - 2].span.begin, n.end});
        }
      }
    }
  }

  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate &x, const Candidate &y) {
                     const std::size_t rx = PrecedenceRank(x.subset);
                     const std::size_t ry = PrecedenceRank(y.subset);
                     if (rx != ry) return rx < ry;
                     return x.first < y.first;
                   });
  std::vector<bool> claimed(toks.size(), false);
  for (const Candidate &c : cands) {
    bool free = true;
    for (std::size_t t = c.first; t < c.last; ++t) free = free && !claimed[t];
    if (!free) continue;
    for (std::size_t t = c.first; t < c.last; ++t) claimed[t] = true;
    const Span marker = TokenSpan(u, c.first, c.last);
    Span extent = c.extent;
    extent.begin = std::min(extent.begin, marker.begin);
    extent.end = std::max(extent.end, marker.end);
    profile.hits[SubsetIndex(c.subset)].push_back({marker, extent});
  }
  for (auto &list : profile.hits) {
    std::sort(list.begin(), list.end(),
              [](const MarkerHit &x, const MarkerHit &y) {
                return x.marker < y.marker;
              });
  }
  return profile;
}

StyleProfile DetectStyle(const AnalyzedUtterance &utterance,
                         const MeaningRepresentation &mr) {
  static const StyleDetector detector;
  return detector.Detect(utterance, mr);
}

}  // namespace e2estyle
