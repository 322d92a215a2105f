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

#include "e2estyle/slot_aligner.h"

#include <algorithm>
#include <set>

#include "e2estyle/error.h"
#include "e2estyle/ontology.h"
#include "e2estyle/strings.h"
#include "json.hpp"

namespace e2estyle {
namespace {

std::string ValueKey(std::string_view value) {
  return FoldForMatch(TrimView(value));
}

bool IsGenericScalarValue(Slot slot, std::string_view value) {
  const std::string key = ValueKey(value);
  if (slot == Slot::kPriceRange) return key == "high";
  if (slot == Slot::kCustomerRating) {
    return key == "low" || key == "average" || key == "high";
  }
  return false;
}

bool IsScalar(Slot slot) {
  return slot == Slot::kPriceRange || slot == Slot::kCustomerRating;
}

std::size_t Levenshtein(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                         diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

bool SimilarWord(std::string_view a, std::string_view b) {
  if (a == b) return true;
  return a.size() >= 5 && b.size() >= 5 && Levenshtein(a, b) <= 1;
}

std::vector<std::string> ValueWords(std::string_view value) {
  std::string folded = FoldForMatch(value);
  for (char &c : folded) {
    if (c == '-') c = ' ';
  }
  return SplitWhitespace(folded);
}

bool Contains(const std::vector<std::string> &words, std::string_view w) {
  return std::find(words.begin(), words.end(), w) != words.end();
}

bool IsNegatorWord(const std::vector<std::string> &negators,
                   std::string_view w) {
  return Contains(negators, w) || w.ends_with("n't");
}

std::vector<std::string> ScalarClass(Slot slot, int magnitude) {
  if (slot == Slot::kPriceRange) {
    switch (magnitude) {
      case 1:
        return {"cheap", "cheaply", "cheaper", "inexpensive", "inexpensively",
                "affordable", "affordably", "low price", "low prices",
                "low priced", "low cost", "low costs", "low pricing",
                "low price range", "lower price", "lower prices",
                "lower priced", "lower price range", "low end", "lower end",
                "budget", "bargain", "economical", "not expensive",
                "not very expensive", "less than £20", "less than 20",
                "under £20", "below £20", "lower than £20", "under 20",
                "less than twenty", "under twenty", "£20 or less",
                "less than 20 pounds", "under 20 pounds"};
      case 2:
        return {"moderate", "moderately", "moderately priced",
                "average price", "average prices", "average priced",
                "averagely priced", "average pricing", "mid range",
                "mid priced", "mid price", "medium price", "medium priced",
                "reasonable", "reasonably", "reasonably priced",
                "fair price", "fair prices", "fairly priced", "£20-25",
                "£20-£25", "20-25", "£20 to £25", "20 to 25", "£20 - 25",
                "between £20 and £25", "between 20 and 25",
                "20 to 25 pounds", "twenty to twenty five", "average cost",
                "mid range price"};
      case 3:
        return {"expensive", "high price", "high prices", "high priced",
                "highly priced", "high pricing", "high cost", "high costs",
                "high end", "higher end", "higher price", "higher prices",
                "higher priced", "high price range", "higher price range",
                "pricey", "pricy", "costly", "premium", "upscale", "luxury",
                "not cheap", "more than £30", "over £30", "above £30",
                "more than 30", "over 30", "£30 plus", "£30 or more",
                "more than thirty", "over thirty", "more than 30 pounds",
                "over 30 pounds"};
    }
  }
  if (slot == Slot::kCustomerRating) {
    switch (magnitude) {
      case 1:
        return {"1 out of 5", "one out of five", "1 out of five",
                "one out of 5", "1 star", "1 stars", "one star", "one stars",
                "1/5", "rated 1", "rating of 1", "rating of one",
                "low rating", "low ratings", "low customer rating",
                "low customer ratings", "lowly rated", "low rated",
                "rated low", "rated lowly", "poorly rated", "poor rating",
                "poor ratings", "poor customer rating", "badly rated",
                "bad rating", "bad ratings", "bad reviews", "poor reviews",
                "low reviews", "not highly rated", "not well rated",
                "not rated highly", "not rated well", "low score",
                "low customer satisfaction", "low satisfaction"};
      case 2:
        return {"3 out of 5", "three out of five", "3 out of five",
                "three out of 5", "3 star", "3 stars", "three star",
                "three stars", "3/5", "rated 3", "rating of 3",
                "rating of three", "average rating", "average ratings",
                "average customer rating", "average customer ratings",
                "averagely rated", "average rated", "rated average",
                "rated averagely", "average reviews", "average customer reviews",
                "mediocre", "decent rating", "moderate rating",
                "moderately rated", "ok rating", "okay rating",
                "middle rating", "medium rating", "satisfactory rating",
                "average score", "average satisfaction"};
      case 3:
        return {"5 out of 5", "five out of five", "5 out of five",
                "five out of 5", "5 star", "5 stars", "five star",
                "five stars", "5/5", "rated 5", "rating of 5",
                "rating of five", "high rating", "high ratings",
                "high customer rating", "high customer ratings",
                "highly rated", "rated highly", "rated high", "well rated",
                "top rated", "best rated", "excellent rating",
                "excellent ratings", "great rating", "great ratings",
                "good rating", "good ratings", "excellent reviews",
                "great reviews", "good reviews", "highly regarded",
                "highly recommended", "high score",
                "high customer satisfaction", "excellent customer rating"};
    }
  }
  return {};
}

ValueLexicon BuildDefaultLexicon() {
  ValueLexicon l;
  auto &names = l.phrases[SlotIndex(Slot::kName)];
  auto &near = l.phrases[SlotIndex(Slot::kNear)];
  const std::map<std::string, std::vector<std::string>> aliases = {
      {"express by holiday inn",
       {"holiday inn express", "express holiday inn", "holiday inn"}},
      {"rainbow vegetarian cafe", {"rainbow vegetarian", "rainbow cafe"}},
      {"crowne plaza hotel", {"crowne plaza", "crown plaza"}},
      {"raja indian cuisine", {"raja"}},
      {"yippee noodle bar", {"yippee"}},
      {"travellers rest beefeater",
       {"travellers rest", "travelers rest", "beefeater"}},
      {"browns cambridge", {"browns"}},
      {"bibimbap house", {"bibimbap"}},
      {"the twenty two", {"twenty two", "twenty-two", "22"}},
      {"midsummer house", {"midsummer"}},
  };
  for (const auto &[value, phrases] : aliases) {
    names[value] = phrases;
    near[value] = phrases;
  }

  l.phrases[SlotIndex(Slot::kFood)] = {
      {"english", {"british", "english"}},
      {"fast food",
       {"fast food", "fastfood", "burgers", "burger", "fries", "takeaway",
        "take away", "junk food"}},
      {"italian", {"italian", "pasta", "pizza", "pizzas"}},
      {"japanese", {"japanese", "sushi"}},
      {"chinese", {"chinese"}},
      {"indian", {"indian", "curry", "curries"}},
      {"french", {"french"}},
  };
  l.phrases[SlotIndex(Slot::kArea)] = {
      {"city centre",
       {"city center", "centre of the city", "center of the city",
        "centre of town", "center of town", "town centre", "town center",
        "city central", "central city", "downtown", "central", "centre",
        "center", "city"}},
      {"riverside",
       {"river side", "riverfront", "river front", "waterfront", "riverbank",
        "river bank", "by the river", "near the river", "on the river",
        "river"}},
  };
  for (const Slot slot : {Slot::kPriceRange, Slot::kCustomerRating}) {
    for (const std::string_view value : DocumentedValues(slot)) {
      l.phrases[SlotIndex(slot)][ValueKey(value)] =
          ScalarClass(slot, ScalarMagnitude(slot, value));
    }
  }

  l.price_context.keywords = {"price", "prices", "priced", "pricing",
                              "cost",  "costs",  "costing", "menu"};
  l.price_context.value_words = {{
      {"low", "lower", "lowest", "cheap"},
      {"average", "moderate", "medium", "mid", "reasonable", "fair",
       "decent", "middle"},
      {"high", "higher", "highest", "expensive", "premium"},
  }};
  l.rating_context.keywords = {"rating", "ratings", "rated",   "rate",
                               "rates",  "review",  "reviews", "reviewed",
                               "star",   "stars",   "score",   "scored"};
  l.rating_context.value_words = {{
      {"low", "lowly", "poor", "poorly", "bad", "badly", "terrible",
       "lousy", "worst", "lower", "lowest"},
      {"average", "averagely", "mediocre", "moderate", "moderately", "decent",
       "ok", "okay", "middle", "medium", "fair", "satisfactory"},
      {"high", "highly", "excellent", "great", "good", "well", "top", "best",
       "superb", "outstanding", "exceptional", "fantastic", "higher",
       "highest"},
  }};

  l.family_positive_cues = {
      "family friendly", "kid friendly",     "kids friendly",
      "child friendly",  "children friendly", "childrens friendly",
      "family oriented", "family orientated", "family style",
      "families",        "family",           "kids",
      "kid",             "children",         "child",
      "childrens",       "toddlers",         "youngsters",
  };
  l.family_negative_cues = {"adults only", "adult only", "only adults",
                            "for adults",  "adults",     "adult",
                            "grown ups",   "grownups"};
  l.negators = {"not", "no", "non", "never", "without", "nor", "neither"};
  l.acceptability_words = {"welcome", "welcomed", "allowed", "permitted",
                           "suitable", "friendly", "recommended",
                           "appropriate", "catered", "accepted"};
  return l;
}

}  // namespace

std::string_view MatchConfidenceName(MatchConfidence c) {
  switch (c) {
    case MatchConfidence::kExact:
      return "exact";
    case MatchConfidence::kLexicon:
      return "lexicon";
    case MatchConfidence::kFuzzy:
      return "fuzzy";
  }
  return "exact";
}

std::optional<Span> SlotAlignment::Leftmost() const {
  if (spans.empty()) return std::nullopt;
  return spans.front().span;
}

const SlotAlignment *Alignment::ForSlot(Slot slot) const {
  for (const auto &sa : slots) {
    if (sa.slot == slot) return &sa;
  }
  return nullptr;
}

std::size_t Alignment::AlignedCount() const {
  return static_cast<std::size_t>(
      std::count_if(slots.begin(), slots.end(),
                    [](const SlotAlignment &s) { return s.aligned(); }));
}

const ValueLexicon &ValueLexicon::Default() {
  static const ValueLexicon *lexicon = new ValueLexicon(BuildDefaultLexicon());
  return *lexicon;
}

void ValueLexicon::MergeJson(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ConfigError(std::string("lexicon: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("lexicon: expected a JSON object");
  for (const auto &[slot_name, values] : doc.items()) {
    const auto slot = SlotFromName(slot_name);
    if (!slot) throw ConfigError("lexicon: unknown slot '" + slot_name + "'");
    if (!values.is_object()) {
      throw ConfigError("lexicon: '" + slot_name + "' must map values");
    }
    for (const auto &[value, list] : values.items()) {
      if (!list.is_array()) {
        throw ConfigError("lexicon: phrases for '" + value +
                          "' must be an array");
      }
      auto &phrases = this->phrases[SlotIndex(*slot)][ValueKey(value)];
      for (const auto &p : list) {
        if (!p.is_string()) throw ConfigError("lexicon: phrase not a string");
        const std::string phrase = p.get<std::string>();
        if (!Contains(phrases, phrase)) phrases.push_back(phrase);
      }
    }
  }
}

// SlotAligner ---------------------------------------------------------------

SlotAligner::SlotAligner(ValueLexicon lexicon) : lexicon_(std::move(lexicon)) {}

bool SlotAligner::IsNegated(const AnalyzedUtterance &u,
                            const Span &span) const {
  const std::size_t t = u.TokenAtOrAfter(span.begin);
  if (t >= u.tokens.size()) return false;
  // "non-family-friendly" is one token; the match starts inside it.
  if (u.tokens[t].span.begin < span.begin &&
      u.tokens[t].norm.starts_with("non")) {
    return true;
  }
  std::size_t seen = 0;
  for (std::size_t i = t; i > 0 && seen < lexicon_.negation_window; --i) {
    const Token &prev = u.tokens[i - 1];
    if (prev.tag == TokenTag::kPunct) break;
    if (IsNegatorWord(lexicon_.negators, prev.norm)) return true;
    ++seen;
  }
  return false;
}

std::vector<SlotAligner::Candidate> SlotAligner::ExactCandidates(
    Slot slot, std::string_view value, const AnalyzedUtterance &u) const {
  std::vector<Candidate> out;
  if (slot == Slot::kFamilyFriendly || IsGenericScalarValue(slot, value)) {
    return out;
  }
  const std::string phrase = NormalizePhrase(value);
  for (const Span &s : u.normalized.FindAll(phrase)) {
    if (IsScalar(slot) && IsNegated(u, s)) continue;
    const bool verbatim = EqualsIgnoreCase(
        std::string_view(u.text).substr(s.begin, s.size()), TrimView(value));
    out.push_back(
        {s, verbatim ? MatchConfidence::kExact : MatchConfidence::kLexicon});
  }
  return out;
}

std::vector<SlotAligner::Candidate> SlotAligner::ScalarContextCandidates(
    Slot slot, int magnitude, const AnalyzedUtterance &u) const {
  const ScalarContext &own = slot == Slot::kPriceRange
                                 ? lexicon_.price_context
                                 : lexicon_.rating_context;
  const ScalarContext &other = slot == Slot::kPriceRange
                                   ? lexicon_.rating_context
                                   : lexicon_.price_context;
  const auto &value_words = own.value_words[static_cast<std::size_t>(magnitude - 1)];
  constexpr std::size_t kWindow = 4;

  auto nearest = [&](std::size_t i, const std::vector<std::string> &keywords)
      -> std::optional<std::size_t> {
    std::optional<std::size_t> best;
    std::size_t best_dist = kWindow + 1;
    const std::size_t sentence = u.SentenceOfToken(i);
    const auto &range = u.sentences[sentence];
    const std::size_t lo = i >= range.first + kWindow ? i - kWindow : range.first;
    const std::size_t hi = std::min(range.last, i + kWindow + 1);
    for (std::size_t j = lo; j < hi; ++j) {
      if (j == i || !Contains(keywords, u.tokens[j].norm)) continue;
      const std::size_t d = j > i ? j - i : i - j;
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    return best;
  };

  std::vector<Candidate> out;
  for (std::size_t i = 0; i < u.tokens.size(); ++i) {
    const Token &tok = u.tokens[i];
    if (tok.tag == TokenTag::kPunct) continue;
    if (tok.norm.find('-') != std::string::npos) {
      // "low-priced", "well-rated": value word and keyword in one token.
      std::vector<std::string> parts;
      std::string part;
      for (const char c : tok.norm + "-") {
        if (c == '-') {
          if (!part.empty()) parts.push_back(part);
          part.clear();
        } else {
          part.push_back(c);
        }
      }
      const bool has_value = std::any_of(
          parts.begin(), parts.end(),
          [&](const std::string &p) { return Contains(value_words, p); });
      const bool has_key = std::any_of(
          parts.begin(), parts.end(),
          [&](const std::string &p) { return Contains(own.keywords, p); });
      if (has_value && has_key && !IsNegated(u, tok.span)) {
        out.push_back({tok.span, MatchConfidence::kLexicon});
      }
      continue;
    }
    if (!Contains(value_words, tok.norm)) continue;
    const auto mine = nearest(i, own.keywords);
    if (!mine) continue;
    const auto theirs = nearest(i, other.keywords);
    const auto dist = [i](std::size_t j) { return j > i ? j - i : i - j; };
    if (theirs && dist(*theirs) < dist(*mine)) continue;
    if (IsNegated(u, tok.span)) continue;
    const Token &key = u.tokens[*mine];
    out.push_back({Span{std::min(tok.span.begin, key.span.begin),
                        std::max(tok.span.end, key.span.end)},
                   MatchConfidence::kLexicon});
  }
  return out;
}

std::vector<SlotAligner::Candidate> SlotAligner::FamilyCandidates(
    bool want_positive, const AnalyzedUtterance &u) const {
  struct Cue {
    Span span;
    bool positive;
  };
  std::vector<Cue> cues;
  for (const auto &phrase : lexicon_.family_positive_cues) {
    for (const Span &s : u.normalized.FindAll(NormalizePhrase(phrase))) {
      cues.push_back({s, true});
    }
  }
  for (const auto &phrase : lexicon_.family_negative_cues) {
    for (const Span &s : u.normalized.FindAll(NormalizePhrase(phrase))) {
      cues.push_back({s, false});
    }
  }
  // Leftmost first, longest first at the same start; drop nested cues.
  std::sort(cues.begin(), cues.end(), [](const Cue &a, const Cue &b) {
    if (a.span.begin != b.span.begin) return a.span.begin < b.span.begin;
    return a.span.end > b.span.end;
  });
  std::vector<Candidate> out;
  std::size_t covered_until = 0;
  for (const Cue &cue : cues) {
    if (cue.span.begin < covered_until) continue;
    covered_until = cue.span.end;
    bool negated = IsNegated(u, cue.span);
    if (!negated) {
      // "children are not welcome"
      std::size_t t = u.TokenAtOrAfter(cue.span.end);
      bool saw_negator = false;
      for (std::size_t seen = 0; t < u.tokens.size() && seen < 4; ++t, ++seen) {
        const Token &tok = u.tokens[t];
        if (tok.tag == TokenTag::kPunct) break;
        if (IsNegatorWord(lexicon_.negators, tok.norm)) {
          saw_negator = true;
        } else if (saw_negator &&
                   Contains(lexicon_.acceptability_words, tok.norm)) {
          negated = true;
          break;
        }
      }
    }
    const bool positive = cue.positive != negated;
    if (positive == want_positive) {
      out.push_back({cue.span, MatchConfidence::kLexicon});
    }
  }
  return out;
}

std::vector<SlotAligner::Candidate> SlotAligner::LexiconCandidates(
    Slot slot, std::string_view value, const AnalyzedUtterance &u) const {
  std::vector<Candidate> out;
  const std::string key = ValueKey(value);

  if (slot == Slot::kFamilyFriendly) {
    if (key == "yes") return FamilyCandidates(true, u);
    if (key == "no") return FamilyCandidates(false, u);
    return out;
  }

  std::vector<std::string> phrases;
  if (auto it = lexicon_.phrases[SlotIndex(slot)].find(key);
      it != lexicon_.phrases[SlotIndex(slot)].end()) {
    phrases = it->second;
  }
  if ((slot == Slot::kName || slot == Slot::kNear) &&
      key.starts_with("the ") && key.size() > 4) {
    phrases.push_back(key.substr(4));
  }
  for (const auto &phrase : phrases) {
    const std::string norm = NormalizePhrase(phrase);
    const bool self_negating =
        IsNegatorWord(lexicon_.negators, norm.substr(0, norm.find(' ')));
    for (const Span &s : u.normalized.FindAll(norm)) {
      if (IsScalar(slot) && !self_negating && IsNegated(u, s)) continue;
      out.push_back({s, MatchConfidence::kLexicon});
    }
  }
  if (IsScalar(slot)) {
    int magnitude = 0;
    try {
      magnitude = ScalarMagnitude(slot, value);
    } catch (const OntologyError &) {
      magnitude = 0;
    }
    if (magnitude > 0) {
      auto extra = ScalarContextCandidates(slot, magnitude, u);
      out.insert(out.end(), extra.begin(), extra.end());
    }
  }
  return out;
}

std::vector<SlotAligner::Candidate> SlotAligner::FuzzyCandidates(
    Slot slot, std::string_view value, const AnalyzedUtterance &u) const {
  std::vector<Candidate> out;
  if (slot != Slot::kName && slot != Slot::kNear && slot != Slot::kFood) {
    return out;
  }
  const auto words = ValueWords(value);
  if (words.size() < 2) return out;

  std::vector<std::size_t> word_tokens;
  for (std::size_t i = 0; i < u.tokens.size(); ++i) {
    if (u.tokens[i].tag != TokenTag::kPunct) word_tokens.push_back(i);
  }
  const std::size_t n = words.size();
  if (word_tokens.size() < n) return out;
  for (std::size_t start = 0; start + n <= word_tokens.size(); ++start) {
    std::vector<bool> used(n, false);
    std::size_t matched = 0;
    std::optional<std::size_t> first, last;
    for (std::size_t k = 0; k < n; ++k) {
      const Token &tok = u.tokens[word_tokens[start + k]];
      for (std::size_t w = 0; w < n; ++w) {
        if (!used[w] && SimilarWord(tok.norm, words[w])) {
          used[w] = true;
          ++matched;
          if (!first) first = word_tokens[start + k];
          last = word_tokens[start + k];
          break;
        }
      }
    }
    if (static_cast<double>(matched) / static_cast<double>(n) >=
        lexicon_.fuzzy_threshold) {
      out.push_back({Span{u.tokens[*first].span.begin,
                          u.tokens[*last].span.end},
                     MatchConfidence::kFuzzy});
    }
  }
  return out;
}

Alignment SlotAligner::Align(const MeaningRepresentation &mr,
                             const AnalyzedUtterance &u) const {
  Alignment alignment;
  const auto &slots = mr.slots();
  alignment.slots.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    alignment.slots.push_back(SlotAlignment{i, slots[i].slot, {}});
  }
  std::vector<Span> claimed;
  auto is_free = [&claimed](const Span &s) {
    return std::none_of(claimed.begin(), claimed.end(),
                        [&s](const Span &c) { return c.Overlaps(s); });
  };
  auto take = [&](std::size_t pos, std::vector<Candidate> cands) {
    std::sort(cands.begin(), cands.end(),
              [](const Candidate &a, const Candidate &b) {
                if (a.span.begin != b.span.begin) {
                  return a.span.begin < b.span.begin;
                }
                return a.span.end > b.span.end;
              });
    const bool keep_all = IsDelexicalizedSlot(slots[pos].slot);
    auto &out = alignment.slots[pos].spans;
    for (const Candidate &c : cands) {
      if (!is_free(c.span)) continue;
      out.push_back(AlignedSpan{c.span, c.confidence});
      claimed.push_back(c.span);
      if (!keep_all) break;
    }
  };

  // Exact tier, longest values first so that "Raja Indian Cuisine" claims
  // its span before food "Indian" can.
  std::vector<std::size_t> order(slots.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&slots](std::size_t a, std::size_t b) {
                     return TrimView(slots[a].value).size() >
                            TrimView(slots[b].value).size();
                   });
  for (const std::size_t pos : order) {
    take(pos, ExactCandidates(slots[pos].slot, slots[pos].value, u));
  }
  for (std::size_t pos = 0; pos < slots.size(); ++pos) {
    if (alignment.slots[pos].aligned()) continue;
    take(pos, LexiconCandidates(slots[pos].slot, slots[pos].value, u));
  }
  for (std::size_t pos = 0; pos < slots.size(); ++pos) {
    if (alignment.slots[pos].aligned()) continue;
    take(pos, FuzzyCandidates(slots[pos].slot, slots[pos].value, u));
  }
  return alignment;
}

std::vector<AlignedSpan> SlotAligner::FindRealizations(
    Slot slot, std::string_view value, const AnalyzedUtterance &u,
    const Span &window) const {
  std::vector<AlignedSpan> out;
  auto add = [&](const std::vector<Candidate> &cands) {
    for (const auto &c : cands) {
      if (window.Contains(c.span)) out.push_back({c.span, c.confidence});
    }
  };
  add(ExactCandidates(slot, value, u));
  add(LexiconCandidates(slot, value, u));
  std::sort(out.begin(), out.end(),
            [](const AlignedSpan &a, const AlignedSpan &b) {
              return a.span < b.span;
            });
  return out;
}

std::vector<Span> SlotAligner::ContradictingFamilyCues(
    std::string_view value, const AnalyzedUtterance &u) const {
  const std::string key = ValueKey(value);
  if (key != "yes" && key != "no") return {};
  std::vector<Span> out;
  for (const auto &c : FamilyCandidates(key != "yes", u)) out.push_back(c.span);
  return out;
}

Alignment AlignSlots(const MeaningRepresentation &mr,
                     const AnalyzedUtterance &utterance) {
  static const SlotAligner aligner;
  return aligner.Align(mr, utterance);
}

// Delexicalization ------------------------------------------------------------

bool IsDelexicalizedSlot(Slot slot) {
  return slot == Slot::kName || slot == Slot::kNear || slot == Slot::kFood;
}

std::string Placeholder(Slot slot) {
  return "<" + std::string(CanonicalName(slot)) + ">";
}

DelexResult Delexicalize(const MeaningRepresentation &mr,
                         const AnalyzedUtterance &utterance,
                         const Alignment &alignment) {
  DelexResult result;
  result.mr = mr;
  std::vector<std::pair<Span, Slot>> replacements;
  for (const auto &sa : alignment.slots) {
    if (!IsDelexicalizedSlot(sa.slot)) continue;
    result.mr.SetValue(sa.slot, Placeholder(sa.slot));
    if (!sa.aligned()) {
      result.diagnostics.push_back("slot '" +
                                   std::string(CanonicalName(sa.slot)) +
                                   "' unaligned; utterance left unchanged");
      continue;
    }
    for (const auto &as : sa.spans) replacements.emplace_back(as.span, sa.slot);
  }
  std::sort(replacements.begin(), replacements.end());
  std::string out;
  std::size_t cursor = 0;
  const std::string &text = utterance.text;
  for (const auto &[span, slot] : replacements) {
    out.append(text, cursor, span.begin - cursor);
    out += Placeholder(slot);
    cursor = span.end;
  }
  out.append(text, cursor, std::string::npos);
  result.utterance = std::move(out);
  return result;
}

DelexResult Delexicalize(const MeaningRepresentation &mr,
                         std::string_view utterance) {
  const AnalyzedUtterance u = Analyze(utterance);
  return Delexicalize(mr, u, AlignSlots(mr, u));
}

std::string Relexicalize(std::string_view utterance,
                         const MeaningRepresentation &mr) {
  static constexpr std::array<Slot, 3> kSlots = {Slot::kName, Slot::kNear,
                                                 Slot::kFood};
  std::string out;
  std::size_t i = 0;
  while (i < utterance.size()) {
    bool replaced = false;
    if (utterance[i] == '<') {
      for (const Slot slot : kSlots) {
        const std::string ph = Placeholder(slot);
        if (utterance.substr(i, ph.size()) != ph) continue;
        const SlotValue *sv = mr.Find(slot);
        if (sv == nullptr) {
          throw SubstitutionError("placeholder " + ph +
                                  " has no corresponding MR slot");
        }
        out += sv->value;
        i += ph.size();
        replaced = true;
        break;
      }
    }
    if (!replaced) out.push_back(utterance[i++]);
  }
  return out;
}

bool IsExactlyAligned(const MeaningRepresentation &mr,
                      const AnalyzedUtterance &utterance,
                      const Alignment &alignment) {
  for (const auto &sa : alignment.slots) {
    if (!IsDelexicalizedSlot(sa.slot)) continue;
    if (!sa.aligned()) return false;
    const std::string &value = mr.slots()[sa.position].value;
    for (const auto &as : sa.spans) {
      if (as.confidence != MatchConfidence::kExact) return false;
      if (utterance.text.compare(as.span.begin, as.span.size(), value) != 0) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace e2estyle
