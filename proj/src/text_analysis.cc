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

#include "e2estyle/text_analysis.h"

#include <algorithm>

#include "e2estyle/strings.h"

namespace e2estyle {
namespace {

enum class CharKind {
  kSpace,
  kAlpha,
  kDigit,
  kCurrency,
  kApostrophe,
  kHyphen,
  kPunct,
};

struct CharInfo {
  CharKind kind;
  std::size_t length;
};

std::size_t Utf8Length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if (lead >= 0xC2 && lead <= 0xDF) return 2;
  if (lead >= 0xE0 && lead <= 0xEF) return 3;
  if (lead >= 0xF0 && lead <= 0xF4) return 4;
  return 1;  // stray continuation or invalid byte
}

CharInfo Classify(std::string_view text, std::size_t i) {
  const auto c = static_cast<unsigned char>(text[i]);
  if (c < 0x80) {
    if (c <= 0x20 || c == 0x7F) return {CharKind::kSpace, 1};
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      return {CharKind::kAlpha, 1};
    }
    if (c >= '0' && c <= '9') return {CharKind::kDigit, 1};
    if (c == '$') return {CharKind::kCurrency, 1};
    if (c == '\'') return {CharKind::kApostrophe, 1};
    if (c == '-') return {CharKind::kHyphen, 1};
    return {CharKind::kPunct, 1};
  }
  std::size_t len = Utf8Length(c);
  if (i + len > text.size()) len = text.size() - i;
  if (len == 1) return {CharKind::kPunct, 1};
  const auto c1 = static_cast<unsigned char>(text[i + 1]);
  if (c == 0xC2) {
    if (c1 == 0xA0) return {CharKind::kSpace, len};
    if (c1 == 0xA3 || c1 == 0xA5) return {CharKind::kCurrency, len};
    return {CharKind::kPunct, len};
  }
  if (c == 0xC3 && (c1 == 0x97 || c1 == 0xB7)) return {CharKind::kPunct, len};
  if (c == 0xE2 && len == 3) {
    const auto c2 = static_cast<unsigned char>(text[i + 2]);
    if (c1 == 0x80) {
      if (c2 == 0x99) return {CharKind::kApostrophe, len};
      if (c2 == 0x93) return {CharKind::kHyphen, len};
      if (c2 >= 0x80 && c2 <= 0x8B) return {CharKind::kSpace, len};
      return {CharKind::kPunct, len};
    }
    if (c1 == 0x82 && c2 == 0xAC) return {CharKind::kCurrency, len};
    return {CharKind::kPunct, len};
  }
  return {CharKind::kAlpha, len};
}

bool IsWordKind(CharKind k) {
  return k == CharKind::kAlpha || k == CharKind::kDigit ||
         k == CharKind::kCurrency;
}

bool IsTerminal(std::string_view norm) {
  return norm == "." || norm == "!" || norm == "?" || norm == "..." ||
         norm == "\xE2\x80\xA6";
}

bool IsCloser(std::string_view text) {
  return text == "\"" || text == ")" || text == "]" || text == "'" ||
         text == "\xE2\x80\x9D" || text == "\xE2\x80\x99";
}

bool IsNormWordByte(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || u >= 0x80 ||
         (c >= 'A' && c <= 'Z');
}

const std::set<std::string> kNounDeterminers = {
    "the", "a", "an", "its", "their", "his", "her", "our", "your", "this",
};

}  // namespace

std::string_view TokenTagName(TokenTag tag) {
  switch (tag) {
    case TokenTag::kWord:
      return "WORD";
    case TokenTag::kVerbIng:
      return "VERB-ING";
    case TokenTag::kModal:
      return "MODAL";
    case TokenTag::kContraction:
      return "CONTRACTION";
    case TokenTag::kPunct:
      return "PUNCT";
    case TokenTag::kNumber:
      return "NUMBER";
    case TokenTag::kOther:
      return "OTHER";
  }
  return "OTHER";
}

// NormalizedText ------------------------------------------------------------

NormalizedText::NormalizedText(std::string_view raw) : raw_size_(raw.size()) {
  norm_.reserve(raw.size());
  auto emit = [this](char c, std::size_t b, std::size_t e) {
    norm_.push_back(c);
    begin_.push_back(b);
    end_.push_back(e);
  };
  std::size_t i = 0;
  while (i < raw.size()) {
    const CharInfo info = Classify(raw, i);
    const std::size_t next = i + info.length;
    const auto c = static_cast<unsigned char>(raw[i]);
    if (info.kind == CharKind::kSpace || info.kind == CharKind::kHyphen) {
      if (!norm_.empty() && norm_.back() == ' ') {
        end_.back() = next;
      } else {
        emit(' ', i, next);
      }
    } else if (info.kind == CharKind::kApostrophe) {
      emit('\'', i, next);
    } else if (c == 0xC3 && info.length == 2) {
      const std::string folded = FoldForMatch(raw.substr(i, 2));
      if (folded.size() == 1) {
        emit(folded[0], i, next);
      } else {
        emit(raw[i], i, next);
        emit(raw[i + 1], i, next);
      }
    } else if (c == 0xE2 && info.length == 3 &&
               static_cast<unsigned char>(raw[i + 1]) == 0x80) {
      const auto c2 = static_cast<unsigned char>(raw[i + 2]);
      if (c2 == 0x9C || c2 == 0x9D) {
        emit('"', i, next);
      } else if (c2 == 0x98) {
        emit('\'', i, next);
      } else if (c2 == 0xA6) {
        emit('.', i, next);
      } else {
        for (std::size_t k = i; k < next; ++k) emit(raw[k], i, next);
      }
    } else if (info.length == 1) {
      emit(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : raw[i],
           i, next);
    } else {
      for (std::size_t k = i; k < next; ++k) emit(raw[k], i, next);
    }
    i = next;
  }
}

std::optional<Span> NormalizedText::Find(std::string_view phrase,
                                         std::size_t from) const {
  if (phrase.empty()) return std::nullopt;
  std::size_t idx = static_cast<std::size_t>(
      std::lower_bound(begin_.begin(), begin_.end(), from) - begin_.begin());
  while (idx < norm_.size()) {
    const std::size_t hit = norm_.find(phrase, idx);
    if (hit == std::string::npos) return std::nullopt;
    const std::size_t stop = hit + phrase.size();
    const bool left_ok = hit == 0 || !IsNormWordByte(norm_[hit - 1]) ||
                         !IsNormWordByte(phrase.front());
    const bool right_ok = stop == norm_.size() ||
                          !IsNormWordByte(norm_[stop]) ||
                          !IsNormWordByte(phrase.back());
    if (left_ok && right_ok) return Span{begin_[hit], end_[stop - 1]};
    idx = hit + 1;
  }
  return std::nullopt;
}

std::vector<Span> NormalizedText::FindAll(std::string_view phrase) const {
  std::vector<Span> out;
  std::size_t from = 0;
  while (from <= raw_size_) {
    const auto hit = Find(phrase, from);
    if (!hit) break;
    out.push_back(*hit);
    from = hit->end;
  }
  return out;
}

std::string NormalizePhrase(std::string_view phrase) {
  return Trim(NormalizedText(phrase).text());
}

// AnalyzedUtterance ---------------------------------------------------------

std::size_t AnalyzedUtterance::SentenceOfToken(std::size_t token_index) const {
  auto it = std::upper_bound(
      sentences.begin(), sentences.end(), token_index,
      [](std::size_t t, const SentenceRange &s) { return t < s.last; });
  if (it == sentences.end()) return sentences.empty() ? 0 : sentences.size() - 1;
  return static_cast<std::size_t>(it - sentences.begin());
}

std::size_t AnalyzedUtterance::TokenAtOrAfter(std::size_t offset) const {
  auto it = std::upper_bound(
      tokens.begin(), tokens.end(), offset,
      [](std::size_t off, const Token &t) { return off < t.span.end; });
  return static_cast<std::size_t>(it - tokens.begin());
}

std::size_t AnalyzedUtterance::SentenceOfOffset(std::size_t offset) const {
  const std::size_t t = TokenAtOrAfter(offset);
  if (t >= tokens.size()) return sentences.empty() ? 0 : sentences.size() - 1;
  return SentenceOfToken(t);
}

Span AnalyzedUtterance::SentenceSpan(std::size_t sentence) const {
  const auto &s = sentences.at(sentence);
  if (s.first >= s.last) return {};
  return Span{tokens[s.first].span.begin, tokens[s.last - 1].span.end};
}

SentenceRange AnalyzedUtterance::TokensOverlapping(const Span &span) const {
  const std::size_t first = TokenAtOrAfter(span.begin);
  std::size_t last = first;
  while (last < tokens.size() && tokens[last].span.begin < span.end) ++last;
  return SentenceRange{first, last};
}

// Lexicons ------------------------------------------------------------------

const TextLexicons &TextLexicons::Default() {
  static const TextLexicons *lexicons = [] {
    auto *l = new TextLexicons;
    l->ing_exclusions = {
        // nouns
        "rating", "ratings", "king", "pudding", "wedding", "something",
        "anything", "nothing", "everything", "evening", "morning", "thing",
        "ring", "spring", "string", "wing", "sing", "bring", "during",
        "building", "ceiling", "clothing", "dumpling", "icing", "topping",
        "filling", "stuffing", "seasoning", "setting", "seating", "parking",
        "outing", "meeting", "beijing", "peking", "lodging", "awning",
        "upbringing", "sibling", "darling", "sterling",
        "viking", "swing", "sling", "sting", "cling", "fling", "bling",
        "lightning", "inning", "ping", "ding", "wring", "kling", "duckling",
        "shilling", "farthing", "herring", "whiting", "bunting", "pricing",
        // participial adjectives
        "amazing", "interesting", "outstanding", "appealing", "charming",
        "disappointing", "inviting", "relaxing", "welcoming", "boring",
        "exciting", "stunning", "loving", "caring", "accommodating",
        "pleasing", "satisfying", "appetizing", "appetising", "mouthwatering",
        "refreshing", "fitting", "upcoming", "outgoing", "ongoing",
        "promising", "thriving", "rewarding", "underwhelming",
        "overwhelming", "striking", "surprising", "astonishing", "daunting",
        "alarming", "worrying", "annoying", "entertaining", "fascinating",
        "intriguing", "enticing", "tempting", "calming", "soothing",
        "comforting", "uplifting", "engaging", "dazzling", "sparkling",
        "enchanting", "captivating", "compelling", "inspiring", "trending",
        "thrilling", "cunning", "becoming", "fulfilling",
        "matching", "missing", "leading", "following", "remaining",
        "existing", "willing", "everlasting",
        "easygoing", "hardworking", "breathtaking", "eyecatching",
        "smashing", "cracking", "banging", "rocking", "amusing", "puzzling",
        "shocking", "frightening", "terrifying", "embarrassing",
        "depressing", "confusing", "tiring", "exhausting", "demanding",
        "challenging", "encouraging", "reassuring", "convincing",
        "deserving", "unassuming", "unwelcoming", "uninviting",
        "unappealing", "unappetizing", "unsatisfying", "uninspiring",
        "unexciting", "uninteresting", "unpromising", "unforgiving",
        "forgiving", "lasting", "unending", "booming",
        "bustling", "humming", "buzzing",
    };
    l->modals = {
        "will",     "would",    "can",       "could",     "shall",
        "should",   "may",      "might",     "must",      "cannot",
        "can't",    "won't",    "wouldn't",  "couldn't",  "shouldn't",
        "mustn't",  "mightn't", "shan't",
    };
    l->abbreviations = {"mr.", "mrs.", "dr.", "st.", "vs.", "e.g.", "i.e."};
    return l;
  }();
  return *lexicons;
}

// TextAnalyzer --------------------------------------------------------------

TextAnalyzer::TextAnalyzer(TextLexicons lexicons)
    : lexicons_(std::move(lexicons)) {}

std::vector<Token> TextAnalyzer::Tokenize(std::string_view text) const {
  std::vector<Token> tokens;
  // Longest abbreviations first so "mrs." wins over "mr.".
  std::vector<std::string> abbreviations(lexicons_.abbreviations.begin(),
                                         lexicons_.abbreviations.end());
  std::stable_sort(abbreviations.begin(), abbreviations.end(),
                   [](const std::string &a, const std::string &b) {
                     return a.size() > b.size();
                   });

  auto push = [&](std::size_t b, std::size_t e, TokenTag tag) {
    Token t;
    t.text = std::string(text.substr(b, e - b));
    t.span = Span{b, e};
    t.tag = tag;
    t.norm = FoldForMatch(t.text);
    tokens.push_back(std::move(t));
  };

  std::size_t i = 0;
  while (i < text.size()) {
    const CharInfo info = Classify(text, i);
    if (info.kind == CharKind::kSpace) {
      i += info.length;
      continue;
    }
    if (IsWordKind(info.kind)) {
      bool matched_abbreviation = false;
      if (info.kind == CharKind::kAlpha) {
        for (const auto &abbr : abbreviations) {
          if (i + abbr.size() > text.size()) continue;
          if (!EqualsIgnoreCase(text.substr(i, abbr.size()), abbr)) continue;
          const std::size_t after = i + abbr.size();
          if (after < text.size() &&
              IsWordKind(Classify(text, after).kind)) {
            continue;
          }
          push(i, after, TokenTag::kWord);
          i = after;
          matched_abbreviation = true;
          break;
        }
      }
      if (matched_abbreviation) continue;

      const std::size_t start = i;
      CharKind prev = info.kind;
      bool has_alnum = info.kind != CharKind::kCurrency;
      i += info.length;
      while (i < text.size()) {
        const CharInfo cur = Classify(text, i);
        if (IsWordKind(cur.kind)) {
          has_alnum = has_alnum || cur.kind != CharKind::kCurrency;
          prev = cur.kind;
          i += cur.length;
          continue;
        }
        const std::size_t after = i + cur.length;
        if (after >= text.size()) break;
        const CharInfo next = Classify(text, after);
        bool join = false;
        if (cur.kind == CharKind::kHyphen) {
          join = IsWordKind(next.kind);
        } else if (cur.kind == CharKind::kApostrophe) {
          const auto n = static_cast<unsigned char>(text[after]);
          join = prev == CharKind::kAlpha && next.kind == CharKind::kAlpha &&
                 n < 0x80;
        } else if (text[i] == '.' || text[i] == ',' || text[i] == '/' ||
                   text[i] == ':') {
          join = prev == CharKind::kDigit && next.kind == CharKind::kDigit;
        }
        if (!join) break;
        prev = next.kind;
        i = after + next.length;
      }
      push(start, i, has_alnum ? TokenTag::kWord : TokenTag::kOther);
      continue;
    }
    // Punctuation. A run of periods is one token.
    if (text[i] == '.') {
      std::size_t j = i;
      while (j < text.size() && text[j] == '.') ++j;
      push(i, j, TokenTag::kPunct);
      i = j;
      continue;
    }
    push(i, i + info.length, TokenTag::kPunct);
    i += info.length;
  }
  return tokens;
}

std::vector<SentenceRange> TextAnalyzer::SplitSentences(
    const std::vector<Token> &tokens) const {
  std::vector<SentenceRange> sentences;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (tokens[i].tag == TokenTag::kPunct && IsTerminal(tokens[i].norm)) {
      std::size_t end = i + 1;
      while (end < tokens.size() && tokens[end].tag == TokenTag::kPunct &&
             (IsTerminal(tokens[end].norm) || IsCloser(tokens[end].text))) {
        ++end;
      }
      sentences.push_back(SentenceRange{start, end});
      start = end;
      i = end;
      continue;
    }
    ++i;
  }
  if (start < tokens.size()) {
    sentences.push_back(SentenceRange{start, tokens.size()});
  }
  return sentences;
}

void TextAnalyzer::Tag(std::vector<Token> &tokens) const {
  bool sentence_initial = true;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    Token &t = tokens[i];
    if (t.tag == TokenTag::kPunct) {
      if (IsTerminal(t.norm)) sentence_initial = true;
      continue;
    }
    const bool initial = sentence_initial;
    sentence_initial = false;
    if (t.tag == TokenTag::kOther) continue;

    const std::string &n = t.norm;
    const bool has_digit =
        std::any_of(n.begin(), n.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (has_digit) {
      t.tag = TokenTag::kNumber;
      continue;
    }
    const std::size_t apostrophe = n.find('\'');
    if (lexicons_.modals.count(n) != 0 ||
        (apostrophe != std::string::npos &&
         (n.ends_with("'ll") || n.ends_with("'d")))) {
      t.tag = TokenTag::kModal;
      continue;
    }
    if (apostrophe != std::string::npos) {
      t.tag = TokenTag::kContraction;
      continue;
    }
    const bool all_letters = std::all_of(
        n.begin(), n.end(), [](char c) { return c >= 'a' && c <= 'z'; });
    if (all_letters && n.size() >= 5 && n.ends_with("ing") &&
        lexicons_.ing_exclusions.count(n) == 0) {
      const bool capitalized = t.text[0] >= 'A' && t.text[0] <= 'Z';
      const bool after_determiner =
          i > 0 && kNounDeterminers.count(tokens[i - 1].norm) != 0;
      if ((!capitalized || initial) && !after_determiner) {
        t.tag = TokenTag::kVerbIng;
        continue;
      }
    }
    t.tag = TokenTag::kWord;
  }
}

AnalyzedUtterance TextAnalyzer::Analyze(std::string_view text) const {
  AnalyzedUtterance u;
  u.text = std::string(text);
  u.tokens = Tokenize(text);
  Tag(u.tokens);
  u.sentences = SplitSentences(u.tokens);
  u.normalized = NormalizedText(text);
  return u;
}

std::vector<Token> Tokenize(std::string_view text) {
  static const TextAnalyzer analyzer;
  return analyzer.Tokenize(text);
}

std::vector<SentenceRange> SplitSentences(const std::vector<Token> &tokens) {
  static const TextAnalyzer analyzer;
  return analyzer.SplitSentences(tokens);
}

void TagTokens(std::vector<Token> &tokens) {
  static const TextAnalyzer analyzer;
  analyzer.Tag(tokens);
}

AnalyzedUtterance Analyze(std::string_view text) {
  static const TextAnalyzer analyzer;
  return analyzer.Analyze(text);
}

}  // namespace e2estyle
