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

// Deterministic tokenization, sentence segmentation and coarse tagging of
// reference utterances. All offsets are byte offsets into the UTF-8 text.

#ifndef E2ESTYLE_TEXT_ANALYSIS_H_
#define E2ESTYLE_TEXT_ANALYSIS_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace e2estyle {

enum class TokenTag {
  kWord,
  kVerbIng,
  kModal,
  kContraction,
  kPunct,
  kNumber,
  kOther,
};

std::string_view TokenTagName(TokenTag tag);  // "WORD", "VERB-ING", ...

// Half-open byte range [begin, end).
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool Overlaps(const Span &o) const { return begin < o.end && o.begin < end; }
  bool Contains(const Span &o) const {
    return begin <= o.begin && o.end <= end;
  }
  bool operator==(const Span &) const = default;
  auto operator<=>(const Span &) const = default;
};

struct Token {
  std::string text;
  Span span;
  TokenTag tag = TokenTag::kWord;
  // Lower-cased, accent-folded form used by every lexicon lookup.
  std::string norm;

  bool operator==(const Token &) const = default;
};

// Token-index range [first, last).
struct SentenceRange {
  std::size_t first = 0;
  std::size_t last = 0;

  bool operator==(const SentenceRange &) const = default;
};

// Lower-cased, accent-folded copy of a text in which every run of
// whitespace and hyphens collapses to a single space. Each normalized byte
// remembers the original byte range it came from, so matches map back to
// spans of the raw text.
class NormalizedText {
 public:
  NormalizedText() = default;
  explicit NormalizedText(std::string_view raw);

  const std::string &text() const { return norm_; }

  // Leftmost match of an (already normalized) phrase at or after original
  // offset `from`, requiring word boundaries on both sides.
  std::optional<Span> Find(std::string_view phrase, std::size_t from = 0) const;

  // All non-overlapping matches, left to right.
  std::vector<Span> FindAll(std::string_view phrase) const;

 private:
  std::string norm_;
  std::vector<std::size_t> begin_;  // original start of each normalized byte
  std::vector<std::size_t> end_;    // original end of each normalized byte
  std::size_t raw_size_ = 0;
};

// Normalizes a lexicon phrase the same way NormalizedText normalizes text.
std::string NormalizePhrase(std::string_view phrase);

struct AnalyzedUtterance {
  std::string text;
  std::vector<Token> tokens;
  std::vector<SentenceRange> sentences;
  NormalizedText normalized;

  // Index of the sentence containing token `token_index`.
  std::size_t SentenceOfToken(std::size_t token_index) const;
  // Index of the first token whose span ends after `offset`, or
  // tokens.size().
  std::size_t TokenAtOrAfter(std::size_t offset) const;
  // Index of the sentence containing byte offset `offset`; the last
  // sentence when the offset is past the final token.
  std::size_t SentenceOfOffset(std::size_t offset) const;
  // Byte span covered by a sentence.
  Span SentenceSpan(std::size_t sentence) const;
  // Token range covering a byte span (tokens overlapping it).
  SentenceRange TokensOverlapping(const Span &span) const;
};

struct TextLexicons {
  // Words ending in "ing" that are never gerunds/participles.
  std::set<std::string> ing_exclusions;
  std::set<std::string> modals;
  // Kept as single tokens; never sentence boundaries. Lower-case, with the
  // trailing period.
  std::set<std::string> abbreviations;

  static const TextLexicons &Default();
};

class TextAnalyzer {
 public:
  TextAnalyzer() : TextAnalyzer(TextLexicons::Default()) {}
  explicit TextAnalyzer(TextLexicons lexicons);

  // Splits on whitespace and punctuation. Contractions, hyphenated words,
  // price literals ("£20-25") and decimals stay single tokens. Tags are
  // left as kWord/kPunct/kOther; see Tag().
  std::vector<Token> Tokenize(std::string_view text) const;

  // Boundaries after ".", "!", "?" and "..." tokens (plus any closing
  // quotes or brackets that follow); trailing text forms a final sentence.
  std::vector<SentenceRange> SplitSentences(
      const std::vector<Token> &tokens) const;

  void Tag(std::vector<Token> &tokens) const;

  AnalyzedUtterance Analyze(std::string_view text) const;

  const TextLexicons &lexicons() const { return lexicons_; }

 private:
  TextLexicons lexicons_;
};

// Convenience wrappers over a default-configured analyzer.
std::vector<Token> Tokenize(std::string_view text);
std::vector<SentenceRange> SplitSentences(const std::vector<Token> &tokens);
void TagTokens(std::vector<Token> &tokens);
AnalyzedUtterance Analyze(std::string_view text);

}  // namespace e2estyle

#endif  // E2ESTYLE_TEXT_ANALYSIS_H_
