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

// Fixtures, gold data and random generators shared by the test binaries.

#ifndef E2ESTYLE_TESTS_TEST_SUPPORT_H_
#define E2ESTYLE_TESTS_TEST_SUPPORT_H_

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "e2estyle/config.h"
#include "e2estyle/corpus.h"
#include "e2estyle/mr.h"
#include "e2estyle/style_detector.h"

namespace e2estyle::testing {

std::string DataPath(std::string_view file);

// The six example utterances of the style categories, each with an MR that
// covers the slots it mentions.
struct CategoryExample {
  Category category;
  std::string mr;
  std::string text;
};
const std::vector<CategoryExample> &CategoryExamples();
void PrintTo(const CategoryExample &example, std::ostream *os);

// Gold alignment slice. Each reference marks realizations as
// "[slotName:text]"; unmarked slots are unrealized.
struct GoldSample {
  MeaningRepresentation mr;
  std::string text;
  std::vector<std::pair<Slot, Span>> spans;
};
GoldSample ParseGoldLine(std::string_view line);
std::vector<GoldSample> LoadGoldSlice(const std::string &path);

struct AlignmentScore {
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;

  double Precision() const;
  double Recall() const;
  double F1() const;
};
// Slot-level scoring: a predicted slot counts as correct when one of its
// spans overlaps a gold span of that slot.
AlignmentScore ScoreAlignment(const std::vector<GoldSample> &gold,
                              const Toolkit &toolkit,
                              std::vector<std::string> *errors = nullptr);

// Random restaurant MRs and template-built references. Every value is
// realized verbatim, so the samples are exactly aligned.
class SampleGenerator {
 public:
  explicit SampleGenerator(std::uint64_t seed) : rng_(seed) {}

  MeaningRepresentation Mr(std::size_t min_slots = 3,
                           std::size_t max_slots = 8);
  // A reference realizing every slot of `mr`, optionally decorated with
  // discourse markers.
  std::string Reference(const MeaningRepresentation &mr);
  // `size` samples drawn from a pool of `distinct_mrs` MRs.
  Corpus MakeCorpus(std::size_t size, std::size_t distinct_mrs);
  // An arbitrary English-like sentence ending with a period.
  std::string Sentence();

  std::size_t Uniform(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  bool Coin(double p = 0.5) {
    return std::bernoulli_distribution(p)(rng_);
  }
  std::mt19937_64 &rng() { return rng_; }

  template <typename T>
  const T &Pick(const std::vector<T> &items) {
    return items[Uniform(items.size())];
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace e2estyle::testing

#endif  // E2ESTYLE_TESTS_TEST_SUPPORT_H_
