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

#ifndef E2ESTYLE_CORPUS_H_
#define E2ESTYLE_CORPUS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "e2estyle/mr.h"

namespace e2estyle {

enum class Split { kTraining, kValidation, kTest };

std::string_view SplitName(Split split);
std::optional<Split> SplitFromName(std::string_view name);

struct CorpusSample {
  MeaningRepresentation mr;
  std::string ref;
  Split split = Split::kTraining;

  bool operator==(const CorpusSample &) const = default;
};

// Samples in input file order. Every downstream operation preserves this
// order, which is what makes the pipeline deterministic.
struct Corpus {
  std::vector<CorpusSample> samples;
  std::vector<std::string> provenance;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }

  // Corpora compare by content; provenance is bookkeeping.
  bool operator==(const Corpus &other) const {
    return samples == other.samples;
  }
};

struct BadRow {
  std::size_t row = 0;  // 1-based data row
  std::string message;
};

struct LoadOptions {
  // Collect bad rows instead of throwing on the first one.
  bool permissive = false;
  // Enforce the 3-8 content slot corpus invariant.
  bool validate_slot_count = false;
  // Accept files without a `ref` column (the E2E MR-only test file). Such
  // samples carry an empty reference.
  bool allow_missing_ref = false;
};

struct LoadResult {
  Corpus corpus;
  std::vector<BadRow> bad_rows;
};

// Loads an E2E-format CSV (or TSV) with `mr` and `ref` columns. Throws
// IoError when the file can't be read and RowError / ValidationError for
// schema problems unless `options.permissive` is set (missing columns are
// always fatal).
LoadResult LoadCorpusWithReport(const std::string &path, Split split,
                                const LoadOptions &options = {});

Corpus LoadCorpus(const std::string &path, Split split,
                  const LoadOptions &options = {});

// Same as LoadCorpusWithReport but over in-memory text.
LoadResult ParseCorpus(std::string_view text, char delimiter, Split split,
                       const LoadOptions &options = {},
                       std::string provenance = {});

enum class TableFormat { kCsv, kTsv };

// Serializes with annotations so the output is directly usable as seq2seq
// training data.
std::string FormatCorpus(const Corpus &corpus, TableFormat format);

void WriteCorpus(const Corpus &corpus, const std::string &path,
                 TableFormat format);

// Format from a file extension: ".tsv" selects TSV, anything else CSV.
TableFormat FormatForPath(const std::string &path);

}  // namespace e2estyle

#endif  // E2ESTYLE_CORPUS_H_
