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

#include "e2estyle/corpus.h"

#include "e2estyle/csv.h"
#include "e2estyle/error.h"
#include "e2estyle/strings.h"

namespace e2estyle {

std::string_view SplitName(Split split) {
  switch (split) {
    case Split::kTraining:
      return "training";
    case Split::kValidation:
      return "validation";
    case Split::kTest:
      return "test";
  }
  return "training";
}

std::optional<Split> SplitFromName(std::string_view name) {
  const std::string lower = AsciiLower(name);
  if (lower == "training" || lower == "train") return Split::kTraining;
  if (lower == "validation" || lower == "dev" || lower == "devel") {
    return Split::kValidation;
  }
  if (lower == "test") return Split::kTest;
  return std::nullopt;
}

namespace {

LoadResult BuildCorpus(const Table &table, Split split,
                       const LoadOptions &options, std::string provenance) {
  LoadResult result;
  if (!provenance.empty()) result.corpus.provenance.push_back(provenance);
  if (table.header.empty()) {
    throw ValidationError("missing header row (expected columns mr, ref)");
  }
  const auto mr_col = table.Column("mr");
  const auto ref_col = table.Column("ref");
  if (!mr_col) throw ValidationError("missing column 'mr'");
  if (!ref_col && !options.allow_missing_ref) {
    throw ValidationError("missing column 'ref'");
  }

  result.corpus.samples.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto &row = table.rows[i];
    const std::size_t row_number = i + 1;
    try {
      if (row.size() != table.header.size()) {
        throw ValidationError("expected " +
                              std::to_string(table.header.size()) +
                              " fields, found " + std::to_string(row.size()));
      }
      CorpusSample sample;
      sample.mr = ParseMr(row[*mr_col]);
      sample.split = split;
      if (ref_col) {
        sample.ref = row[*ref_col];
        if (TrimView(sample.ref).empty()) {
          throw ValidationError("empty reference");
        }
      }
      if (options.validate_slot_count && !HasCorpusSlotCount(sample.mr)) {
        throw StructuralError("MR has " + std::to_string(sample.mr.size()) +
                              " slots, expected 3 to 8");
      }
      result.corpus.samples.push_back(std::move(sample));
    } catch (const ValidationError &e) {
      if (!options.permissive) throw RowError(row_number, e.what());
      result.bad_rows.push_back(BadRow{row_number, e.what()});
    }
  }
  return result;
}

}  // namespace

LoadResult ParseCorpus(std::string_view text, char delimiter, Split split,
                       const LoadOptions &options, std::string provenance) {
  return BuildCorpus(ParseDelimited(text, delimiter), split, options,
                     std::move(provenance));
}

LoadResult LoadCorpusWithReport(const std::string &path, Split split,
                                const LoadOptions &options) {
  return BuildCorpus(ReadTable(path), split, options, path);
}

Corpus LoadCorpus(const std::string &path, Split split,
                  const LoadOptions &options) {
  return LoadCorpusWithReport(path, split, options).corpus;
}

std::string FormatCorpus(const Corpus &corpus, TableFormat format) {
  const char delimiter = format == TableFormat::kTsv ? '\t' : ',';
  std::string out = FormatRecord({"mr", "ref"}, delimiter);
  for (const auto &sample : corpus.samples) {
    out += FormatRecord({SerializeMr(sample.mr), sample.ref}, delimiter);
  }
  return out;
}

void WriteCorpus(const Corpus &corpus, const std::string &path,
                 TableFormat format) {
  WriteFile(path, FormatCorpus(corpus, format));
}

TableFormat FormatForPath(const std::string &path) {
  const auto dot = path.rfind('.');
  if (dot != std::string::npos && AsciiLower(path.substr(dot)) == ".tsv") {
    return TableFormat::kTsv;
  }
  return TableFormat::kCsv;
}

}  // namespace e2estyle
