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

// Minimal RFC-4180 reader and writer. Quoted fields may contain delimiters,
// doubled quotes and line breaks; records end at LF or CRLF.

#ifndef E2ESTYLE_CSV_H_
#define E2ESTYLE_CSV_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace e2estyle {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::optional<std::size_t> Column(std::string_view name) const;
};

// Parses a whole document. A leading UTF-8 BOM is skipped. Throws
// ValidationError on an unterminated quoted field.
Table ParseDelimited(std::string_view text, char delimiter);

// Reads a file. The delimiter is a tab when the header line contains a tab
// and no comma, otherwise a comma. Throws IoError if the file can't be read.
Table ReadTable(const std::string &path);

std::string FormatRecord(const std::vector<std::string> &fields,
                         char delimiter);

std::string ReadFile(const std::string &path);
void WriteFile(const std::string &path, std::string_view contents);

}  // namespace e2estyle

#endif  // E2ESTYLE_CSV_H_
