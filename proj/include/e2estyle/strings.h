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

// Small ASCII/UTF-8 string helpers shared across modules.

#ifndef E2ESTYLE_STRINGS_H_
#define E2ESTYLE_STRINGS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace e2estyle {

std::string_view TrimView(std::string_view s);
std::string Trim(std::string_view s);

// ASCII lower-casing; bytes >= 0x80 are left untouched.
std::string AsciiLower(std::string_view s);

bool EqualsIgnoreCase(std::string_view a, std::string_view b);

// Lower-cases and folds common Latin-1 accented letters to ASCII
// ("Café" -> "cafe"). Used for fuzzy comparisons only.
std::string FoldForMatch(std::string_view s);

std::vector<std::string> SplitWhitespace(std::string_view s);

// 64-bit FNV-1a, stable across platforms.
std::uint64_t Fingerprint(std::string_view s);

}  // namespace e2estyle

#endif  // E2ESTYLE_STRINGS_H_
