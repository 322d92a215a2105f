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

// The configured set of components every pipeline stage runs with, and its
// loading from a JSON config file.
//
// Config file layout (every section optional):
//
//   {
//     "schema":        {"AGG_LEXICAL": 3, ..., "threshold": 2},
//     "value_lexicon": {"priceRange": {"cheap": ["budget", ...]}, ...},
//     "detector":      {"contrast_markers": ["but", ...], ...},
//     "text":          {"ing_exclusions": [...], "modals": [...],
//                       "abbreviations": [...]}
//   }
//
// value_lexicon entries extend the built-in phrases; detector and text
// lists replace the built-in list of the same name.

#ifndef E2ESTYLE_CONFIG_H_
#define E2ESTYLE_CONFIG_H_

#include <string>
#include <string_view>

#include "e2estyle/selection.h"
#include "e2estyle/slot_aligner.h"
#include "e2estyle/style_detector.h"
#include "e2estyle/text_analysis.h"

namespace e2estyle {

struct Toolkit {
  TextAnalyzer analyzer;
  SlotAligner aligner;
  StyleDetector detector;
  WeightingSchema schema;

  Toolkit();
  Toolkit(TextAnalyzer analyzer, SlotAligner aligner,
          DetectorLexicons detector_lexicons, WeightingSchema schema);

  // Built-in lexicons and the default schema.
  static const Toolkit &Default();
};

// Throws ConfigError for malformed documents and unknown keys.
Toolkit ToolkitFromJson(std::string_view json_text);
// Throws IoError when the file can't be read.
Toolkit LoadToolkit(const std::string &path);

// Environment variable naming the default config file.
inline constexpr std::string_view kConfigEnvVar = "E2ESTYLE_CONFIG";

std::string_view ToolkitVersion();
// Hex FNV-1a fingerprints of the default schema and of all built-in
// lexicons, for report provenance.
std::string DefaultSchemaFingerprint();
std::string DefaultLexiconFingerprint();

}  // namespace e2estyle

#endif  // E2ESTYLE_CONFIG_H_
