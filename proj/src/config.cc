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

#include "e2estyle/config.h"

#include <cstdio>
#include <set>

#include "e2estyle/csv.h"
#include "e2estyle/error.h"
#include "e2estyle/strings.h"
#include "json.hpp"

#ifndef E2ESTYLE_VERSION
#define E2ESTYLE_VERSION "0.0.0"
#endif

namespace e2estyle {
namespace {

std::vector<std::string> StringList(const nlohmann::json &value,
                                    const std::string &where) {
  if (!value.is_array()) throw ConfigError(where + ": expected an array");
  std::vector<std::string> out;
  for (const auto &item : value) {
    if (!item.is_string()) throw ConfigError(where + ": expected strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::string Hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

Toolkit::Toolkit()
    : Toolkit(TextAnalyzer(), SlotAligner(), DetectorLexicons::Default(),
              WeightingSchema()) {}

Toolkit::Toolkit(TextAnalyzer analyzer, SlotAligner aligner,
                 DetectorLexicons detector_lexicons, WeightingSchema schema)
    : analyzer(std::move(analyzer)),
      aligner(aligner),
      detector(std::move(detector_lexicons), std::move(aligner)),
      schema(std::move(schema)) {}

const Toolkit &Toolkit::Default() {
  static const Toolkit *toolkit = new Toolkit();
  return *toolkit;
}

Toolkit ToolkitFromJson(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");

  WeightingSchema schema;
  ValueLexicon values = ValueLexicon::Default();
  DetectorLexicons detector = DetectorLexicons::Default();
  TextLexicons text = TextLexicons::Default();
  for (const auto &[key, section] : doc.items()) {
    if (key == "schema") {
      schema = WeightingSchema::FromJson(section.dump());
    } else if (key == "value_lexicon") {
      values.MergeJson(section.dump());
    } else if (key == "detector") {
      if (!section.is_object()) throw ConfigError("detector: expected object");
      for (const auto &[list, words] : section.items()) {
        detector.Replace(list, StringList(words, "detector." + list));
      }
    } else if (key == "text") {
      if (!section.is_object()) throw ConfigError("text: expected object");
      for (const auto &[list, words] : section.items()) {
        const auto items = StringList(words, "text." + list);
        std::set<std::string> lowered;
        for (const auto &w : items) lowered.insert(AsciiLower(Trim(w)));
        if (list == "ing_exclusions") {
          text.ing_exclusions = std::move(lowered);
        } else if (list == "modals") {
          text.modals = std::move(lowered);
        } else if (list == "abbreviations") {
          text.abbreviations = std::move(lowered);
        } else {
          throw ConfigError("text: unknown list '" + list + "'");
        }
      }
    } else {
      throw ConfigError("config: unknown section '" + key + "'");
    }
  }
  return Toolkit(TextAnalyzer(std::move(text)), SlotAligner(std::move(values)),
                 std::move(detector), std::move(schema));
}

Toolkit LoadToolkit(const std::string &path) {
  return ToolkitFromJson(ReadFile(path));
}

std::string_view ToolkitVersion() { return E2ESTYLE_VERSION; }

std::string DefaultSchemaFingerprint() {
  return Hex(Fingerprint(WeightingSchema().ToJson()));
}

std::string DefaultLexiconFingerprint() {
  std::string blob;
  const ValueLexicon &v = ValueLexicon::Default();
  for (std::size_t s = 0; s < v.phrases.size(); ++s) {
    for (const auto &[value, phrases] : v.phrases[s]) {
      blob += std::to_string(s) + ":" + value + "=";
      for (const auto &p : phrases) blob += p + "|";
      blob += "\n";
    }
  }
  for (const auto *list : {&v.family_positive_cues, &v.family_negative_cues,
                           &v.negators, &v.acceptability_words}) {
    for (const auto &w : *list) blob += w + "|";
    blob += "\n";
  }
  const DetectorLexicons &d = DetectorLexicons::Default();
  for (const auto *list :
       {&d.agg_lexical, &d.quantitative_adjectives, &d.contrast_markers,
        &d.subord_conj, &d.relative_pronouns, &d.be_forms,
        &d.imperative_verbs, &d.imperative_skip, &d.fronting_openers,
        &d.fronting_exclusions, &d.appositive_openers, &d.venue_nouns,
        &d.subject_pronouns}) {
    for (const auto &w : *list) blob += w + "|";
    blob += "\n";
  }
  const TextLexicons &t = TextLexicons::Default();
  for (const auto *set : {&t.ing_exclusions, &t.modals, &t.abbreviations}) {
    for (const auto &w : *set) blob += w + "|";
    blob += "\n";
  }
  return Hex(Fingerprint(blob));
}

}  // namespace e2estyle
