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

#include <gtest/gtest.h>

#include "e2estyle/config.h"
#include "e2estyle/csv.h"
#include "e2estyle/error.h"

namespace e2estyle {
namespace {

TEST(ToolkitFromJson, EmptyDocumentIsDefault) {
  const Toolkit tk = ToolkitFromJson("{}");
  EXPECT_EQ(tk.schema, WeightingSchema());
}

TEST(ToolkitFromJson, SectionsApply) {
  const Toolkit tk = ToolkitFromJson(R"({
    "schema": {"threshold": 5, "MODAL": 0},
    "value_lexicon": {"area": {"riverside": ["on the water"]}},
    "detector": {"contrast_markers": ["nevertheless"]},
    "text": {"modals": ["gotta"]}
  })");
  EXPECT_EQ(tk.schema.threshold, 5);
  EXPECT_EQ(tk.schema.Weight(MarkerSubset::kModal), 0);

  const MeaningRepresentation mr = ParseMr("name[A], area[riverside]");
  const AnalyzedUtterance u =
      tk.analyzer.Analyze("A is on the water, nevertheless you gotta go.");
  EXPECT_TRUE(tk.aligner.Align(mr, u).ForSlot(Slot::kArea)->aligned());
  const StyleProfile p = tk.detector.Detect(u, mr);
  EXPECT_TRUE(p.Has(MarkerSubset::kContrastMarkers));
  EXPECT_TRUE(p.Has(MarkerSubset::kModal));
  const StyleProfile q =
      tk.detector.Detect(tk.analyzer.Analyze("A is nice but far."), mr);
  EXPECT_FALSE(q.Has(MarkerSubset::kContrastMarkers));
}

TEST(ToolkitFromJson, Errors) {
  for (const char *bad :
       {"[]", "{", R"({"colours": {}})", R"({"detector": {"nope": []}})",
        R"({"text": {"nope": []}})", R"({"detector": {"be_forms": [1]}})",
        R"({"schema": {"SARCASM": 1}})"}) {
    EXPECT_THROW(ToolkitFromJson(bad), ConfigError) << bad;
  }
}

TEST(LoadToolkit, MissingFileIsIoError) {
  EXPECT_THROW(LoadToolkit(::testing::TempDir() + "/no-such-config.json"),
               IoError);
}

TEST(LoadToolkit, ReadsFile) {
  const std::string path = ::testing::TempDir() + "/config.json";
  WriteFile(path, R"({"schema": {"threshold": 3}})");
  EXPECT_EQ(LoadToolkit(path).schema.threshold, 3);
}

TEST(Provenance, VersionAndFingerprints) {
  EXPECT_FALSE(ToolkitVersion().empty());
  const std::string schema = DefaultSchemaFingerprint();
  const std::string lexicon = DefaultLexiconFingerprint();
  EXPECT_EQ(schema.size(), 16u);
  EXPECT_EQ(lexicon.size(), 16u);
  EXPECT_EQ(schema, DefaultSchemaFingerprint());
  EXPECT_NE(schema, lexicon);
}

}  // namespace
}  // namespace e2estyle
