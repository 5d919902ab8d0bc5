//
// Copyright 2026 The Adversarial Text Normalizer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "atn/mappings.h"

#include <algorithm>

#include "absl/status/status.h"
#include "atn/utf8.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace atn {
namespace {

using ::atn::testing::ToU32;

TEST(ConfusableTableTest, ParsesHexRow) {
  absl::StatusOr<ConfusableTable> table = ConfusableTable::Parse("1D413\tT\n");
  ASSERT_TRUE(table.ok()) << table.status();
  ASSERT_EQ(table->size(), 1u);
  EXPECT_EQ(table->entries()[0].source, std::u32string(1, 0x1D413));
  EXPECT_EQ(table->entries()[0].replacement, "T");
}

TEST(ConfusableTableTest, EmptyFileGivesEmptyTable) {
  absl::StatusOr<ConfusableTable> table = ConfusableTable::Parse("");
  ASSERT_TRUE(table.ok());
  EXPECT_TRUE(table->empty());
  table = ConfusableTable::Parse("# only a comment\n\n");
  ASSERT_TRUE(table.ok());
  EXPECT_TRUE(table->empty());
}

TEST(ConfusableTableTest, ReadsMetadataAndMultiCodepointSources) {
  absl::StatusOr<ConfusableTable> table = ConfusableTable::Parse(
      "#@ name=emoji\n#@ version=3\n1F170 FE0F\tA\n1F170\tA\n", "fallback");
  ASSERT_TRUE(table.ok()) << table.status();
  EXPECT_EQ(table->name(), "emoji");
  EXPECT_EQ(table->version(), "3");
  EXPECT_EQ(table->entries()[0].source, (std::u32string{0x1F170, 0xFE0F}));
}

TEST(ConfusableTableTest, DuplicateSourceIsAConflict) {
  absl::StatusOr<ConfusableTable> table =
      ConfusableTable::Parse("FF34\tT\nFF34\tX\n");
  ASSERT_FALSE(table.ok());
  EXPECT_EQ(table.status().code(), absl::StatusCode::kAlreadyExists);
  EXPECT_NE(table.status().message().find("line 2"), std::string::npos);
}

TEST(ConfusableTableTest, MalformedRowReportsLineNumber) {
  for (const char* bad : {"FF34 T\n", "\tT\n", "XYZ\tT\n", "D800\tT\n",
                          "110000\tT\n", "FF34  FF35\tT\n"}) {
    absl::StatusOr<ConfusableTable> table =
        ConfusableTable::Parse(std::string("# header\n") + bad);
    ASSERT_FALSE(table.ok()) << bad;
    EXPECT_EQ(table.status().code(), absl::StatusCode::kInvalidArgument) << bad;
    EXPECT_NE(table.status().message().find("line 2"), std::string::npos)
        << table.status();
  }
}

TEST(ConfusableTableTest, RejectsNonAsciiOrEmptyReplacement) {
  absl::StatusOr<ConfusableTable> table =
      ConfusableTable::Parse("FF34\t\xC3\xA9\n");
  ASSERT_FALSE(table.ok());
  EXPECT_EQ(table.status().code(), absl::StatusCode::kOutOfRange);
  table = ConfusableTable::Parse("FF34\t\n");
  ASSERT_FALSE(table.ok());
  EXPECT_EQ(table.status().code(), absl::StatusCode::kOutOfRange);
  table = ConfusableTable::Parse("FF34\ta\tb\n");  // tab is not printable
  ASSERT_FALSE(table.ok());
  EXPECT_EQ(table.status().code(), absl::StatusCode::kOutOfRange);
}

TEST(ConfusableTableTest, RejectsKeyboardCharactersInSources) {
  // Covers the "maps to itself" case: 'T' -> "T".
  absl::StatusOr<ConfusableTable> table = ConfusableTable::Parse("54\tT\n");
  ASSERT_FALSE(table.ok());
  EXPECT_EQ(table.status().code(), absl::StatusCode::kOutOfRange);
  table = ConfusableTable::Parse("1F170 41\tA\n");
  ASSERT_FALSE(table.ok());
}

TEST(ConfusableTableTest, LookupExamples) {
  ConfusableTable table;
  ASSERT_TRUE(table.Add(std::u32string(1, 0x1D413), "T").ok());
  ASSERT_TRUE(table.Add(std::u32string(1, 0xFB06), "st").ok());

  std::optional<ConfusableMatch> m = table.Lookup(ToU32("𝐓h"), 0);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->length, 1u);
  EXPECT_EQ(m->replacement, "T");

  EXPECT_FALSE(table.Lookup(U"h", 0).has_value());
  EXPECT_FALSE(table.Lookup(U"h", 5).has_value());

  m = table.Lookup(ToU32("teﬆ"), 2);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->length, 1u);
  EXPECT_EQ(m->replacement, "st");
}

TEST(ConfusableTableTest, LongestMatchWins) {
  ConfusableTable table;
  ASSERT_TRUE(table.Add(std::u32string{0x0101}, "y").ok());
  ASSERT_TRUE(table.Add(std::u32string{0x0101, 0x0102}, "x").ok());
  ASSERT_TRUE(table.Add(std::u32string{0x0101, 0x0102, 0x0103}, "w").ok());

  std::optional<ConfusableMatch> m = table.Lookup(U"āĂz", 0);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->length, 2u);
  EXPECT_EQ(m->replacement, "x");
  m = table.Lookup(U"āĂă", 0);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->length, 3u);
  m = table.Lookup(U"āz", 0);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->length, 1u);
  EXPECT_EQ(m->replacement, "y");
}

TEST(ConfusableTableTest, MergeDeduplicatesAndDetectsConflicts) {
  ConfusableTable a("a", "1");
  ConfusableTable b("b", "2");
  ASSERT_TRUE(a.Add(U"Ｔ", "T").ok());
  ASSERT_TRUE(b.Add(U"Ｔ", "T").ok());
  ASSERT_TRUE(b.Add(U"Ｕ", "U").ok());
  absl::StatusOr<ConfusableTable> merged =
      ConfusableTable::Merge(std::vector<ConfusableTable>{a, b}, "ab");
  ASSERT_TRUE(merged.ok()) << merged.status();
  EXPECT_EQ(merged->size(), 2u);
  EXPECT_EQ(merged->version(), "a@1,b@2");

  ConfusableTable c("c");
  ASSERT_TRUE(c.Add(U"Ｔ", "X").ok());
  merged = ConfusableTable::Merge(std::vector<ConfusableTable>{a, c}, "ac");
  ASSERT_FALSE(merged.ok());
  EXPECT_EQ(merged.status().code(), absl::StatusCode::kAlreadyExists);
}

TEST(BuiltinTablesTest, EveryEntryRoundTripsThroughLookup) {
  const ConfusableTable& table = *BuiltinConfusables();
  ASSERT_GT(table.size(), 1000u);
  for (const ConfusableTable::Entry& entry : table.entries()) {
    std::optional<ConfusableMatch> m = table.Lookup(entry.source, 0);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->length, entry.source.size());
    EXPECT_EQ(m->replacement, entry.replacement);
    for (char c : entry.replacement) {
      EXPECT_TRUE(c >= 0x20 && c <= 0x7E);
    }
  }
}

TEST(BuiltinTablesTest, MultiCodepointSourcesStartWithAMappedCodepoint) {
  // Joining fragments around a lone first codepoint can then never create a
  // new match on a second normalization.
  const ConfusableTable& table = *BuiltinConfusables();
  for (const ConfusableTable::Entry& entry : table.entries()) {
    if (entry.source.size() < 2) continue;
    std::optional<ConfusableMatch> head =
        table.Lookup(entry.source.substr(0, 1), 0);
    EXPECT_TRUE(head.has_value()) << std::hex << static_cast<uint32_t>(entry.source[0]);
  }
}

TEST(BuiltinTablesTest, CoversFullwidthForms) {
  // Fullwidth forms sit at a fixed offset of U+FEE0 from ASCII.
  const ConfusableTable& table = *BuiltinTable("fullwidth");
  for (char32_t c = 0xFF01; c <= 0xFF5E; ++c) {
    std::optional<ConfusableMatch> m = table.Lookup(std::u32string(1, c), 0);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->replacement, std::string(1, static_cast<char>(c - 0xFEE0)));
  }
}

TEST(BuiltinTablesTest, CoversMathematicalAlphanumerics) {
  const ConfusableTable& table = *BuiltinTable("math_alphanumeric");
  // Bold, italic (with the U+210E hole), fraktur, double-struck and
  // monospace samples, checked against the Unicode code charts.
  const std::pair<char32_t, const char*> samples[] = {
      {0x1D400, "A"}, {0x1D41A, "a"}, {0x1D413, "T"}, {0x1D44E, "a"},
      {0x210E, "h"},  {0x1D504, "A"}, {0x212D, "C"},  {0x1D538, "A"},
      {0x2102, "C"},  {0x1D670, "A"}, {0x1D7CE, "0"}, {0x1D7FF, "9"},
      {0x1D6A4, "i"}};
  for (const auto& [cp, want] : samples) {
    std::optional<ConfusableMatch> m = table.Lookup(std::u32string(1, cp), 0);
    ASSERT_TRUE(m.has_value()) << std::hex << static_cast<uint32_t>(cp);
    EXPECT_EQ(m->replacement, want) << std::hex << static_cast<uint32_t>(cp);
  }
  for (const ConfusableTable::Entry& entry : table.entries()) {
    const char32_t c = entry.source[0];
    EXPECT_TRUE((c >= 0x1D400 && c <= 0x1D7FF) || (c >= 0x2100 && c <= 0x214F));
  }
}

TEST(BuiltinTablesTest, CoversEnclosedAlphanumericsAndLookalikes) {
  const ConfusableTable& table = *BuiltinConfusables();
  const std::pair<const char*, const char*> samples[] = {
      {"①", "1"}, {"⑳", "20"}, {"Ⓐ", "A"}, {"ⓩ", "z"}, {"⓪", "0"},
      {"⓫", "11"}, {"🅰", "A"}, {"🅰️", "A"}, {"а", "a"}, {"Т", "T"},
      {"ο", "o"}, {"é", "e"}, {"ﬆ", "st"}, {"ᴀ", "a"}, {"Ｔ", "T"}};
  for (const auto& [src, want] : samples) {
    const std::u32string s = testing::ToU32(src);
    std::optional<ConfusableMatch> m = table.Lookup(s, 0);
    ASSERT_TRUE(m.has_value()) << src;
    EXPECT_EQ(m->length, s.size()) << src;
    EXPECT_EQ(m->replacement, want) << src;
  }
}

TEST(CharClassSetTest, ClassifiesExamples) {
  const CharClassSet& set = *BuiltinCharClasses();
  EXPECT_EQ(set.Classify(0x200B), CharClass::kZeroWidth);
  EXPECT_EQ(set.Classify(U'.'), CharClass::kPunctuation);
  EXPECT_EQ(set.Classify(U'*'), CharClass::kPunctuation);
  EXPECT_EQ(set.Classify(U'a'), CharClass::kOther);
  EXPECT_EQ(set.Classify(U'7'), CharClass::kOther);
  EXPECT_EQ(set.Classify(U' '), CharClass::kWhitespace);
  EXPECT_EQ(set.Classify(0x3000), CharClass::kWhitespace);
  EXPECT_EQ(set.Classify(0x2019), CharClass::kPunctuation);
  EXPECT_EQ(set.Classify(0x1F600), CharClass::kOther);
  for (char32_t c : CharClassSet::kRequiredZeroWidth) {
    EXPECT_TRUE(set.IsZeroWidth(c));
  }
}

TEST(CharClassSetTest, BuiltinClassesAreDisjointAndCoverAsciiPunctuation) {
  const CharClassSet& set = *BuiltinCharClasses();
  const std::vector<char32_t> zw = set.Members(CharClass::kZeroWidth);
  const std::vector<char32_t> ws = set.Members(CharClass::kWhitespace);
  const std::vector<char32_t> punct = set.Members(CharClass::kPunctuation);
  EXPECT_FALSE(zw.empty());
  EXPECT_FALSE(ws.empty());
  std::vector<char32_t> all = zw;
  all.insert(all.end(), ws.begin(), ws.end());
  all.insert(all.end(), punct.begin(), punct.end());
  std::sort(all.begin(), all.end());
  EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
  for (char32_t c = 0x21; c < 0x7F; ++c) {
    EXPECT_EQ(set.IsPunctuation(c), !atn::IsAsciiAlnum(c)) << char(c);
  }
}

TEST(CharClassSetTest, RejectsOverlapAndMissingZeroWidthFloor) {
  const std::string floor =
      "zero_width\t200B..200D\nzero_width\t2060\nzero_width\tFEFF\n";
  absl::StatusOr<CharClassSet> set =
      CharClassSet::Parse(floor + "punctuation\t2E\n");
  ASSERT_TRUE(set.ok()) << set.status();
  EXPECT_TRUE(set->IsPunctuation(U'.'));
  EXPECT_FALSE(set->IsPunctuation(U','));

  set = CharClassSet::Parse(floor + "punctuation\t2E\nwhitespace\t2E\n");
  ASSERT_FALSE(set.ok());
  EXPECT_EQ(set.status().code(), absl::StatusCode::kAlreadyExists);

  set = CharClassSet::Parse("zero_width\t200B\n");
  ASSERT_FALSE(set.ok());
  EXPECT_EQ(set.status().code(), absl::StatusCode::kFailedPrecondition);

  set = CharClassSet::Parse(floor + "symbols\t2E\n");
  ASSERT_FALSE(set.ok());
  EXPECT_NE(set.status().message().find("line 4"), std::string::npos);
}

}  // namespace
}  // namespace atn
