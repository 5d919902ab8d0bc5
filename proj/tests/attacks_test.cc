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

#include "atn/attacks.h"

#include <algorithm>
#include <random>
#include <set>

#include "absl/status/status.h"
#include "atn/mappings.h"
#include "atn/normalizer.h"
#include "atn/utf8.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace atn {
namespace {

using ::atn::testing::EditDistance;
using ::atn::testing::RandomCleanSentence;
using ::atn::testing::ToU32;

constexpr std::string_view kSentence = "This is augmented text";

std::string Attack(std::string_view text, AttackKind kind,
                   const AttackParams& params, uint64_t seed) {
  absl::StatusOr<std::string> out = ApplyAttack(text, {kind, params, seed});
  EXPECT_TRUE(out.ok()) << out.status();
  return out.ok() ? *out : "";
}

std::string Normalize(std::string_view text) {
  static const Normalizer* n =
      new Normalizer(*Normalizer::Create(NormalizerConfig::Default()));
  return n->Normalize(text)->output;
}

std::u32string Without(std::u32string_view s, std::u32string_view drop) {
  std::u32string out;
  for (char32_t c : s) {
    if (drop.find(c) == std::u32string_view::npos) out.push_back(c);
  }
  return out;
}

std::vector<std::u32string> SplitOnSpace(std::u32string_view s) {
  std::vector<std::u32string> out(1);
  for (char32_t c : s) {
    if (c == U' ') {
      out.emplace_back();
    } else {
      out.back().push_back(c);
    }
  }
  return out;
}

std::vector<std::string> CleanCorpus(size_t n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> out;
  while (out.size() < n) {
    std::string s = RandomCleanSentence(rng);
    if (Normalize(s) == s) out.push_back(std::move(s));
  }
  return out;
}

TEST(AttackKindTest, NamesRoundTrip) {
  std::set<std::string_view> names;
  for (AttackKind kind : kAllAttackKinds) {
    EXPECT_EQ(*ParseAttackKind(AttackKindName(kind)), kind);
    names.insert(AttackKindName(kind));
  }
  EXPECT_EQ(names.size(), 9u);
  absl::StatusOr<AttackKind> bogus = ParseAttackKind("bogus");
  ASSERT_FALSE(bogus.ok());
  EXPECT_EQ(bogus.status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_NE(bogus.status().message().find("split_words"), std::string::npos);
  EXPECT_FALSE(ParseAttackKind("Merge_Words").ok());
  EXPECT_EQ(*ParseGranularity("all"), Granularity::kAll);
  EXPECT_FALSE(ParseGranularity("line").ok());
}

TEST(SampleParamsTest, RangesAndDeterminism) {
  double sum = 0;
  std::set<Granularity> seen;
  int vary = 0;
  constexpr int kSeeds = 10000;
  for (uint64_t seed = 0; seed < kSeeds; ++seed) {
    const AttackParams p = SampleParams(seed);
    EXPECT_GE(p.aug_p, 0.3);
    EXPECT_LE(p.aug_p, 1.0);
    EXPECT_GE(p.aug_word_p, 0.3);
    EXPECT_LE(p.aug_word_p, 1.0);
    EXPECT_GE(p.aug_char_p, 0.1);
    EXPECT_LE(p.aug_char_p, 0.4);
    EXPECT_EQ(SampleParams(seed), p);
    sum += p.aug_p;
    seen.insert(p.granularity);
    vary += p.vary_fonts;
  }
  EXPECT_NEAR(sum / kSeeds, 0.65, 0.02);
  EXPECT_EQ(seen.size(), 3u);
  EXPECT_NEAR(vary / static_cast<double>(kSeeds), 0.5, 0.03);
}

TEST(SampleParamsTest, ValidateRejectsOutOfUnitRange) {
  AttackParams p;
  EXPECT_TRUE(ValidateParams(p).ok());
  p.aug_char_p = 0;
  p.aug_word_p = 0;
  EXPECT_TRUE(ValidateParams(p).ok());
  p.aug_p = 1.5;
  EXPECT_FALSE(ValidateParams(p).ok());
  p.aug_p = std::nan("");
  EXPECT_FALSE(ValidateParams(p).ok());
  EXPECT_FALSE(ApplyAttack(kSentence, {AttackKind::kMergeWords, p, 1}).ok());
}

TEST(DeriveSeedTest, DependsOnEveryInput) {
  const uint64_t base = DeriveSeed(7, 0, AttackKind::kMergeWords);
  EXPECT_EQ(base, DeriveSeed(7, 0, AttackKind::kMergeWords));
  EXPECT_NE(base, DeriveSeed(8, 0, AttackKind::kMergeWords));
  EXPECT_NE(base, DeriveSeed(7, 1, AttackKind::kMergeWords));
  EXPECT_NE(base, DeriveSeed(7, 0, AttackKind::kSplitWords));
  const AttackSpec spec = SpecForRecord(7, 3, AttackKind::kSplitWords);
  EXPECT_EQ(spec.seed, DeriveSeed(7, 3, AttackKind::kSplitWords));
  EXPECT_EQ(spec.params, SampleParams(spec.seed));
}

TEST(ApplyAttackTest, ReproducesGoldenExamples) {
  AttackParams p;
  p.aug_word_p = 0.3;
  EXPECT_EQ(Attack(kSentence, AttackKind::kMergeWords, p, 1),
            "Thisis augmented text");

  p = AttackParams();
  p.granularity = Granularity::kChar;
  p.aug_char_p = 0.1;
  p.aug_word_p = 0.5;
  EXPECT_EQ(Attack(kSentence, AttackKind::kReplaceSimilarChars, p, 3556),
            "Th!s is @ugmented tex7");

  p = AttackParams();
  p.granularity = Granularity::kAll;
  p.aug_word_p = 0.5;
  EXPECT_EQ(Attack(kSentence, AttackKind::kInsertWhitespaceChars, p, 113),
            "T h i s  is  a u g m e n t e d   text");
}

TEST(ApplyAttackTest, ZeroRatesAreIdentity) {
  AttackParams p;
  p.aug_word_p = 0;
  p.aug_char_p = 0;
  for (AttackKind kind : kAllAttackKinds) {
    for (Granularity g : {Granularity::kChar, Granularity::kWord, Granularity::kAll}) {
      p.granularity = g;
      for (uint64_t seed = 0; seed < 20; ++seed) {
        EXPECT_EQ(Attack(kSentence, kind, p, seed), kSentence)
            << AttackKindName(kind) << " " << GranularityName(g);
      }
    }
  }
}

TEST(ApplyAttackTest, EmptyTextAndInvalidUtf8) {
  for (AttackKind kind : kAllAttackKinds) {
    EXPECT_EQ(Attack("", kind, AttackParams(), 5), "");
  }
  EXPECT_FALSE(ApplyAttack(std::string_view("a\xC0"),
                           {AttackKind::kSplitWords, AttackParams(), 1})
                   .ok());
}

TEST(ApplyAttackTest, DeterministicPerSeedAndVariesAcrossSeeds) {
  for (AttackKind kind : kAllAttackKinds) {
    std::set<std::string> outputs;
    for (uint64_t seed = 0; seed < 50; ++seed) {
      const AttackSpec spec = SpecForRecord(11, seed, kind);
      const std::string a = *ApplyAttack(kSentence, spec);
      EXPECT_EQ(a, *ApplyAttack(kSentence, spec));
      outputs.insert(a);
    }
    EXPECT_GT(outputs.size(), 3u) << AttackKindName(kind);
  }
}

TEST(ApplyAttackTest, LengthMonotonicity) {
  const std::vector<std::string> corpus = CleanCorpus(300, 1);
  for (size_t i = 0; i < corpus.size(); ++i) {
    const std::u32string x = ToU32(corpus[i]);
    for (AttackKind kind :
         {AttackKind::kInsertPunctuationChars, AttackKind::kInsertWhitespaceChars,
          AttackKind::kInsertZeroWidthChars, AttackKind::kSplitWords}) {
      EXPECT_GE(ApplyAttack(x, SpecForRecord(2, i, kind)).size(), x.size());
    }
    EXPECT_LE(ApplyAttack(x, SpecForRecord(2, i, AttackKind::kMergeWords)).size(),
              x.size());
  }
}

TEST(ApplyAttackTest, InsertionsOnlyAddTheirPool) {
  const std::vector<std::string> corpus = CleanCorpus(300, 2);
  const std::u32string punct = U".,;!?'";
  const std::u32string zero_width = U"\u200B\u200C\u200D\u2060\uFEFF";
  for (size_t i = 0; i < corpus.size(); ++i) {
    const std::u32string x = ToU32(corpus[i]);
    const std::u32string p =
        ApplyAttack(x, SpecForRecord(3, i, AttackKind::kInsertPunctuationChars));
    EXPECT_EQ(Without(p, punct), Without(x, punct));
    const std::u32string w =
        ApplyAttack(x, SpecForRecord(3, i, AttackKind::kInsertWhitespaceChars));
    EXPECT_EQ(Without(w, U" "), Without(x, U" "));
    const std::u32string z =
        ApplyAttack(x, SpecForRecord(3, i, AttackKind::kInsertZeroWidthChars));
    EXPECT_EQ(Without(z, zero_width), x);
    const std::u32string s =
        ApplyAttack(x, SpecForRecord(3, i, AttackKind::kSplitWords));
    EXPECT_EQ(Without(s, U" "), Without(x, U" "));
    const std::u32string m =
        ApplyAttack(x, SpecForRecord(3, i, AttackKind::kMergeWords));
    EXPECT_EQ(Without(m, U" "), Without(x, U" "));
  }
}

TEST(ApplyAttackTest, SimilarCharsSubstituteInPlace) {
  const std::vector<std::string> corpus = CleanCorpus(200, 3);
  for (size_t i = 0; i < corpus.size(); ++i) {
    const std::u32string x = ToU32(corpus[i]);
    const std::u32string y =
        ApplyAttack(x, SpecForRecord(4, i, AttackKind::kReplaceSimilarChars));
    ASSERT_EQ(y.size(), x.size());
    for (size_t k = 0; k < x.size(); ++k) {
      if (x[k] != y[k]) {
        EXPECT_NE(std::u32string_view(U"@4!1|0583$7+926").find(y[k]),
                  std::u32string_view::npos);
      }
    }
  }
}

TEST(ApplyAttackTest, TyposChangeOneWordByOneOperation) {
  const std::vector<std::string> corpus = CleanCorpus(200, 4);
  AttackParams p;
  p.aug_p = 1;
  p.aug_word_p = 1;
  for (size_t i = 0; i < corpus.size(); ++i) {
    const std::u32string x = ToU32(corpus[i]);
    const std::u32string y = ApplyAttack(x, {AttackKind::kSimulateTypos, p, i});
    // Whitespace is never touched, so words line up one to one.
    const std::vector<std::u32string> xs = SplitOnSpace(x);
    const std::vector<std::u32string> ys = SplitOnSpace(y);
    ASSERT_EQ(xs.size(), ys.size());
    for (size_t k = 0; k < xs.size(); ++k) {
      EXPECT_LE(EditDistance(xs[k], ys[k]), 2u);
      const size_t alnum = static_cast<size_t>(
          std::count_if(xs[k].begin(), xs[k].end(), IsAsciiAlnum));
      if (alnum >= 2 && xs[k].find_first_of(U"'-") == std::u32string::npos) {
        EXPECT_NE(xs[k], ys[k]) << EncodeUtf8(x);
      }
    }
  }
}

TEST(ApplyAttackTest, SplitWordsInsertsOneInteriorSpace) {
  AttackParams p;
  p.aug_p = 1;
  p.aug_word_p = 1;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const std::string y = Attack("augmented, text.", AttackKind::kSplitWords, p, seed);
    ASSERT_EQ(y.size(), 18u);
    EXPECT_NE(y.substr(0, 10).find_first_of(' '), 0u);
    EXPECT_EQ(y.find(" ,"), std::string::npos);
    EXPECT_EQ(y.find(" ."), std::string::npos);
  }
}

TEST(ApplyAttackTest, FontsCoverEveryLetter) {
  const std::string letters =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZ abcdefghijklmnopqrstuvwxyz";
  AttackParams p;
  p.aug_word_p = 1;
  p.granularity = Granularity::kWord;
  std::set<std::string> fonts;
  for (uint64_t seed = 0; seed < 300; ++seed) {
    const std::string y = Attack(letters, AttackKind::kReplaceFunFonts, p, seed);
    for (char c : y) EXPECT_FALSE(IsAsciiAlpha(static_cast<unsigned char>(c))) << y;
    EXPECT_EQ(Normalize(y), letters);
    fonts.insert(y);
  }
  EXPECT_EQ(fonts.size(), 15u);
}

TEST(ApplyAttackTest, FullyReversibleKindsRoundTrip) {
  const std::vector<std::string> corpus = CleanCorpus(500, 5);
  for (size_t i = 0; i < corpus.size(); ++i) {
    const std::string& x = corpus[i];
    for (AttackKind kind : {AttackKind::kInsertZeroWidthChars,
                            AttackKind::kReplaceFunFonts,
                            AttackKind::kReplaceSimilarUnicodeChars}) {
      AttackSpec spec = SpecForRecord(6, i, kind);
      for (bool vary : {false, true}) {
        spec.params.vary_fonts = vary;
        const std::string y = *ApplyAttack(x, spec);
        EXPECT_EQ(Normalize(y), x) << AttackKindName(kind) << ": " << y;
      }
    }
  }
}

TEST(ApplyAttackTest, InsertionAttacksAreMostlyRepaired) {
  const std::vector<std::string> corpus = CleanCorpus(500, 6);
  for (AttackKind kind : {AttackKind::kInsertPunctuationChars,
                          AttackKind::kInsertWhitespaceChars}) {
    size_t attacked_total = 0;
    size_t residual_total = 0;
    for (size_t i = 0; i < corpus.size(); ++i) {
      const std::u32string x = ToU32(corpus[i]);
      const std::string y = *ApplyAttack(corpus[i], SpecForRecord(8, i, kind));
      const size_t attacked = EditDistance(ToU32(y), x);
      const size_t residual = EditDistance(ToU32(Normalize(y)), x);
      if (attacked > 0) EXPECT_LT(residual, attacked) << y;
      attacked_total += attacked;
      residual_total += residual;
    }
    EXPECT_GT(attacked_total, 0u);
    EXPECT_LE(residual_total * 5, attacked_total) << AttackKindName(kind);
  }
}

TEST(ApplyAttackTest, UnicodeSubstitutesAreTableReversible) {
  const ConfusableTable& table = *BuiltinConfusables();
  AttackParams p;
  p.aug_word_p = 1;
  p.granularity = Granularity::kAll;
  const std::string text = "abcdefghijklmnopqrstuvwxyz ABCDEFGHIJKLMNOPQRSTUVWXYZ 0123456789";
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const std::u32string y = ToU32(
        Attack(text, AttackKind::kReplaceSimilarUnicodeChars, p, seed));
    for (size_t k = 0; k < y.size(); ++k) {
      if (y[k] < 0x80) continue;
      std::optional<ConfusableMatch> m = table.Lookup(y, k);
      ASSERT_TRUE(m.has_value());
      EXPECT_EQ(m->length, 1u);
    }
  }
}

}  // namespace
}  // namespace atn
