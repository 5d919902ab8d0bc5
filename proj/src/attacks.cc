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
#include <memory>
#include <random>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "atn/mappings.h"
#include "atn/utf8.h"
#include "strings_internal.h"

namespace atn {
namespace {

constexpr std::array<std::string_view, 9> kKindNames = {
    "insert_punctuation_chars",      "insert_whitespace_chars",
    "insert_zero_width_chars",       "merge_words",
    "replace_fun_fonts",             "replace_similar_chars",
    "replace_similar_unicode_chars", "simulate_typos",
    "split_words"};

constexpr std::array<std::string_view, 3> kGranularityNames = {"char", "word",
                                                               "all"};

constexpr std::u32string_view kPunctuationPool = U".,;!?'";
constexpr std::u32string_view kZeroWidthPool =
    U"\u200B\u200C\u200D\u2060\uFEFF";

uint64_t SplitMix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// mt19937_64 with explicit conversions, so draws do not depend on the
// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  bool Bernoulli(double p) { return Uniform() < p; }
  size_t Below(size_t n) { return static_cast<size_t>(engine_() % n); }

 private:
  std::mt19937_64 engine_;
};

// A whitespace-delimited token; the core excludes leading and trailing
// punctuation.
struct Word {
  size_t begin = 0;
  size_t end = 0;
  size_t core_begin = 0;
  size_t core_end = 0;

  size_t core_size() const { return core_end - core_begin; }
};

std::vector<Word> FindWords(std::u32string_view text,
                            const CharClassSet& classes) {
  std::vector<Word> words;
  size_t i = 0;
  while (i < text.size()) {
    if (classes.IsWhitespace(text[i])) {
      ++i;
      continue;
    }
    Word w;
    w.begin = i;
    while (i < text.size() && !classes.IsWhitespace(text[i])) ++i;
    w.end = i;
    w.core_begin = w.begin;
    while (w.core_begin < w.end && classes.IsPunctuation(text[w.core_begin])) {
      ++w.core_begin;
    }
    w.core_end = w.end;
    while (w.core_end > w.core_begin &&
           classes.IsPunctuation(text[w.core_end - 1])) {
      --w.core_end;
    }
    words.push_back(w);
  }
  return words;
}

bool AllAsciiAlnum(std::u32string_view text, size_t begin, size_t end) {
  for (size_t i = begin; i < end; ++i) {
    if (!IsAsciiAlnum(text[i])) return false;
  }
  return true;
}

// Accumulates insertions before, and replacements of, input codepoints.
class Rewriter {
 public:
  explicit Rewriter(std::u32string_view text)
      : text_(text), prefix_(text.size() + 1), body_(text.size()) {
    for (size_t i = 0; i < text.size(); ++i) body_[i] = text[i];
  }

  void Insert(size_t pos, std::u32string_view s) { prefix_[pos] += s; }
  void Insert(size_t pos, char32_t c) { prefix_[pos].push_back(c); }
  void Replace(size_t pos, std::u32string s) { body_[pos] = std::move(s); }
  void Delete(size_t pos) { body_[pos].clear(); }
  const std::u32string& body(size_t pos) const { return body_[pos]; }

  std::u32string Build() const {
    std::u32string out;
    out.reserve(text_.size() * 2);
    for (size_t i = 0; i < body_.size(); ++i) {
      out += prefix_[i];
      out += body_[i];
    }
    out += prefix_.back();
    return out;
  }

 private:
  std::u32string_view text_;
  std::vector<std::u32string> prefix_;
  std::vector<std::u32string> body_;
};

// Picks interior boundaries of [begin, end) at `rate`, topping up to `floor`
// boundaries when the rate is positive.
std::vector<size_t> PickBoundaries(size_t begin, size_t end, double rate,
                                   size_t floor, Rng& rng) {
  std::vector<size_t> chosen;
  if (end - begin < 2 || rate <= 0) return chosen;
  std::vector<size_t> rest;
  for (size_t b = begin + 1; b < end; ++b) {
    (rng.Bernoulli(rate) ? chosen : rest).push_back(b);
  }
  while (chosen.size() < floor && !rest.empty()) {
    const size_t k = rng.Below(rest.size());
    chosen.push_back(rest[k]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::u32string InsertPunctuationChars(std::u32string_view text,
                                      const AttackParams& p, Rng& rng,
                                      const CharClassSet& classes) {
  Rewriter out(text);
  std::vector<Word> selected;
  bool any_interior = false;
  for (const Word& w : FindWords(text, classes)) {
    if (!rng.Bernoulli(p.aug_word_p)) continue;
    selected.push_back(w);
    // Pure alphanumeric cores only; a "www" head could turn the token into
    // something URL-like.
    const size_t n = w.core_size();
    if (n < 3 || !AllAsciiAlnum(text, w.core_begin, w.core_end)) continue;
    if (AsciiToLower(text[w.core_begin]) == U'w' &&
        AsciiToLower(text[w.core_begin + 1]) == U'w' &&
        AsciiToLower(text[w.core_begin + 2]) == U'w') {
      continue;
    }
    const char32_t word_mark = kPunctuationPool[rng.Below(kPunctuationPool.size())];
    for (size_t b : PickBoundaries(w.core_begin, w.core_end, p.aug_char_p, 2, rng)) {
      out.Insert(b, p.granularity == Granularity::kWord
                        ? word_mark
                        : kPunctuationPool[rng.Below(kPunctuationPool.size())]);
      any_interior = true;
    }
  }
  if (p.granularity == Granularity::kAll && any_interior) {
    auto run = [&] {
      const double u = rng.Uniform();
      const size_t len = u < 0.75 ? 1 : u < 0.9 ? 2 : 3;
      std::u32string marks;
      for (size_t k = 0; k < len; ++k) {
        marks.push_back(kPunctuationPool[rng.Below(kPunctuationPool.size())]);
      }
      return marks;
    };
    for (const Word& w : selected) {
      if (rng.Bernoulli(0.5)) out.Insert(w.begin, run());
      if (rng.Bernoulli(0.5)) out.Insert(w.end, run());
    }
  }
  return out.Build();
}

// Splits every selected all-alphanumeric token into single characters and
// widens the gaps around it so the pieces never run into a neighbour.
std::u32string InsertWhitespaceChars(std::u32string_view text,
                                     const AttackParams& p, Rng& rng,
                                     const CharClassSet& classes) {
  Rewriter out(text);
  for (const Word& w : FindWords(text, classes)) {
    if (!rng.Bernoulli(p.aug_word_p)) continue;
    if (w.end - w.begin < 2 || !AllAsciiAlnum(text, w.begin, w.end)) continue;
    for (size_t b = w.begin + 1; b < w.end; ++b) out.Insert(b, U' ');
    auto pad = [&] {
      return std::u32string(
          p.granularity == Granularity::kAll ? 1 + rng.Below(2) : 1, U' ');
    };
    if (w.begin > 0) out.Insert(w.begin, pad());
    if (w.end < text.size()) out.Insert(w.end, pad());
  }
  return out.Build();
}

std::u32string InsertZeroWidthChars(std::u32string_view text,
                                    const AttackParams& p, Rng& rng,
                                    const CharClassSet& classes) {
  Rewriter out(text);
  for (const Word& w : FindWords(text, classes)) {
    if (!rng.Bernoulli(p.aug_word_p)) continue;
    const char32_t word_mark = kZeroWidthPool[rng.Below(kZeroWidthPool.size())];
    auto mark = [&] {
      return p.granularity == Granularity::kWord
                 ? word_mark
                 : kZeroWidthPool[rng.Below(kZeroWidthPool.size())];
    };
    for (size_t b : PickBoundaries(w.begin, w.end, p.aug_char_p, 1, rng)) {
      out.Insert(b, mark());
    }
    if (p.granularity == Granularity::kAll) {
      if (rng.Bernoulli(0.5)) out.Insert(w.begin, mark());
      if (rng.Bernoulli(0.5)) out.Insert(w.end, mark());
    }
  }
  return out.Build();
}

std::u32string MergeWords(std::u32string_view text, const AttackParams& p,
                          Rng& rng, const CharClassSet& classes) {
  Rewriter out(text);
  const std::vector<Word> words = FindWords(text, classes);
  for (size_t k = 1; k < words.size(); ++k) {
    if (!rng.Bernoulli(p.aug_word_p)) continue;
    for (size_t i = words[k - 1].end; i < words[k].begin; ++i) out.Delete(i);
  }
  return out.Build();
}

// Styled alphabets; mapped only where the shipped tables reverse them.
struct Font {
  char32_t upper;
  char32_t lower;
  char32_t digit;  // 0 when the style has no digits
};

constexpr Font kFonts[] = {
    {0x1D400, 0x1D41A, 0x1D7CE},  // bold
    {0x1D434, 0x1D44E, 0},        // italic
    {0x1D468, 0x1D482, 0},        // bold italic
    {0x1D49C, 0x1D4B6, 0},        // script
    {0x1D4D0, 0x1D4EA, 0},        // bold script
    {0x1D504, 0x1D51E, 0},        // fraktur
    {0x1D538, 0x1D552, 0x1D7D8},  // double-struck
    {0x1D56C, 0x1D586, 0},        // bold fraktur
    {0x1D5A0, 0x1D5BA, 0x1D7E2},  // sans-serif
    {0x1D5D4, 0x1D5EE, 0x1D7EC},  // sans-serif bold
    {0x1D608, 0x1D622, 0},        // sans-serif italic
    {0x1D63C, 0x1D656, 0},        // sans-serif bold italic
    {0x1D670, 0x1D68A, 0x1D7F6},  // monospace
    {0xFF21, 0xFF41, 0xFF10},     // fullwidth
    {0x24B6, 0x24D0, 0},          // circled
};

// Reserved slots in the mathematical alphabets live in Letterlike Symbols.
constexpr std::pair<char32_t, char32_t> kFontHoles[] = {
    {0x1D455, 0x210E}, {0x1D49D, 0x212C}, {0x1D4A0, 0x2130},
    {0x1D4A1, 0x2131}, {0x1D4A3, 0x210B}, {0x1D4A4, 0x2110},
    {0x1D4A7, 0x2112}, {0x1D4A8, 0x2133}, {0x1D4AD, 0x211B},
    {0x1D4BA, 0x212F}, {0x1D4BC, 0x210A}, {0x1D4C4, 0x2134},
    {0x1D506, 0x212D}, {0x1D50B, 0x210C}, {0x1D50C, 0x2111},
    {0x1D515, 0x211C}, {0x1D51D, 0x2128}, {0x1D53A, 0x2102},
    {0x1D53F, 0x210D}, {0x1D545, 0x2115}, {0x1D547, 0x2119},
    {0x1D548, 0x211A}, {0x1D549, 0x211D}, {0x1D551, 0x2124},
};

using AsciiMap = std::array<char32_t, 128>;

bool Reverses(const ConfusableTable& table, char32_t cp, char32_t ascii) {
  const std::u32string s(1, cp);
  std::optional<ConfusableMatch> m = table.Lookup(s, 0);
  return m && m->length == 1 && m->replacement.size() == 1 &&
         static_cast<char32_t>(m->replacement[0]) == ascii;
}

const std::vector<AsciiMap>& FontMaps() {
  static const auto* maps = [] {
    auto* out = new std::vector<AsciiMap>;
    const ConfusableTable& table = *BuiltinConfusables();
    for (const Font& font : kFonts) {
      AsciiMap map{};
      auto put = [&](char32_t ascii, char32_t cp) {
        for (const auto& [slot, fill] : kFontHoles) {
          if (slot == cp) cp = fill;
        }
        if (Reverses(table, cp, ascii)) map[ascii] = cp;
      };
      for (char32_t i = 0; i < 26; ++i) {
        put(U'A' + i, font.upper + i);
        put(U'a' + i, font.lower + i);
      }
      if (font.digit != 0) {
        for (char32_t i = 0; i < 10; ++i) put(U'0' + i, font.digit + i);
      }
      out->push_back(map);
    }
    return out;
  }();
  return *maps;
}

// Which codepoints of a token a replacement kind touches.
//   char: any candidate in the text, each at aug_char_p.
//   word: candidates in selected words, each at aug_char_p, at least one.
//   all:  every candidate in selected words.
template <typename Candidate, typename Substitute>
std::u32string ReplaceChars(std::u32string_view text, const AttackParams& p,
                            Rng& rng, const CharClassSet& classes,
                            Candidate candidate, Substitute substitute) {
  Rewriter out(text);
  for (const Word& w : FindWords(text, classes)) {
    const bool selected = rng.Bernoulli(p.aug_word_p);
    std::vector<size_t> positions;
    for (size_t i = w.begin; i < w.end; ++i) {
      if (candidate(text[i])) positions.push_back(i);
    }
    if (positions.empty()) continue;
    std::vector<size_t> hit;
    switch (p.granularity) {
      case Granularity::kChar:
        for (size_t i : positions) {
          if (rng.Bernoulli(p.aug_char_p)) hit.push_back(i);
        }
        break;
      case Granularity::kWord:
        if (!selected) break;
        for (size_t i : positions) {
          if (rng.Bernoulli(p.aug_char_p)) hit.push_back(i);
        }
        if (hit.empty()) hit.push_back(positions[rng.Below(positions.size())]);
        break;
      case Granularity::kAll:
        if (selected) hit = positions;
        break;
    }
    for (size_t i : hit) out.Replace(i, std::u32string(1, substitute(text[i])));
  }
  return out.Build();
}

std::u32string ReplaceFunFonts(std::u32string_view text, const AttackParams& p,
                               Rng& rng, const CharClassSet& classes) {
  const std::vector<AsciiMap>& fonts = FontMaps();
  const size_t text_font = rng.Below(fonts.size());
  Rewriter out(text);
  for (const Word& w : FindWords(text, classes)) {
    const bool selected = rng.Bernoulli(p.aug_word_p);
    const AsciiMap& font = fonts[p.vary_fonts ? rng.Below(fonts.size()) : text_font];
    for (size_t i = w.begin; i < w.end; ++i) {
      const char32_t c = text[i];
      if (c >= 128 || font[c] == 0) continue;
      bool apply = false;
      switch (p.granularity) {
        case Granularity::kChar:
          apply = IsAsciiAlpha(c) && rng.Bernoulli(p.aug_char_p);
          break;
        case Granularity::kWord:
          apply = selected && IsAsciiAlpha(c);
          break;
        case Granularity::kAll:
          apply = selected;
          break;
      }
      if (apply) out.Replace(i, std::u32string(1, font[c]));
    }
  }
  return out.Build();
}

const std::vector<std::u32string>& SimilarAscii() {
  static const auto* table = [] {
    auto* t = new std::vector<std::u32string>(128);
    const std::pair<char, std::u32string_view> rows[] = {
        {'a', U"@4"}, {'b', U"8"},  {'e', U"3"},  {'g', U"96"}, {'i', U"!1"},
        {'l', U"1|"}, {'o', U"0"},  {'s', U"5$"}, {'t', U"7+"}, {'z', U"2"},
        {'A', U"4@"}, {'B', U"8"},  {'E', U"3"},  {'G', U"6"},  {'I', U"1!"},
        {'L', U"1|"}, {'O', U"0"},  {'S', U"5$"}, {'T', U"7+"}, {'Z', U"2"},
    };
    for (const auto& [c, subs] : rows) (*t)[c] = subs;
    return t;
  }();
  return *table;
}

// Inverse of the shipped confusable tables: single codepoints that map back
// to exactly one ASCII letter or digit.
const std::vector<std::u32string>& SimilarUnicode() {
  static const auto* table = [] {
    auto* t = new std::vector<std::u32string>(128);
    const CharClassSet& classes = *BuiltinCharClasses();
    const ConfusableTable& confusables = *BuiltinConfusables();
    for (const ConfusableTable::Entry& e : confusables.entries()) {
      if (e.source.size() != 1 || e.replacement.size() != 1) continue;
      const char32_t ascii = static_cast<unsigned char>(e.replacement[0]);
      if (!IsAsciiAlnum(ascii)) continue;
      if (classes.Classify(e.source[0]) != CharClass::kOther) continue;
      if (!Reverses(confusables, e.source[0], ascii)) continue;
      (*t)[ascii].push_back(e.source[0]);
    }
    return t;
  }();
  return *table;
}

std::u32string ReplaceFromTable(std::u32string_view text, const AttackParams& p,
                                Rng& rng, const CharClassSet& classes,
                                const std::vector<std::u32string>& table) {
  return ReplaceChars(
      text, p, rng, classes,
      [&](char32_t c) { return c < 128 && !table[c].empty(); },
      [&](char32_t c) { return table[c][rng.Below(table[c].size())]; });
}

std::u32string_view QwertyNeighbours(char32_t lower) {
  static constexpr std::u32string_view kRows[26] = {
      U"qwsz", U"vghn", U"xdfv", U"serfcx", U"wrsd", U"drtgvc", U"ftyhbv",
      U"gyujnb", U"uojk", U"huikmn", U"jiolm", U"kop", U"njk", U"bhjm",
      U"ipkl", U"ol", U"wa", U"etdf", U"awedxz", U"ryfg", U"yihj", U"cfgb",
      U"qeas", U"zsdc", U"tugh", U"asx"};
  return kRows[lower - U'a'];
}

std::u32string SimulateTypos(std::u32string_view text, const AttackParams& p,
                             Rng& rng, const CharClassSet& classes) {
  Rewriter out(text);
  for (const Word& w : FindWords(text, classes)) {
    if (!rng.Bernoulli(p.aug_word_p)) continue;
    if (w.core_size() < 2 || !rng.Bernoulli(p.aug_p)) continue;
    std::vector<size_t> letters;
    for (size_t i = w.core_begin; i < w.core_end; ++i) {
      if (IsAsciiAlpha(text[i])) letters.push_back(i);
    }
    std::vector<size_t> swaps;
    for (size_t i = w.core_begin; i + 1 < w.core_end; ++i) {
      if (text[i] != text[i + 1]) swaps.push_back(i);
    }
    size_t op = rng.Below(4);
    if (op == 0 && letters.empty()) op = 3;
    if (op == 1 && swaps.empty()) op = 3;
    switch (op) {
      case 0: {  // adjacent-key substitution
        const size_t i = letters[rng.Below(letters.size())];
        const char32_t c = text[i];
        const std::u32string_view near = QwertyNeighbours(AsciiToLower(c));
        char32_t sub = near[rng.Below(near.size())];
        if (c != AsciiToLower(c)) sub = AsciiToUpper(sub);
        out.Replace(i, std::u32string(1, sub));
        break;
      }
      case 1: {  // transposition
        const size_t i = swaps[rng.Below(swaps.size())];
        out.Replace(i, std::u32string(1, text[i + 1]));
        out.Replace(i + 1, std::u32string(1, text[i]));
        break;
      }
      case 2:  // deletion
        out.Delete(w.core_begin + rng.Below(w.core_size()));
        break;
      default: {  // duplication
        const size_t i = w.core_begin + rng.Below(w.core_size());
        out.Insert(i, text[i]);
        break;
      }
    }
  }
  return out.Build();
}

std::u32string SplitWords(std::u32string_view text, const AttackParams& p,
                          Rng& rng, const CharClassSet& classes) {
  Rewriter out(text);
  for (const Word& w : FindWords(text, classes)) {
    if (!rng.Bernoulli(p.aug_word_p)) continue;
    if (w.core_size() < 2 || !rng.Bernoulli(p.aug_p)) continue;
    out.Insert(w.core_begin + 1 + rng.Below(w.core_size() - 1), U' ');
  }
  return out.Build();
}

}  // namespace

std::string_view AttackKindName(AttackKind kind) {
  return kKindNames[static_cast<size_t>(kind)];
}

std::string AttackKindList() {
  std::vector<std::string> names(kKindNames.begin(), kKindNames.end());
  return absl::StrJoin(names, ", ");
}

absl::StatusOr<AttackKind> ParseAttackKind(std::string_view name) {
  for (AttackKind kind : kAllAttackKinds) {
    if (AttackKindName(kind) == name) return kind;
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown attack kind '", AV(name), "' (expected one of ",
      AttackKindList(), ")"));
}

std::string_view GranularityName(Granularity g) {
  return kGranularityNames[static_cast<size_t>(g)];
}

absl::StatusOr<Granularity> ParseGranularity(std::string_view name) {
  for (size_t i = 0; i < kGranularityNames.size(); ++i) {
    if (kGranularityNames[i] == name) return static_cast<Granularity>(i);
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown granularity '", AV(name), "' (expected char, word, all)"));
}

absl::Status ValidateParams(const AttackParams& params) {
  const std::pair<const char*, double> fields[] = {
      {"aug_p", params.aug_p},
      {"aug_word_p", params.aug_word_p},
      {"aug_char_p", params.aug_char_p}};
  for (const auto& [name, value] : fields) {
    if (!(value >= 0.0 && value <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat(name, " must be in [0, 1], got ", value));
    }
  }
  return absl::OkStatus();
}

AttackParams SampleParams(uint64_t seed) {
  Rng rng(seed);
  AttackParams p;
  p.aug_p = rng.Uniform(kAugPMin, kAugPMax);
  p.aug_word_p = rng.Uniform(kAugWordPMin, kAugWordPMax);
  p.aug_char_p = rng.Uniform(kAugCharPMin, kAugCharPMax);
  p.granularity = static_cast<Granularity>(rng.Below(3));
  p.vary_fonts = rng.Bernoulli(0.5);
  return p;
}

uint64_t EntropySeed() {
  std::random_device rd;
  const uint64_t hi = rd();
  return ((hi << 32) | rd()) & ((uint64_t{1} << 53) - 1);
}

uint64_t DeriveSeed(uint64_t master_seed, uint64_t record_index,
                    AttackKind kind) {
  uint64_t h = SplitMix64(master_seed);
  h = SplitMix64(h ^ record_index);
  return SplitMix64(h ^ (static_cast<uint64_t>(kind) + 1));
}

AttackSpec SpecForRecord(uint64_t master_seed, uint64_t record_index,
                         AttackKind kind) {
  AttackSpec spec;
  spec.kind = kind;
  spec.seed = DeriveSeed(master_seed, record_index, kind);
  spec.params = SampleParams(spec.seed);
  return spec;
}

std::u32string ApplyAttack(std::u32string_view text, const AttackSpec& spec) {
  const CharClassSet& classes = *BuiltinCharClasses();
  // Position draws use a stream separate from SampleParams.
  Rng rng(SplitMix64(spec.seed ^ 0xA77AC4ULL));
  const AttackParams& p = spec.params;
  switch (spec.kind) {
    case AttackKind::kInsertPunctuationChars:
      return InsertPunctuationChars(text, p, rng, classes);
    case AttackKind::kInsertWhitespaceChars:
      return InsertWhitespaceChars(text, p, rng, classes);
    case AttackKind::kInsertZeroWidthChars:
      return InsertZeroWidthChars(text, p, rng, classes);
    case AttackKind::kMergeWords:
      return MergeWords(text, p, rng, classes);
    case AttackKind::kReplaceFunFonts:
      return ReplaceFunFonts(text, p, rng, classes);
    case AttackKind::kReplaceSimilarChars:
      return ReplaceFromTable(text, p, rng, classes, SimilarAscii());
    case AttackKind::kReplaceSimilarUnicodeChars:
      return ReplaceFromTable(text, p, rng, classes, SimilarUnicode());
    case AttackKind::kSimulateTypos:
      return SimulateTypos(text, p, rng, classes);
    case AttackKind::kSplitWords:
      return SplitWords(text, p, rng, classes);
  }
  return std::u32string(text);
}

absl::StatusOr<std::string> ApplyAttack(std::string_view text,
                                        const AttackSpec& spec) {
  if (absl::Status s = ValidateParams(spec.params); !s.ok()) return s;
  absl::StatusOr<std::u32string> decoded = DecodeUtf8(text);
  if (!decoded.ok()) return decoded.status();
  return EncodeUtf8(ApplyAttack(*decoded, spec));
}

}  // namespace atn
