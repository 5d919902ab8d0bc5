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

#include "atn/normalizer.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <tuple>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "atn/builtin_data.h"
#include "atn/file_util.h"
#include "atn/utf8.h"
#include "strings_internal.h"

namespace atn {
namespace {

struct TokenSpan {
  size_t begin;
  size_t end;
};

std::vector<TokenSpan> SplitTokens(std::u32string_view text,
                                   const CharClassSet& classes) {
  std::vector<TokenSpan> tokens;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && classes.IsWhitespace(text[i])) ++i;
    if (i == text.size()) break;
    const size_t begin = i;
    while (i < text.size() && !classes.IsWhitespace(text[i])) ++i;
    tokens.push_back({begin, i});
  }
  return tokens;
}

std::vector<SpanEdit> ZeroWidthEdits(std::u32string_view text,
                                     const CharClassSet& classes) {
  std::vector<SpanEdit> edits;
  size_t i = 0;
  while (i < text.size()) {
    if (!classes.IsZeroWidth(text[i])) {
      ++i;
      continue;
    }
    const size_t begin = i;
    while (i < text.size() && classes.IsZeroWidth(text[i])) ++i;
    edits.push_back({begin, i, {}});
  }
  return edits;
}

std::vector<SpanEdit> ConfusableEdits(std::u32string_view text,
                                      const ConfusableTable& table) {
  std::vector<SpanEdit> edits;
  size_t i = 0;
  while (i < text.size()) {
    // Sources never contain ASCII.
    if (text[i] < 0x80) {
      ++i;
      continue;
    }
    const std::optional<ConfusableMatch> match = table.Lookup(text, i);
    if (!match) {
      ++i;
      continue;
    }
    edits.push_back({i, i + match->length,
                     std::u32string(match->replacement.begin(),
                                    match->replacement.end())});
    i += match->length;
  }
  return edits;
}

bool StartsWithAsciiCaseInsensitive(std::u32string_view s,
                                    std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (size_t i = 0; i < prefix.size(); ++i) {
    if (AsciiToLower(s[i]) != static_cast<char32_t>(prefix[i])) return false;
  }
  return true;
}

bool MatchesDomainPath(std::u32string_view token) {
  const size_t slash = token.find(U'/');
  if (slash == std::u32string_view::npos) return false;
  const std::u32string_view host = token.substr(0, slash);
  size_t labels = 0;
  size_t start = 0;
  std::u32string_view last;
  while (true) {
    const size_t dot = host.find(U'.', start);
    const std::u32string_view label = host.substr(
        start, dot == std::u32string_view::npos ? std::u32string_view::npos
                                                : dot - start);
    if (label.empty() || !std::all_of(label.begin(), label.end(), IsAsciiAlnum)) {
      return false;
    }
    ++labels;
    last = label;
    if (dot == std::u32string_view::npos) break;
    start = dot + 1;
  }
  return labels >= 2 && last.size() >= 2 && last.size() <= 6 &&
         std::all_of(last.begin(), last.end(), IsAsciiAlpha);
}

bool IsUrlLikeCore(std::u32string_view token) {
  return token.find(U"://") != std::u32string_view::npos ||
         StartsWithAsciiCaseInsensitive(token, "www.") ||
         MatchesDomainPath(token);
}

std::vector<SpanEdit> CollapseEdits(std::u32string_view text,
                                    const CharClassSet& classes,
                                    const CollapseOptions& options) {
  std::vector<SpanEdit> edits;
  const std::vector<TokenSpan> tokens = SplitTokens(text, classes);
  if (tokens.empty()) {
    if (!text.empty()) edits.push_back({0, text.size(), {}});
    return edits;
  }

  // Per-token interior punctuation removal. Token edits are kept apart from
  // gap edits and interleaved at the end.
  std::vector<std::vector<SpanEdit>> token_edits(tokens.size());
  std::vector<bool> single(tokens.size(), false);
  for (size_t k = 0; k < tokens.size(); ++k) {
    const auto [begin, end] = tokens[k];
    size_t lead = begin;
    while (lead < end && classes.IsPunctuation(text[lead])) ++lead;
    size_t trail = end;
    while (trail > lead && classes.IsPunctuation(text[trail - 1])) --trail;

    size_t interior = 0;
    for (size_t i = lead; i < trail; ++i) {
      if (classes.IsPunctuation(text[i])) ++interior;
    }
    const bool collapse =
        interior > 0 &&
        interior >= static_cast<size_t>(options.interior_punct_threshold) &&
        !(options.url_detection &&
          IsUrlLike(text.substr(begin, end - begin), classes));
    if (collapse) {
      size_t i = lead;
      while (i < trail) {
        if (!classes.IsPunctuation(text[i])) {
          ++i;
          continue;
        }
        const size_t run = i;
        while (i < trail && classes.IsPunctuation(text[i])) ++i;
        token_edits[k].push_back({run, i, {}});
      }
    }
    single[k] = !collapse && end - begin == 1 && IsAsciiAlnum(text[begin]);
  }

  // Gap k sits before token k. A gap joins two single-character tokens
  // unless it is two or more codepoints wide.
  auto gap_width = [&](size_t k) { return tokens[k].begin - tokens[k - 1].end; };
  std::vector<bool> joined(tokens.size(), false);
  for (size_t k = 1; k < tokens.size(); ++k) {
    joined[k] = single[k - 1] && single[k] && gap_width(k) < 2;
  }
  auto single_after_join = [&](size_t k) {
    return single[k] && !joined[k] && (k + 1 == tokens.size() || !joined[k + 1]);
  };

  if (tokens.front().begin > 0) edits.push_back({0, tokens.front().begin, {}});
  for (size_t k = 0; k < tokens.size(); ++k) {
    if (k > 0) {
      const size_t gap_begin = tokens[k - 1].end;
      const size_t gap_end = tokens[k].begin;
      std::u32string_view want = U" ";
      if (joined[k]) {
        want = U"";
      } else if (single_after_join(k - 1) && single_after_join(k)) {
        want = U"  ";
      }
      if (text.substr(gap_begin, gap_end - gap_begin) != want) {
        edits.push_back({gap_begin, gap_end, std::u32string(want)});
      }
    }
    for (SpanEdit& e : token_edits[k]) edits.push_back(std::move(e));
  }
  if (tokens.back().end < text.size()) {
    edits.push_back({tokens.back().end, text.size(), {}});
  }
  return edits;
}

std::vector<SpanEdit> CensorshipEdits(std::u32string_view text,
                                      const CharClassSet& classes,
                                      const CensorLexicon& lexicon) {
  std::vector<SpanEdit> edits;
  if (lexicon.empty()) return edits;
  for (const auto [begin, end] : SplitTokens(text, classes)) {
    size_t lead = begin;
    while (lead < end && classes.IsPunctuation(text[lead])) ++lead;
    if (lead == end || !IsAsciiAlpha(text[lead])) continue;
    const std::vector<int>* candidates =
        lexicon.WordsStartingWith(AsciiToLower(text[lead]));
    if (candidates == nullptr) continue;

    // Rank: more literal letter matches, then an exact-length match, then
    // the shorter word; ties go to the earlier lexicon entry.
    int best = -1;
    std::tuple<size_t, bool, int> best_rank;
    for (int idx : *candidates) {
      const std::string& word = lexicon.words()[idx];
      if (word.size() > end - lead) continue;
      size_t letters = 0;
      size_t masks = 0;
      bool ok = true;
      for (size_t i = 1; i < word.size() && ok; ++i) {
        const char32_t c = text[lead + i];
        if (AsciiToLower(c) == static_cast<char32_t>(word[i])) {
          ++letters;
        } else if (classes.IsPunctuation(c)) {
          ++masks;
        } else {
          ok = false;
        }
      }
      if (!ok || masks == 0) continue;
      for (size_t i = lead + word.size(); i < end && ok; ++i) {
        ok = classes.IsPunctuation(text[i]);
      }
      if (!ok) continue;
      const std::tuple<size_t, bool, int> rank = {
          letters, lead + word.size() == end, -static_cast<int>(word.size())};
      if (best < 0 || rank > best_rank) {
        best = idx;
        best_rank = rank;
      }
    }
    if (best < 0) continue;
    const std::string& word = lexicon.words()[best];
    std::u32string replacement(word.begin(), word.end());
    if (text[lead] >= U'A' && text[lead] <= U'Z') {
      replacement[0] = AsciiToUpper(replacement[0]);
    }
    edits.push_back({lead, lead + word.size(), std::move(replacement)});
  }
  return edits;
}

PassOutput MakeOutput(std::u32string_view text, std::vector<SpanEdit> edits) {
  PassOutput out;
  out.text = ApplySpanEdits(text, edits);
  out.edits = std::move(edits);
  return out;
}

}  // namespace

absl::StatusOr<CensorLexicon> CensorLexicon::Create(
    std::vector<std::string> words) {
  CensorLexicon lexicon;
  for (std::string& word : words) {
    if (word.size() < 3) {
      return absl::InvalidArgumentError(
          absl::StrCat("lexicon word '", word, "' is shorter than 3 letters"));
    }
    if (!std::all_of(word.begin(), word.end(),
                     [](char c) { return c >= 'a' && c <= 'z'; })) {
      return absl::InvalidArgumentError(absl::StrCat(
          "lexicon word '", word, "' is not lowercase ASCII letters"));
    }
    if (std::find(lexicon.words_.begin(), lexicon.words_.end(), word) !=
        lexicon.words_.end()) {
      continue;
    }
    lexicon.by_first_letter_[static_cast<char32_t>(word[0])].push_back(
        static_cast<int>(lexicon.words_.size()));
    lexicon.words_.push_back(std::move(word));
  }
  return lexicon;
}

absl::StatusOr<CensorLexicon> CensorLexicon::Parse(std::string_view contents) {
  std::vector<std::string> words;
  for (std::string_view line : SplitLines(contents)) {
    line = StripWhitespace(line);
    if (line.empty() || line[0] == '#') continue;
    words.emplace_back(line);
  }
  return Create(std::move(words));
}

absl::StatusOr<CensorLexicon> CensorLexicon::LoadFile(const std::string& path) {
  absl::StatusOr<std::string> contents = ReadFile(path);
  if (!contents.ok()) return contents.status();
  absl::StatusOr<CensorLexicon> lexicon = Parse(*contents);
  if (!lexicon.ok()) {
    return absl::Status(lexicon.status().code(),
                        absl::StrCat(path, ": ", lexicon.status().message()));
  }
  return lexicon;
}

const CensorLexicon& CensorLexicon::Builtin() {
  static const CensorLexicon* lexicon = [] {
    absl::StatusOr<CensorLexicon> parsed =
        Parse(*BuiltinData("censor_lexicon.txt"));
    if (!parsed.ok()) {
      std::fprintf(stderr, "fatal: builtin censor lexicon: %s\n",
                   parsed.status().ToString().c_str());
      std::abort();
    }
    return new CensorLexicon(*std::move(parsed));
  }();
  return *lexicon;
}

const std::vector<int>* CensorLexicon::WordsStartingWith(char32_t letter) const {
  auto it = by_first_letter_.find(letter);
  return it == by_first_letter_.end() ? nullptr : &it->second;
}

NormalizerConfig NormalizerConfig::Default() {
  NormalizerConfig config;
  config.censor_lexicon = CensorLexicon::Builtin();
  config.confusables = BuiltinConfusables();
  config.char_classes = BuiltinCharClasses();
  return config;
}

absl::Status ValidateConfig(const NormalizerConfig& config) {
  if (config.interior_punct_threshold < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("interior_punct_threshold must be >= 1, got ",
                     config.interior_punct_threshold));
  }
  for (size_t i = 1; i < config.enabled_passes.size(); ++i) {
    if (config.enabled_passes[i - 1] >= config.enabled_passes[i]) {
      return absl::InvalidArgumentError(
          "enabled_passes must be distinct and in canonical order "
          "zero_width, confusables, insertion_collapse, censorship");
    }
  }
  for (Pass pass : config.enabled_passes) {
    if (pass == Pass::kConfusables && config.confusables == nullptr) {
      return absl::InvalidArgumentError("confusables pass needs a table");
    }
    if (pass != Pass::kConfusables && config.char_classes == nullptr) {
      return absl::InvalidArgumentError(absl::StrCat(
          AV(PassName(pass)), " pass needs a character class set"));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<Pass>> ParsePassList(std::string_view list) {
  std::vector<Pass> passes;
  for (std::string_view name : Split(list, ',')) {
    name = StripWhitespace(name);
    if (name.empty()) continue;
    absl::StatusOr<Pass> pass = ParsePass(name);
    if (!pass.ok()) return pass.status();
    passes.push_back(*pass);
  }
  std::sort(passes.begin(), passes.end());
  passes.erase(std::unique(passes.begin(), passes.end()), passes.end());
  return passes;
}

PassOutput StripZeroWidth(std::u32string_view text,
                          const CharClassSet& classes) {
  return MakeOutput(text, ZeroWidthEdits(text, classes));
}

PassOutput MapConfusables(std::u32string_view text,
                          const ConfusableTable& table) {
  return MakeOutput(text, ConfusableEdits(text, table));
}

PassOutput CollapseInsertions(std::u32string_view text,
                              const CharClassSet& classes,
                              const CollapseOptions& options) {
  return MakeOutput(text, CollapseEdits(text, classes, options));
}

bool IsUrlLike(std::u32string_view token, const CharClassSet& classes) {
  if (IsUrlLikeCore(token)) return true;
  size_t lead = 0;
  while (lead < token.size() && classes.IsPunctuation(token[lead])) ++lead;
  return lead > 0 && IsUrlLikeCore(token.substr(lead));
}

PassOutput DecodeCensorship(std::u32string_view text,
                            const CharClassSet& classes,
                            const CensorLexicon& lexicon) {
  return MakeOutput(text, CensorshipEdits(text, classes, lexicon));
}

absl::StatusOr<Normalizer> Normalizer::Create(NormalizerConfig config) {
  if (absl::Status status = ValidateConfig(config); !status.ok()) {
    return status;
  }
  return Normalizer(std::make_shared<const NormalizerConfig>(std::move(config)));
}

NormalizationResult Normalizer::Normalize(std::u32string_view text) const {
  const NormalizerConfig& config = *config_;
  EditTrace trace(text);
  for (Pass pass : config.enabled_passes) {
    const std::u32string& current = trace.text();
    std::vector<SpanEdit> edits;
    switch (pass) {
      case Pass::kZeroWidth:
        edits = ZeroWidthEdits(current, *config.char_classes);
        break;
      case Pass::kConfusables:
        edits = ConfusableEdits(current, *config.confusables);
        break;
      case Pass::kInsertionCollapse:
        edits = CollapseEdits(
            current, *config.char_classes,
            {config.interior_punct_threshold, config.url_detection});
        break;
      case Pass::kCensorship:
        edits = CensorshipEdits(current, *config.char_classes,
                                config.censor_lexicon);
        break;
    }
    trace.Apply(edits, pass);
  }
  return {EncodeUtf8(trace.text()), trace.Edits()};
}

absl::StatusOr<NormalizationResult> Normalizer::Normalize(
    std::string_view text) const {
  absl::StatusOr<std::u32string> decoded = DecodeUtf8(text);
  if (!decoded.ok()) return decoded.status();
  return Normalize(std::u32string_view(*decoded));
}

}  // namespace atn
