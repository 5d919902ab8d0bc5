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

// The adversarial text normalizer: a fixed-order pipeline of reversal passes
// for character-level attacks.
//
//   zero_width          deletes zero-width codepoints
//   confusables         maps look-alike codepoints to keyboard characters
//   insertion_collapse  removes punctuation and whitespace inserted inside
//                       words
//   censorship          restores lexicon words whose letters were masked
//                       with punctuation ("k!ll", "k***")
//
// Every pass is also exposed on its own; all offsets are in codepoints.

#ifndef ATN_NORMALIZER_H_
#define ATN_NORMALIZER_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/statusor.h"
#include "atn/edit_trace.h"
#include "atn/mappings.h"

namespace atn {

// Words restored by the censorship pass. Each word has at least three
// characters, all lowercase ASCII letters.
class CensorLexicon {
 public:
  CensorLexicon() = default;

  static absl::StatusOr<CensorLexicon> Create(std::vector<std::string> words);
  // One word per line, '#' comments, blank lines ignored.
  static absl::StatusOr<CensorLexicon> Parse(std::string_view contents);
  static absl::StatusOr<CensorLexicon> LoadFile(const std::string& path);
  static const CensorLexicon& Builtin();

  const std::vector<std::string>& words() const { return words_; }
  bool empty() const { return words_.empty(); }
  // Indices into words() of the words starting with `letter`.
  const std::vector<int>* WordsStartingWith(char32_t letter) const;

 private:
  std::vector<std::string> words_;  // input order, duplicates removed
  absl::flat_hash_map<char32_t, std::vector<int>> by_first_letter_;
};

struct NormalizerConfig {
  // A word is collapsed when it has at least this many punctuation marks
  // between its first and last non-punctuation characters.
  int interior_punct_threshold = 2;
  bool url_detection = true;
  CensorLexicon censor_lexicon;
  // Kept in canonical order by Normalizer::Create.
  std::vector<Pass> enabled_passes = {kCanonicalPassOrder.begin(),
                                      kCanonicalPassOrder.end()};
  std::shared_ptr<const ConfusableTable> confusables;
  std::shared_ptr<const CharClassSet> char_classes;

  // Builtin tables and lexicon, every pass enabled.
  static NormalizerConfig Default();
};

absl::Status ValidateConfig(const NormalizerConfig& config);

// Parses a comma-separated pass list ("" selects no pass) into canonical
// order. Duplicates are ignored.
absl::StatusOr<std::vector<Pass>> ParsePassList(std::string_view list);

struct NormalizationResult {
  std::string output;
  std::vector<Edit> edits;
};

struct PassOutput {
  std::u32string text;
  std::vector<SpanEdit> edits;  // relative to the pass input
};

PassOutput StripZeroWidth(std::u32string_view text, const CharClassSet& classes);

PassOutput MapConfusables(std::u32string_view text, const ConfusableTable& table);

struct CollapseOptions {
  int interior_punct_threshold = 2;
  bool url_detection = true;
};

// Splits on whitespace and, per token, deletes interior punctuation when
// the token has at least `interior_punct_threshold` interior marks and is not
// URL-like; leading and trailing punctuation stay. Maximal runs of two or
// more single-character alphanumeric tokens are then joined, where a run
// ends at any gap of two or more whitespace codepoints. Other gaps become a
// single space, except that an unjoined gap of two or more between two
// single-character tokens becomes exactly two spaces. Leading and trailing
// whitespace is dropped.
PassOutput CollapseInsertions(std::u32string_view text,
                              const CharClassSet& classes,
                              const CollapseOptions& options);

// True iff the token contains "://", starts with "www." (case-insensitive),
// or has the form label(.label)+/... where labels are ASCII alphanumeric
// and the last label before the first '/' is 2-6 ASCII letters. Leading
// punctuation (e.g. an opening parenthesis) is ignored.
bool IsUrlLike(std::u32string_view token, const CharClassSet& classes);

// Decodes whitespace-delimited tokens of the form
// <punct>* <censored word> <punct>* where the censored word has the length
// of a lexicon word, the same first letter (case-insensitive) and every
// other character equal to the word's letter or punctuation, with at least
// one punctuation character. The decoded word keeps the case of the first
// letter and is otherwise lowercase.
PassOutput DecodeCensorship(std::u32string_view text,
                            const CharClassSet& classes,
                            const CensorLexicon& lexicon);

class Normalizer {
 public:
  static absl::StatusOr<Normalizer> Create(NormalizerConfig config);

  NormalizationResult Normalize(std::u32string_view text) const;
  // InvalidArgument if `text` is not valid UTF-8.
  absl::StatusOr<NormalizationResult> Normalize(std::string_view text) const;

  const NormalizerConfig& config() const { return *config_; }

 private:
  explicit Normalizer(std::shared_ptr<const NormalizerConfig> config)
      : config_(std::move(config)) {}

  std::shared_ptr<const NormalizerConfig> config_;
};

}  // namespace atn

#endif  // ATN_NORMALIZER_H_
