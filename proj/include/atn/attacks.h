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

#ifndef ATN_ATTACKS_H_
#define ATN_ATTACKS_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace atn {

enum class AttackKind {
  kInsertPunctuationChars,
  kInsertWhitespaceChars,
  kInsertZeroWidthChars,
  kMergeWords,
  kReplaceFunFonts,
  kReplaceSimilarChars,
  kReplaceSimilarUnicodeChars,
  kSimulateTypos,
  kSplitWords,
};

inline constexpr std::array<AttackKind, 9> kAllAttackKinds = {
    AttackKind::kInsertPunctuationChars, AttackKind::kInsertWhitespaceChars,
    AttackKind::kInsertZeroWidthChars,   AttackKind::kMergeWords,
    AttackKind::kReplaceFunFonts,        AttackKind::kReplaceSimilarChars,
    AttackKind::kReplaceSimilarUnicodeChars, AttackKind::kSimulateTypos,
    AttackKind::kSplitWords};

std::string_view AttackKindName(AttackKind kind);
// Comma-separated list of every kind name, for error messages.
std::string AttackKindList();
// InvalidArgument naming the valid kinds on failure.
absl::StatusOr<AttackKind> ParseAttackKind(std::string_view name);

enum class Granularity { kChar, kWord, kAll };

std::string_view GranularityName(Granularity g);
absl::StatusOr<Granularity> ParseGranularity(std::string_view name);

// Which of the fields each kind reads:
//   insert_punctuation_chars       aug_word_p, aug_char_p, granularity
//   insert_whitespace_chars        aug_word_p, granularity
//   insert_zero_width_chars        aug_word_p, aug_char_p, granularity
//   merge_words                    aug_word_p
//   replace_fun_fonts              aug_word_p, aug_char_p, granularity,
//                                  vary_fonts
//   replace_similar_chars          aug_word_p, aug_char_p, granularity
//   replace_similar_unicode_chars  aug_word_p, aug_char_p, granularity
//   simulate_typos                 aug_word_p, aug_p
//   split_words                    aug_word_p, aug_p
struct AttackParams {
  double aug_p = 0.65;
  double aug_word_p = 0.65;
  double aug_char_p = 0.25;
  Granularity granularity = Granularity::kWord;
  bool vary_fonts = false;

  bool operator==(const AttackParams&) const = default;
};

// Sampling ranges for SampleParams.
inline constexpr double kAugPMin = 0.3, kAugPMax = 1.0;
inline constexpr double kAugWordPMin = 0.3, kAugWordPMax = 1.0;
inline constexpr double kAugCharPMin = 0.1, kAugCharPMax = 0.4;

// Probabilities must lie in [0, 1]. Values outside the sampling ranges are
// accepted so callers can pin a parameter (for example to 0).
absl::Status ValidateParams(const AttackParams& params);

// Uniform draws from the sampling ranges; deterministic per seed.
AttackParams SampleParams(uint64_t seed);

struct AttackSpec {
  AttackKind kind = AttackKind::kInsertPunctuationChars;
  AttackParams params;
  uint64_t seed = 0;
};

// A fresh seed from the system entropy source, below 2^53 so it survives a
// round trip through JSON numbers in any client.
uint64_t EntropySeed();

// Per-record seed, independent of processing order.
uint64_t DeriveSeed(uint64_t master_seed, uint64_t record_index,
                    AttackKind kind);

// Spec for one record of a corpus: seed from DeriveSeed, params sampled from
// that seed.
AttackSpec SpecForRecord(uint64_t master_seed, uint64_t record_index,
                         AttackKind kind);

// Deterministic per (text, spec). Params are assumed valid.
std::u32string ApplyAttack(std::u32string_view text, const AttackSpec& spec);
// InvalidArgument on malformed UTF-8 or invalid params.
absl::StatusOr<std::string> ApplyAttack(std::string_view text,
                                        const AttackSpec& spec);

}  // namespace atn

#endif  // ATN_ATTACKS_H_
