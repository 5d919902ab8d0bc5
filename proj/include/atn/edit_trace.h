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

// Span-level provenance for normalization. Each pass edits its own input
// text; EditTrace composes those local edits into a single list of edits
// over the original input, so that replaying the list reproduces the final
// output exactly.

#ifndef ATN_EDIT_TRACE_H_
#define ATN_EDIT_TRACE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace atn {

enum class Pass : uint8_t {
  kZeroWidth,
  kConfusables,
  kInsertionCollapse,
  kCensorship,
};

inline constexpr std::array<Pass, 4> kCanonicalPassOrder = {
    Pass::kZeroWidth, Pass::kConfusables, Pass::kInsertionCollapse,
    Pass::kCensorship};

// "zero_width", "confusables", "insertion_collapse", "censorship".
std::string_view PassName(Pass pass);
absl::StatusOr<Pass> ParsePass(std::string_view name);

// Replaces codepoints [begin, end) of a pass's input. Spans are non-empty.
struct SpanEdit {
  size_t begin = 0;
  size_t end = 0;
  std::u32string replacement;
};

// Replaces codepoints [start, end) of the original input.
struct Edit {
  size_t start = 0;
  size_t end = 0;
  std::string replacement;  // UTF-8, may be empty
  Pass pass = Pass::kZeroWidth;

  bool operator==(const Edit&) const = default;
};

// Applies sorted, non-overlapping edits to `input`. Fails if the edits are
// out of order, overlap or run past the end of the input.
absl::StatusOr<std::u32string> ReplayEdits(std::u32string_view input,
                                           std::span<const Edit> edits);
std::u32string ApplySpanEdits(std::u32string_view input,
                              std::span<const SpanEdit> edits);

class EditTrace {
 public:
  explicit EditTrace(std::u32string_view input);

  // Current text after every applied pass.
  const std::u32string& text() const { return text_; }

  // `edits` are relative to text(), sorted and non-overlapping. An edit that
  // touches the output of an earlier edit absorbs it; the merged edit is
  // attributed to `pass`.
  void Apply(std::span<const SpanEdit> edits, Pass pass);

  // Edits over the original input, sorted by start offset.
  std::vector<Edit> Edits() const;

 private:
  void ApplyOne(const SpanEdit& edit, Pass pass);

  struct Segment {
    std::u32string text;
    size_t src_begin = 0;
    size_t src_end = 0;
    std::optional<Pass> pass;  // nullopt: verbatim copy of the input span
  };

  std::u32string input_;
  std::vector<Segment> segments_;
  std::u32string text_;
};

}  // namespace atn

#endif  // ATN_EDIT_TRACE_H_
