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

#include "atn/edit_trace.h"

#include <algorithm>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "atn/utf8.h"
#include "strings_internal.h"

namespace atn {

std::string_view PassName(Pass pass) {
  switch (pass) {
    case Pass::kZeroWidth:
      return "zero_width";
    case Pass::kConfusables:
      return "confusables";
    case Pass::kInsertionCollapse:
      return "insertion_collapse";
    case Pass::kCensorship:
      return "censorship";
  }
  return "unknown";
}

absl::StatusOr<Pass> ParsePass(std::string_view name) {
  for (Pass pass : kCanonicalPassOrder) {
    if (PassName(pass) == name) return pass;
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown pass '", AV(name),
      "' (expected zero_width, confusables, insertion_collapse, censorship)"));
}

absl::StatusOr<std::u32string> ReplayEdits(std::u32string_view input,
                                           std::span<const Edit> edits) {
  std::u32string out;
  out.reserve(input.size());
  size_t pos = 0;
  for (const Edit& edit : edits) {
    if (edit.start < pos || edit.end < edit.start || edit.end > input.size()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "edit [", edit.start, ", ", edit.end,
          ") is out of order or out of range"));
    }
    absl::StatusOr<std::u32string> replacement = DecodeUtf8(edit.replacement);
    if (!replacement.ok()) return replacement.status();
    out.append(input.substr(pos, edit.start - pos));
    out.append(*replacement);
    pos = edit.end;
  }
  out.append(input.substr(pos));
  return out;
}

std::u32string ApplySpanEdits(std::u32string_view input,
                              std::span<const SpanEdit> edits) {
  std::u32string out;
  out.reserve(input.size());
  size_t pos = 0;
  for (const SpanEdit& edit : edits) {
    out.append(input.substr(pos, edit.begin - pos));
    out.append(edit.replacement);
    pos = edit.end;
  }
  out.append(input.substr(pos));
  return out;
}

EditTrace::EditTrace(std::u32string_view input)
    : input_(input), text_(input) {
  if (!input.empty()) {
    segments_.push_back({std::u32string(input), 0, input.size(), std::nullopt});
  }
}

void EditTrace::ApplyOne(const SpanEdit& edit, Pass pass) {
  std::vector<Segment> before;
  std::vector<Segment> after;
  Segment merged;
  merged.pass = pass;
  bool touched = false;
  std::u32string prefix;
  std::u32string suffix;
  const bool insertion = edit.begin == edit.end;
  size_t pos = 0;
  for (Segment& s : segments_) {
    const size_t s0 = pos;
    const size_t s1 = pos + s.text.size();
    pos = s1;
    if (s1 <= edit.begin && !(insertion && s0 < edit.begin && s1 > edit.begin)) {
      before.push_back(std::move(s));
      continue;
    }
    if (s0 >= edit.end && (!insertion || s0 >= edit.begin)) {
      after.push_back(std::move(s));
      continue;
    }
    // `s` overlaps the edited span.
    const size_t lo = edit.begin > s0 ? edit.begin - s0 : 0;
    const size_t hi = std::min(edit.end, s1) - s0;
    size_t src_begin = s.src_begin;
    size_t src_end = s.src_end;
    if (!s.pass) {
      if (lo > 0) {
        before.push_back({s.text.substr(0, lo), s.src_begin, s.src_begin + lo,
                          std::nullopt});
      }
      if (hi < s.text.size()) {
        after.push_back({s.text.substr(hi), s.src_begin + hi, s.src_end,
                         std::nullopt});
      }
      src_begin = s.src_begin + lo;
      src_end = s.src_begin + hi;
    } else {
      // A generated segment is absorbed whole.
      if (!touched) prefix = s.text.substr(0, lo);
      suffix = s.text.substr(hi);
    }
    if (!touched) merged.src_begin = src_begin;
    merged.src_end = src_end;
    touched = true;
  }
  if (!touched) {
    const size_t at = !before.empty() ? before.back().src_end
                      : !after.empty() ? after.front().src_begin
                                       : input_.size();
    merged.src_begin = merged.src_end = at;
  }
  merged.text = prefix + edit.replacement + suffix;
  segments_ = std::move(before);
  segments_.push_back(std::move(merged));
  for (Segment& s : after) segments_.push_back(std::move(s));
}

void EditTrace::Apply(std::span<const SpanEdit> edits, Pass pass) {
  if (edits.empty()) return;
  // Right to left, so positions of the remaining edits stay valid.
  for (auto it = edits.rbegin(); it != edits.rend(); ++it) ApplyOne(*it, pass);

  // Re-join verbatim runs split by edits that were later absorbed.
  std::vector<Segment> joined;
  for (Segment& s : segments_) {
    if (!s.pass && s.text.empty()) continue;
    if (!s.pass && !joined.empty() && !joined.back().pass &&
        joined.back().src_end == s.src_begin) {
      joined.back().text += s.text;
      joined.back().src_end = s.src_end;
    } else {
      joined.push_back(std::move(s));
    }
  }
  segments_ = std::move(joined);
  text_ = ApplySpanEdits(text_, edits);
}

std::vector<Edit> EditTrace::Edits() const {
  std::vector<Edit> edits;
  for (const Segment& s : segments_) {
    if (!s.pass) continue;
    const std::u32string_view original =
        std::u32string_view(input_).substr(s.src_begin, s.src_end - s.src_begin);
    if (original == s.text) continue;
    edits.push_back({s.src_begin, s.src_end, EncodeUtf8(s.text), *s.pass});
  }
  return edits;
}

}  // namespace atn
