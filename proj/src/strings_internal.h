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

#ifndef ATN_SRC_STRINGS_INTERNAL_H_
#define ATN_SRC_STRINGS_INTERNAL_H_

#include <string_view>
#include <utility>
#include <vector>

#include "absl/strings/ascii.h"
#include "absl/strings/string_view.h"

namespace atn {

// absl::string_view is a distinct type in the absl build we link against.
inline absl::string_view AV(std::string_view s) {
  return absl::string_view(s.data(), s.size());
}

inline std::string_view SV(absl::string_view s) {
  return std::string_view(s.data(), s.size());
}

inline std::string_view StripWhitespace(std::string_view s) {
  return SV(absl::StripAsciiWhitespace(AV(s)));
}

inline bool ConsumePrefix(std::string_view* s, std::string_view prefix) {
  if (s->substr(0, prefix.size()) != prefix) return false;
  s->remove_prefix(prefix.size());
  return true;
}

inline std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  for (;;) {
    const size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Splits at the first `sep`; the second half is empty when absent.
inline std::pair<std::string_view, std::string_view> SplitOnce(
    std::string_view s, std::string_view sep) {
  const size_t pos = s.find(sep);
  if (pos == std::string_view::npos) return {s, std::string_view()};
  return {s.substr(0, pos), s.substr(pos + sep.size())};
}

}  // namespace atn

#endif  // ATN_SRC_STRINGS_INTERNAL_H_
