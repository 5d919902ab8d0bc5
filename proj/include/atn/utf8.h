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

#ifndef ATN_UTF8_H_
#define ATN_UTF8_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"

namespace atn {

// Strict decoding: rejects overlong forms, surrogates and values above
// U+10FFFF. The error message carries the byte offset of the first bad
// sequence.
absl::StatusOr<std::u32string> DecodeUtf8(std::string_view bytes);

bool IsValidUtf8(std::string_view bytes);

void AppendUtf8(char32_t cp, std::string* out);
std::string EncodeUtf8(std::u32string_view text);

inline bool IsAsciiAlnum(char32_t c) {
  return (c >= U'0' && c <= U'9') || (c >= U'a' && c <= U'z') ||
         (c >= U'A' && c <= U'Z');
}
inline bool IsAsciiAlpha(char32_t c) {
  return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z');
}
inline char32_t AsciiToLower(char32_t c) {
  return (c >= U'A' && c <= U'Z') ? c + 32 : c;
}
inline char32_t AsciiToUpper(char32_t c) {
  return (c >= U'a' && c <= U'z') ? c - 32 : c;
}

}  // namespace atn

#endif  // ATN_UTF8_H_
