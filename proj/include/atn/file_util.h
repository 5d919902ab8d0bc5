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

#ifndef ATN_FILE_UTIL_H_
#define ATN_FILE_UTIL_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace atn {

absl::StatusOr<std::string> ReadFile(const std::string& path);
absl::Status WriteFile(const std::string& path, std::string_view contents);

// Splits on '\n', dropping one trailing '\r' per line. A final empty line
// (file ending in a newline) is not returned.
std::vector<std::string_view> SplitLines(std::string_view contents);

}  // namespace atn

#endif  // ATN_FILE_UTIL_H_
