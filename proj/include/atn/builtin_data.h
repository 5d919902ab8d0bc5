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

#ifndef ATN_BUILTIN_DATA_H_
#define ATN_BUILTIN_DATA_H_

#include <optional>
#include <string_view>

namespace atn {

// Returns the compiled-in copy of a shipped data file, keyed by its path
// relative to data/ (e.g. "confusables/fullwidth.tsv").
std::optional<std::string_view> BuiltinData(std::string_view name);

}  // namespace atn

#endif  // ATN_BUILTIN_DATA_H_
