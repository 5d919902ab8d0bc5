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

// Character-class data for the normalizer: confusable-to-keyboard mapping
// tables and the zero-width / punctuation / whitespace classes. Both are
// loaded from the text formats under data/ and are immutable afterwards.

#ifndef ATN_MAPPINGS_H_
#define ATN_MAPPINGS_H_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/statusor.h"

namespace atn {

enum class CharClass : uint8_t { kOther = 0, kZeroWidth, kPunctuation, kWhitespace };

std::string_view CharClassName(CharClass c);

// Pairwise-disjoint zero-width, punctuation and whitespace sets.
//
// File format: one entry per line, `<class><TAB><hex>` or
// `<class><TAB><hex>..<hex>`, where class is one of zero_width, punctuation,
// whitespace. Lines starting with '#' are comments.
class CharClassSet {
 public:
  // Codepoints every zero-width set must contain.
  static constexpr std::array<char32_t, 5> kRequiredZeroWidth = {
      0x200B, 0x200C, 0x200D, 0x2060, 0xFEFF};

  static absl::StatusOr<CharClassSet> Parse(std::string_view contents);
  static absl::StatusOr<CharClassSet> LoadFile(const std::string& path);

  CharClass Classify(char32_t c) const {
    if (c < bmp_.size()) return static_cast<CharClass>(bmp_[c]);
    auto it = astral_.find(c);
    return it == astral_.end() ? CharClass::kOther : it->second;
  }
  bool IsZeroWidth(char32_t c) const { return Classify(c) == CharClass::kZeroWidth; }
  bool IsPunctuation(char32_t c) const { return Classify(c) == CharClass::kPunctuation; }
  bool IsWhitespace(char32_t c) const { return Classify(c) == CharClass::kWhitespace; }

  // All members of one class, ascending.
  std::vector<char32_t> Members(CharClass c) const;

  const std::string& version() const { return version_; }

 private:
  CharClassSet();

  std::vector<uint8_t> bmp_;
  absl::flat_hash_map<char32_t, CharClass> astral_;
  std::string version_;
};

struct ConfusableMatch {
  size_t length = 0;  // in codepoints
  std::string_view replacement;
};

// Maps non-keyboard codepoint sequences to printable-ASCII replacements.
//
// File format: one entry per line,
// `<source-codepoints-as-hex-list><TAB><replacement-literal>`, hex values
// separated by single spaces. '#' starts a comment line; `#@ name=...` and
// `#@ version=...` comment lines set the table metadata.
//
// Sources are non-empty and contain no printable-ASCII codepoint, so a
// replacement can never take part in a later match.
class ConfusableTable {
 public:
  struct Entry {
    std::u32string source;
    std::string replacement;
  };

  explicit ConfusableTable(std::string name = "", std::string version = "")
      : name_(std::move(name)), version_(std::move(version)) {}

  // `default_name` is used unless the file sets its own.
  static absl::StatusOr<ConfusableTable> Parse(std::string_view contents,
                                               std::string default_name = "");
  static absl::StatusOr<ConfusableTable> LoadFile(const std::string& path);

  // Union of several tables. A source present in more than one table must
  // carry the same replacement everywhere.
  static absl::StatusOr<ConfusableTable> Merge(
      std::span<const ConfusableTable> tables, std::string name);

  // Errors: AlreadyExists for a duplicate source, OutOfRange when the entry
  // breaks a table invariant.
  absl::Status Add(std::u32string source, std::string replacement);

  // Longest source matching `text` at `pos`.
  std::optional<ConfusableMatch> Lookup(std::u32string_view text,
                                        size_t pos) const;

  const std::vector<Entry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::string& name() const { return name_; }
  const std::string& version() const { return version_; }

 private:
  struct Bucket {
    int single = -1;         // entry whose source is exactly one codepoint
    std::vector<int> multi;  // longer sources, longest first
  };

  std::string name_;
  std::string version_;
  std::vector<Entry> entries_;
  absl::flat_hash_map<char32_t, Bucket> index_;
};

// Shipped tables, compiled from data/.
inline constexpr std::array<std::string_view, 4> kBuiltinTableNames = {
    "math_alphanumeric", "fullwidth", "enclosed_alphanumerics", "lookalikes"};

std::shared_ptr<const CharClassSet> BuiltinCharClasses();
std::shared_ptr<const ConfusableTable> BuiltinTable(std::string_view name);
// Merge of every builtin table.
std::shared_ptr<const ConfusableTable> BuiltinConfusables();

}  // namespace atn

#endif  // ATN_MAPPINGS_H_
