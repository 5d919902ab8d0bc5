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

#include "atn/mappings.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "atn/builtin_data.h"
#include "atn/file_util.h"
#include "atn/utf8.h"
#include "strings_internal.h"

namespace atn {
namespace {

constexpr char32_t kMaxCodepoint = 0x10FFFF;

std::optional<char32_t> ParseHexCodepoint(std::string_view s) {
  if (s.empty() || s.size() > 6) return std::nullopt;
  uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value, 16);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  if (value > kMaxCodepoint || (value >= 0xD800 && value <= 0xDFFF)) {
    return std::nullopt;
  }
  return static_cast<char32_t>(value);
}

// Handles `#@ key=value` metadata lines; returns false for other lines.
bool ParseMetadata(std::string_view line, std::string* name,
                   std::string* version) {
  if (!ConsumePrefix(&line, "#@")) return false;
  line = StripWhitespace(line);
  std::pair<std::string_view, std::string_view> kv =
      SplitOnce(line, "=");
  const std::string_view key = StripWhitespace(kv.first);
  const std::string_view value = StripWhitespace(kv.second);
  if (key == "name" && name != nullptr) *name = std::string(value);
  if (key == "version" && version != nullptr) *version = std::string(value);
  return true;
}

bool IsPrintableAscii(char32_t c) { return c >= 0x20 && c <= 0x7E; }

std::string Describe(std::u32string_view source) {
  std::string out;
  for (char32_t c : source) {
    if (!out.empty()) out += ' ';
    char buf[16];
    std::snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(c));
    out += buf;
  }
  return out;
}

[[noreturn]] void DieOnBuiltin(std::string_view what,
                               const absl::Status& status) {
  std::fprintf(stderr, "fatal: builtin data %.*s: %s\n",
               static_cast<int>(what.size()), what.data(),
               status.ToString().c_str());
  std::abort();
}

}  // namespace

std::string_view CharClassName(CharClass c) {
  switch (c) {
    case CharClass::kZeroWidth:
      return "zero_width";
    case CharClass::kPunctuation:
      return "punctuation";
    case CharClass::kWhitespace:
      return "whitespace";
    case CharClass::kOther:
      break;
  }
  return "other";
}

CharClassSet::CharClassSet() : bmp_(0x10000, 0) {}

absl::StatusOr<CharClassSet> CharClassSet::Parse(std::string_view contents) {
  CharClassSet set;
  const std::vector<std::string_view> lines = SplitLines(contents);
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    const size_t line_no = i + 1;
    if (ParseMetadata(line, nullptr, &set.version_)) continue;
    if (line.empty() || line[0] == '#') continue;

    const std::vector<std::string_view> fields = Split(line, '\t');
    if (fields.size() != 2) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": expected <class>\\t<range>"));
    }
    CharClass cls;
    if (fields[0] == "zero_width") {
      cls = CharClass::kZeroWidth;
    } else if (fields[0] == "punctuation") {
      cls = CharClass::kPunctuation;
    } else if (fields[0] == "whitespace") {
      cls = CharClass::kWhitespace;
    } else {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", line_no, ": unknown class '", AV(fields[0]), "'"));
    }
    std::pair<std::string_view, std::string_view> bounds =
        SplitOnce(fields[1], "..");
    if (bounds.second.empty()) bounds.second = bounds.first;
    const std::optional<char32_t> lo = ParseHexCodepoint(bounds.first);
    const std::optional<char32_t> hi = ParseHexCodepoint(bounds.second);
    if (!lo || !hi || *lo > *hi) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", line_no, ": bad codepoint range '", AV(fields[1]), "'"));
    }
    for (char32_t c = *lo; c <= *hi; ++c) {
      const CharClass existing = set.Classify(c);
      if (existing != CharClass::kOther && existing != cls) {
        return absl::AlreadyExistsError(absl::StrCat(
            "line ", line_no, ": ", Describe(std::u32string(1, c)),
            " is already in class ", AV(CharClassName(existing))));
      }
      if (c < set.bmp_.size()) {
        set.bmp_[c] = static_cast<uint8_t>(cls);
      } else {
        set.astral_[c] = cls;
      }
    }
  }
  for (char32_t c : kRequiredZeroWidth) {
    if (!set.IsZeroWidth(c)) {
      return absl::FailedPreconditionError(
          absl::StrCat("zero_width class must contain ",
                       Describe(std::u32string(1, c))));
    }
  }
  return set;
}

absl::StatusOr<CharClassSet> CharClassSet::LoadFile(const std::string& path) {
  absl::StatusOr<std::string> contents = ReadFile(path);
  if (!contents.ok()) return contents.status();
  absl::StatusOr<CharClassSet> set = Parse(*contents);
  if (!set.ok()) {
    return absl::Status(set.status().code(),
                        absl::StrCat(path, ": ", set.status().message()));
  }
  return set;
}

std::vector<char32_t> CharClassSet::Members(CharClass c) const {
  std::vector<char32_t> out;
  for (size_t i = 0; i < bmp_.size(); ++i) {
    if (bmp_[i] == static_cast<uint8_t>(c)) out.push_back(static_cast<char32_t>(i));
  }
  for (const auto& [cp, cls] : astral_) {
    if (cls == c) out.push_back(cp);
  }
  std::sort(out.begin(), out.end());
  return out;
}

absl::Status ConfusableTable::Add(std::u32string source,
                                  std::string replacement) {
  if (source.empty()) return absl::OutOfRangeError("empty source sequence");
  for (char32_t c : source) {
    if (IsPrintableAscii(c)) {
      return absl::OutOfRangeError(absl::StrCat(
          "source ", Describe(source), " contains a printable ASCII codepoint"));
    }
  }
  if (replacement.empty()) {
    return absl::OutOfRangeError(
        absl::StrCat("empty replacement for ", Describe(source)));
  }
  for (char ch : replacement) {
    if (!IsPrintableAscii(static_cast<unsigned char>(ch))) {
      return absl::OutOfRangeError(
          absl::StrCat("replacement for ", Describe(source),
                       " is not printable ASCII"));
    }
  }
  Bucket& bucket = index_[source[0]];
  auto same_source = [&](int idx) { return entries_[idx].source == source; };
  if ((bucket.single >= 0 && same_source(bucket.single)) ||
      std::any_of(bucket.multi.begin(), bucket.multi.end(), same_source)) {
    return absl::AlreadyExistsError(
        absl::StrCat("duplicate source ", Describe(source)));
  }
  const int idx = static_cast<int>(entries_.size());
  entries_.push_back({std::move(source), std::move(replacement)});
  if (entries_.back().source.size() == 1) {
    bucket.single = idx;
  } else {
    bucket.multi.push_back(idx);
    std::stable_sort(bucket.multi.begin(), bucket.multi.end(),
                     [&](int a, int b) {
                       return entries_[a].source.size() >
                              entries_[b].source.size();
                     });
  }
  return absl::OkStatus();
}

absl::StatusOr<ConfusableTable> ConfusableTable::Parse(
    std::string_view contents, std::string default_name) {
  ConfusableTable table(std::move(default_name));
  const std::vector<std::string_view> lines = SplitLines(contents);
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    const size_t line_no = i + 1;
    if (ParseMetadata(line, &table.name_, &table.version_)) continue;
    if (line.empty() || line[0] == '#') continue;

    const size_t tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", line_no, ": expected <hex list>\\t<replacement>"));
    }
    std::u32string source;
    for (std::string_view hex : Split(line.substr(0, tab), ' ')) {
      const std::optional<char32_t> cp = ParseHexCodepoint(hex);
      if (!cp) {
        return absl::InvalidArgumentError(absl::StrCat(
            "line ", line_no, ": bad hex codepoint '", AV(hex), "'"));
      }
      source.push_back(*cp);
    }
    absl::Status status =
        table.Add(std::move(source), std::string(line.substr(tab + 1)));
    if (!status.ok()) {
      return absl::Status(status.code(),
                          absl::StrCat("line ", line_no, ": ", status.message()));
    }
  }
  return table;
}

absl::StatusOr<ConfusableTable> ConfusableTable::LoadFile(
    const std::string& path) {
  absl::StatusOr<std::string> contents = ReadFile(path);
  if (!contents.ok()) return contents.status();
  std::string stem = path.substr(path.find_last_of('/') + 1);
  stem = stem.substr(0, stem.find('.'));
  absl::StatusOr<ConfusableTable> table = Parse(*contents, stem);
  if (!table.ok()) {
    return absl::Status(table.status().code(),
                        absl::StrCat(path, ": ", table.status().message()));
  }
  return table;
}

absl::StatusOr<ConfusableTable> ConfusableTable::Merge(
    std::span<const ConfusableTable> tables, std::string name) {
  ConfusableTable merged(std::move(name));
  for (const ConfusableTable& table : tables) {
    if (!merged.version_.empty()) merged.version_ += ",";
    merged.version_ += absl::StrCat(table.name(), "@", table.version());
    for (const Entry& entry : table.entries()) {
      const std::optional<ConfusableMatch> existing =
          merged.Lookup(entry.source, 0);
      if (existing && existing->length == entry.source.size()) {
        if (existing->replacement != entry.replacement) {
          return absl::AlreadyExistsError(absl::StrCat(
              "conflicting replacements for ", Describe(entry.source),
              " in table ", table.name()));
        }
        continue;
      }
      absl::Status status = merged.Add(entry.source, entry.replacement);
      if (!status.ok()) return status;
    }
  }
  return merged;
}

std::optional<ConfusableMatch> ConfusableTable::Lookup(
    std::u32string_view text, size_t pos) const {
  if (pos >= text.size()) return std::nullopt;
  auto it = index_.find(text[pos]);
  if (it == index_.end()) return std::nullopt;
  const Bucket& bucket = it->second;
  for (int idx : bucket.multi) {
    const std::u32string& source = entries_[idx].source;
    if (text.substr(pos, source.size()) == source) {
      return ConfusableMatch{source.size(), entries_[idx].replacement};
    }
  }
  if (bucket.single >= 0) {
    return ConfusableMatch{1, entries_[bucket.single].replacement};
  }
  return std::nullopt;
}

std::shared_ptr<const CharClassSet> BuiltinCharClasses() {
  static const std::shared_ptr<const CharClassSet> set = [] {
    absl::StatusOr<CharClassSet> parsed =
        CharClassSet::Parse(*BuiltinData("charclass.tsv"));
    if (!parsed.ok()) DieOnBuiltin("charclass.tsv", parsed.status());
    return std::make_shared<const CharClassSet>(*std::move(parsed));
  }();
  return set;
}

std::shared_ptr<const ConfusableTable> BuiltinTable(std::string_view name) {
  static const auto tables = [] {
    std::vector<std::shared_ptr<const ConfusableTable>> out;
    for (std::string_view table_name : kBuiltinTableNames) {
      const std::string file = absl::StrCat("confusables/", AV(table_name), ".tsv");
      absl::StatusOr<ConfusableTable> parsed =
          ConfusableTable::Parse(*BuiltinData(file), std::string(table_name));
      if (!parsed.ok()) DieOnBuiltin(file, parsed.status());
      out.push_back(std::make_shared<const ConfusableTable>(*std::move(parsed)));
    }
    return out;
  }();
  for (const auto& table : tables) {
    if (table->name() == name) return table;
  }
  return nullptr;
}

std::shared_ptr<const ConfusableTable> BuiltinConfusables() {
  static const std::shared_ptr<const ConfusableTable> merged = [] {
    std::vector<ConfusableTable> parts;
    for (std::string_view name : kBuiltinTableNames) {
      parts.push_back(*BuiltinTable(name));
    }
    absl::StatusOr<ConfusableTable> table =
        ConfusableTable::Merge(parts, "builtin");
    if (!table.ok()) DieOnBuiltin("confusables", table.status());
    return std::make_shared<const ConfusableTable>(*std::move(table));
  }();
  return merged;
}

}  // namespace atn
