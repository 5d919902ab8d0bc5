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

#include "atn/records.h"

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "atn/file_util.h"
#include "json.hpp"
#include "strings_internal.h"

namespace atn {
namespace {

using Json = nlohmann::json;

constexpr std::array<std::string_view, 2> kBinaryLabels = {"negative",
                                                           "positive"};
constexpr std::array<std::string_view, 3> kNliLabels = {
    "entailment", "neutral", "contradiction"};

absl::StatusOr<std::string> StringField(const Json& obj, const char* key,
                                        bool allow_number) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    return absl::InvalidArgumentError(absl::StrCat("missing field '", key, "'"));
  }
  if (it->is_string()) return it->get<std::string>();
  if (allow_number && it->is_number_integer()) return it->dump();
  return absl::InvalidArgumentError(
      absl::StrCat("field '", key, "' has the wrong type"));
}

absl::Status WithLine(const absl::Status& status, size_t line) {
  return absl::Status(status.code(),
                      absl::StrCat("line ", line, ": ", status.message()));
}

// Splits RFC 4180 CSV into rows, recording the line each row starts on.
absl::Status SplitCsv(std::string_view contents,
                      std::vector<std::vector<std::string>>* rows,
                      std::vector<size_t>* row_lines) {
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool quoted = false;
  size_t line = 1;
  size_t row_line = 1;
  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    quoted = false;
  };
  auto end_row = [&] {
    end_field();
    if (!(row.size() == 1 && row[0].empty())) {
      rows->push_back(std::move(row));
      row_lines->push_back(row_line);
    }
    row.clear();
  };
  for (size_t i = 0; i < contents.size(); ++i) {
    const char c = contents[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < contents.size() && contents[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || quoted) {
          return absl::InvalidArgumentError(
              absl::StrCat("line ", line, ": stray quote"));
        }
        in_quotes = quoted = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_row();
        ++line;
        row_line = line;
        break;
      default:
        if (quoted) {
          return absl::InvalidArgumentError(
              absl::StrCat("line ", line, ": text after closing quote"));
        }
        field += c;
    }
  }
  if (in_quotes) {
    return absl::InvalidArgumentError(
        absl::StrCat("line ", row_line, ": unterminated quoted field"));
  }
  end_row();
  return absl::OkStatus();
}

}  // namespace

std::string_view TaskName(Task task) {
  return task == Task::kBinary ? "binary" : "nli";
}

absl::StatusOr<Task> ParseTask(std::string_view name) {
  if (name == "binary") return Task::kBinary;
  if (name == "nli") return Task::kNli;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown task '", AV(name), "' (expected binary, nli)"));
}

int LabelCount(Task task) { return task == Task::kBinary ? 2 : 3; }

std::string_view LabelName(Task task, int label) {
  return task == Task::kBinary ? kBinaryLabels[label] : kNliLabels[label];
}

absl::StatusOr<int> ParseLabel(Task task, std::string_view name) {
  const std::string lower = absl::AsciiStrToLower(AV(name));
  if (task == Task::kBinary) {
    if (lower == "hate" || lower == "positive" || lower == "1") return kPositive;
    if (lower == "nothate" || lower == "negative" || lower == "0") return kNegative;
  } else {
    if (lower == "entailment" || lower == "e" || lower == "0") return kEntailment;
    if (lower == "neutral" || lower == "n" || lower == "1") return kNeutral;
    if (lower == "contradiction" || lower == "c" || lower == "2") {
      return kContradiction;
    }
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown ", AV(TaskName(task)), " label '", AV(name), "'"));
}

std::string_view DatasetSchemaName(DatasetSchema schema) {
  switch (schema) {
    case DatasetSchema::kBinaryJsonl:
      return "binary_jsonl";
    case DatasetSchema::kNliJsonl:
      return "nli_jsonl";
    case DatasetSchema::kCsv:
      return "csv";
  }
  return "";
}

absl::StatusOr<DatasetSchema> ParseDatasetSchema(std::string_view name) {
  for (DatasetSchema s : {DatasetSchema::kBinaryJsonl, DatasetSchema::kNliJsonl,
                          DatasetSchema::kCsv}) {
    if (DatasetSchemaName(s) == name) return s;
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown dataset schema '", AV(name),
      "' (expected binary_jsonl, nli_jsonl, csv)"));
}

DatasetSchema GuessDatasetSchema(std::string_view path) {
  return path.ends_with(".csv") ? DatasetSchema::kCsv
                                : DatasetSchema::kBinaryJsonl;
}

absl::StatusOr<EvalRecord> ParseJsonRecord(std::string_view line, Task task) {
  const Json obj = Json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (obj.is_discarded()) return absl::InvalidArgumentError("malformed JSON");
  if (!obj.is_object()) {
    return absl::InvalidArgumentError("expected a JSON object");
  }
  EvalRecord record;
  record.task = task;
  absl::StatusOr<std::string> id = StringField(obj, "id", true);
  if (!id.ok()) return id.status();
  record.id = *std::move(id);
  if (task == Task::kBinary) {
    absl::StatusOr<std::string> text = StringField(obj, "text", false);
    if (!text.ok()) return text.status();
    record.text = *std::move(text);
  } else {
    absl::StatusOr<std::string> premise = StringField(obj, "premise", false);
    if (!premise.ok()) return premise.status();
    absl::StatusOr<std::string> hypothesis =
        StringField(obj, "hypothesis", false);
    if (!hypothesis.ok()) return hypothesis.status();
    record.premise = *std::move(premise);
    record.hypothesis = *std::move(hypothesis);
  }
  absl::StatusOr<std::string> label = StringField(obj, "label", true);
  if (!label.ok()) return label.status();
  absl::StatusOr<int> parsed = ParseLabel(task, *label);
  if (!parsed.ok()) return parsed.status();
  record.gold_label = *parsed;
  return record;
}

absl::StatusOr<std::vector<EvalRecord>> ParseCsvDataset(
    std::string_view contents) {
  std::vector<std::vector<std::string>> rows;
  std::vector<size_t> lines;
  if (absl::Status s = SplitCsv(contents, &rows, &lines); !s.ok()) return s;
  if (rows.empty()) return absl::InvalidArgumentError("line 1: missing header");
  const std::vector<std::string>& header = rows[0];
  auto column = [&](std::string_view name) -> int {
    for (size_t i = 0; i < header.size(); ++i) {
      if (absl::StripAsciiWhitespace(header[i]) == AV(name)) {
        return static_cast<int>(i);
      }
    }
    return -1;
  };
  const int id = column("id");
  const int label = column("label");
  const int text = column("text");
  const int premise = column("premise");
  const int hypothesis = column("hypothesis");
  const Task task = text >= 0 ? Task::kBinary : Task::kNli;
  for (auto [col, name] : {std::pair{id, "id"}, std::pair{label, "label"}}) {
    if (col < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("line 1: missing column '", name, "'"));
    }
  }
  if (task == Task::kNli && (premise < 0 || hypothesis < 0)) {
    return absl::InvalidArgumentError(
        "line 1: need a text column or premise and hypothesis columns");
  }
  std::vector<EvalRecord> records;
  for (size_t r = 1; r < rows.size(); ++r) {
    const std::vector<std::string>& row = rows[r];
    if (row.size() != header.size()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", lines[r], ": expected ", header.size(), " fields, got ",
          row.size()));
    }
    EvalRecord record;
    record.task = task;
    record.id = row[id];
    if (task == Task::kBinary) {
      record.text = row[text];
    } else {
      record.premise = row[premise];
      record.hypothesis = row[hypothesis];
    }
    absl::StatusOr<int> parsed = ParseLabel(task, row[label]);
    if (!parsed.ok()) return WithLine(parsed.status(), lines[r]);
    record.gold_label = *parsed;
    records.push_back(std::move(record));
  }
  return records;
}

absl::StatusOr<std::vector<EvalRecord>> ParseDataset(std::string_view contents,
                                                     DatasetSchema schema) {
  if (schema == DatasetSchema::kCsv) return ParseCsvDataset(contents);
  const Task task =
      schema == DatasetSchema::kNliJsonl ? Task::kNli : Task::kBinary;
  std::vector<EvalRecord> records;
  const std::vector<std::string_view> lines = SplitLines(contents);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (StripWhitespace(lines[i]).empty()) continue;
    absl::StatusOr<EvalRecord> record = ParseJsonRecord(lines[i], task);
    if (!record.ok()) return WithLine(record.status(), i + 1);
    records.push_back(*std::move(record));
  }
  return records;
}

absl::StatusOr<std::vector<EvalRecord>> LoadDataset(const std::string& path,
                                                    DatasetSchema schema) {
  absl::StatusOr<std::string> contents = ReadFile(path);
  if (!contents.ok()) return contents.status();
  absl::StatusOr<std::vector<EvalRecord>> records =
      ParseDataset(*contents, schema);
  if (!records.ok()) {
    return absl::Status(records.status().code(),
                        absl::StrCat(path, ": ", records.status().message()));
  }
  return records;
}

}  // namespace atn
