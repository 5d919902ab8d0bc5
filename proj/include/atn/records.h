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

#ifndef ATN_RECORDS_H_
#define ATN_RECORDS_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace atn {

enum class Task { kBinary, kNli };

std::string_view TaskName(Task task);
absl::StatusOr<Task> ParseTask(std::string_view name);

// Binary labels: 0 negative, 1 positive. NLI labels: 0 entailment,
// 1 neutral, 2 contradiction.
inline constexpr int kNegative = 0;
inline constexpr int kPositive = 1;
inline constexpr int kEntailment = 0;
inline constexpr int kNeutral = 1;
inline constexpr int kContradiction = 2;

int LabelCount(Task task);
// Canonical spelling: negative/positive, entailment/neutral/contradiction.
std::string_view LabelName(Task task, int label);
// Accepts hate/nothate, positive/negative, 1/0 (binary) and
// entailment/neutral/contradiction, e/n/c (nli), case-insensitively.
absl::StatusOr<int> ParseLabel(Task task, std::string_view name);

struct EvalRecord {
  std::string id;
  Task task = Task::kBinary;
  std::string text;  // binary
  std::string premise;  // nli
  std::string hypothesis;  // nli
  int gold_label = 0;
};

enum class DatasetSchema { kBinaryJsonl, kNliJsonl, kCsv };

std::string_view DatasetSchemaName(DatasetSchema schema);
absl::StatusOr<DatasetSchema> ParseDatasetSchema(std::string_view name);
// binary_jsonl unless the file name ends in .csv.
DatasetSchema GuessDatasetSchema(std::string_view path);

// One JSONL line: {"id", "text", "label"} or
// {"id", "premise", "hypothesis", "label"}. Labels may be strings or
// integers; ids may be strings or integers. Other keys are ignored.
absl::StatusOr<EvalRecord> ParseJsonRecord(std::string_view line, Task task);

// CSV with a header row naming id, label and either text or premise and
// hypothesis. RFC 4180 quoting; quoted fields may span lines.
absl::StatusOr<std::vector<EvalRecord>> ParseCsvDataset(
    std::string_view contents);

// Records in file order. Errors name the file and line.
absl::StatusOr<std::vector<EvalRecord>> ParseDataset(std::string_view contents,
                                                     DatasetSchema schema);
absl::StatusOr<std::vector<EvalRecord>> LoadDataset(const std::string& path,
                                                    DatasetSchema schema);

}  // namespace atn

#endif  // ATN_RECORDS_H_
