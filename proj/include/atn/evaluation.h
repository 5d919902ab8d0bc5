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

#ifndef ATN_EVALUATION_H_
#define ATN_EVALUATION_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "atn/attacks.h"
#include "atn/classifier.h"
#include "atn/corpus_attack.h"
#include "atn/normalizer.h"
#include "atn/records.h"

namespace atn {

inline constexpr std::string_view kBaseline = "baseline";

struct ConditionResult {
  std::string dataset;
  std::string augmentation;  // attack kind name or "baseline"
  bool normalized = false;
  std::string classifier;
  double metric = 0;  // accuracy, correct / n
  size_t n = 0;       // scored records
  size_t correct = 0;
  size_t failed = 0;  // records the classifier could not score

  bool operator==(const ConditionResult&) const = default;
};

struct EvalProvenance {
  uint64_t master_seed = 0;
  std::string config_hash;
  std::string version;
  // Empty unless requested, so reports stay byte-identical across runs.
  std::string started_at;
  std::string finished_at;

  bool operator==(const EvalProvenance&) const = default;
};

struct EvalReport {
  std::vector<ConditionResult> rows;
  EvalProvenance provenance;

  bool operator==(const EvalReport&) const = default;
};

struct EvalOptions {
  std::string dataset = "dataset";
  std::vector<AttackKind> attacks;
  uint64_t master_seed = 0;
  FieldSelector field = FieldSelector::kDefault;
  int threads = 1;
  // A condition fails when more than this fraction of records fail.
  double failure_budget = 0.1;
};

// Rows, in order: baseline, baseline normalized, then each attack followed
// by its normalized companion. Record i under attack k uses
// SpecForRecord(master_seed, i, k), so results do not depend on `threads`.
//
// Errors: InvalidArgument for empty records or a task mismatch; the code of
// the dominant per-record failure when a condition exceeds the budget.
absl::StatusOr<std::vector<ConditionResult>> RunMatrix(
    const std::vector<EvalRecord>& records, const EvalOptions& options,
    Classifier& classifier, const Normalizer& normalizer);

// Stable hex digest of everything that determines a report's numbers.
std::string ConfigHash(const NormalizerConfig& normalizer,
                       const std::vector<AttackKind>& attacks,
                       FieldSelector field, const Classifier& classifier,
                       const std::vector<std::string>& datasets);

}  // namespace atn

#endif  // ATN_EVALUATION_H_
