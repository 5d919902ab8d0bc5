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

#ifndef ATN_CORPUS_ATTACK_H_
#define ATN_CORPUS_ATTACK_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "atn/attacks.h"
#include "atn/records.h"

namespace atn {

// Which text fields an attack rewrites. kDefault is text for binary records
// and hypothesis for nli records.
enum class FieldSelector { kDefault, kText, kPremise, kHypothesis, kBoth };

std::string_view FieldSelectorName(FieldSelector field);
absl::StatusOr<FieldSelector> ParseFieldSelector(std::string_view name);

struct CorpusAttackOptions {
  AttackKind kind = AttackKind::kInsertPunctuationChars;
  uint64_t master_seed = 0;
  FieldSelector field = FieldSelector::kDefault;
  // Used for every record when set; otherwise sampled per record.
  std::optional<AttackParams> params;
  int threads = 1;
};

// Record `index` (0-based, in input order) always gets the same spec.
AttackSpec CorpusRecordSpec(const CorpusAttackOptions& options, uint64_t index);

// FailedPrecondition when the selector does not apply to the record's task.
absl::StatusOr<EvalRecord> AttackRecord(const EvalRecord& record,
                                        const AttackSpec& spec,
                                        FieldSelector field);

struct AttackMetadata {
  std::string id;
  AttackKind kind = AttackKind::kInsertPunctuationChars;
  uint64_t seed = 0;
  AttackParams params;
};

// {"id":...,"kind":...,"seed":...,"params":{...}} on one line.
std::string AttackMetadataJson(const AttackMetadata& metadata);
absl::StatusOr<AttackMetadata> ParseAttackMetadataJson(std::string_view line);

// JSON for an AttackParams object, and its inverse. Missing keys keep the
// values of `defaults`.
std::string AttackParamsJson(const AttackParams& params);
absl::StatusOr<AttackParams> ParseAttackParamsJson(std::string_view json,
                                                   const AttackParams& defaults);

// Streams dataset JSONL from `in` to `out`, rewriting the selected fields
// and leaving every other key untouched and in place. Each line's task is
// taken from its keys: "text" means binary, otherwise nli. Writes one
// metadata line per record. Returns the record count.
//
// Errors: InvalidArgument (with line number) for a bad record,
// FailedPrecondition for a selector that does not fit a record.
absl::StatusOr<size_t> AttackJsonlStream(std::istream& in, std::ostream& out,
                                         std::ostream& metadata,
                                         const CorpusAttackOptions& options);

}  // namespace atn

#endif  // ATN_CORPUS_ATTACK_H_
