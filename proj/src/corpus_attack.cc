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

#include "atn/corpus_attack.h"

#include <thread>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "strings_internal.h"

namespace atn {
namespace {

using OrderedJson = nlohmann::ordered_json;

constexpr size_t kBatchLines = 512;

std::vector<const char*> SelectedKeys(Task task, FieldSelector field) {
  switch (field) {
    case FieldSelector::kDefault:
      return {task == Task::kBinary ? "text" : "hypothesis"};
    case FieldSelector::kText:
      return {"text"};
    case FieldSelector::kPremise:
      return {"premise"};
    case FieldSelector::kHypothesis:
      return {"hypothesis"};
    case FieldSelector::kBoth:
      return {"premise", "hypothesis"};
  }
  return {};
}

absl::Status CheckSelector(Task task, FieldSelector field) {
  const bool nli_only = field == FieldSelector::kPremise ||
                        field == FieldSelector::kHypothesis ||
                        field == FieldSelector::kBoth;
  if ((task == Task::kBinary && nli_only) ||
      (task == Task::kNli && field == FieldSelector::kText)) {
    return absl::FailedPreconditionError(
        absl::StrCat("field selector '", AV(FieldSelectorName(field)),
                     "' does not apply to ", AV(TaskName(task)), " records"));
  }
  return absl::OkStatus();
}

struct LineResult {
  absl::Status status;
  std::string record;
  std::string metadata;
};

LineResult AttackLine(std::string_view line, uint64_t index,
                      const CorpusAttackOptions& options) {
  LineResult result;
  OrderedJson obj = OrderedJson::parse(line, nullptr, false);
  if (obj.is_discarded() || !obj.is_object()) {
    result.status = absl::InvalidArgumentError("malformed JSON object");
    return result;
  }
  const Task task = obj.contains("text") ? Task::kBinary : Task::kNli;
  absl::StatusOr<EvalRecord> record = ParseJsonRecord(line, task);
  if (!record.ok()) {
    result.status = record.status();
    return result;
  }
  if (absl::Status s = CheckSelector(task, options.field); !s.ok()) {
    result.status = s;
    return result;
  }
  const AttackSpec spec = CorpusRecordSpec(options, index);
  for (const char* key : SelectedKeys(task, options.field)) {
    // Keys were validated as strings by ParseJsonRecord.
    obj[key] = *ApplyAttack(obj[key].get<std::string>(), spec);
  }
  result.record = obj.dump();
  result.metadata =
      AttackMetadataJson({record->id, spec.kind, spec.seed, spec.params});
  return result;
}

}  // namespace

std::string_view FieldSelectorName(FieldSelector field) {
  switch (field) {
    case FieldSelector::kDefault:
      return "default";
    case FieldSelector::kText:
      return "text";
    case FieldSelector::kPremise:
      return "premise";
    case FieldSelector::kHypothesis:
      return "hypothesis";
    case FieldSelector::kBoth:
      return "both";
  }
  return "";
}

absl::StatusOr<FieldSelector> ParseFieldSelector(std::string_view name) {
  for (FieldSelector f : {FieldSelector::kDefault, FieldSelector::kText,
                          FieldSelector::kPremise, FieldSelector::kHypothesis,
                          FieldSelector::kBoth}) {
    if (FieldSelectorName(f) == name) return f;
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown field selector '", AV(name),
      "' (expected default, text, premise, hypothesis, both)"));
}

AttackSpec CorpusRecordSpec(const CorpusAttackOptions& options,
                            uint64_t index) {
  AttackSpec spec = SpecForRecord(options.master_seed, index, options.kind);
  if (options.params) spec.params = *options.params;
  return spec;
}

absl::StatusOr<EvalRecord> AttackRecord(const EvalRecord& record,
                                        const AttackSpec& spec,
                                        FieldSelector field) {
  if (absl::Status s = CheckSelector(record.task, field); !s.ok()) return s;
  EvalRecord out = record;
  for (const char* key : SelectedKeys(record.task, field)) {
    std::string* target = std::string_view(key) == "text"      ? &out.text
                          : std::string_view(key) == "premise" ? &out.premise
                                                               : &out.hypothesis;
    absl::StatusOr<std::string> attacked = ApplyAttack(*target, spec);
    if (!attacked.ok()) return attacked.status();
    *target = *std::move(attacked);
  }
  return out;
}

std::string AttackParamsJson(const AttackParams& params) {
  OrderedJson p;
  p["aug_p"] = params.aug_p;
  p["aug_word_p"] = params.aug_word_p;
  p["aug_char_p"] = params.aug_char_p;
  p["granularity"] = std::string(GranularityName(params.granularity));
  p["vary_fonts"] = params.vary_fonts;
  return p.dump();
}

absl::StatusOr<AttackParams> ParseAttackParamsJson(
    std::string_view json, const AttackParams& defaults) {
  const OrderedJson p = OrderedJson::parse(json, nullptr, false);
  if (p.is_discarded() || !p.is_object()) {
    return absl::InvalidArgumentError("params must be a JSON object");
  }
  AttackParams out = defaults;
  for (auto [key, field] : {std::pair{"aug_p", &out.aug_p},
                            std::pair{"aug_word_p", &out.aug_word_p},
                            std::pair{"aug_char_p", &out.aug_char_p}}) {
    if (!p.contains(key)) continue;
    if (!p[key].is_number()) {
      return absl::InvalidArgumentError(absl::StrCat(key, " must be a number"));
    }
    *field = p[key].get<double>();
  }
  if (p.contains("granularity")) {
    if (!p["granularity"].is_string()) {
      return absl::InvalidArgumentError("granularity must be a string");
    }
    absl::StatusOr<Granularity> g =
        ParseGranularity(p["granularity"].get<std::string>());
    if (!g.ok()) return g.status();
    out.granularity = *g;
  }
  if (p.contains("vary_fonts")) {
    if (!p["vary_fonts"].is_boolean()) {
      return absl::InvalidArgumentError("vary_fonts must be a boolean");
    }
    out.vary_fonts = p["vary_fonts"].get<bool>();
  }
  if (absl::Status s = ValidateParams(out); !s.ok()) return s;
  return out;
}

std::string AttackMetadataJson(const AttackMetadata& metadata) {
  OrderedJson m;
  m["id"] = metadata.id;
  m["kind"] = std::string(AttackKindName(metadata.kind));
  m["seed"] = metadata.seed;
  m["params"] = OrderedJson::parse(AttackParamsJson(metadata.params));
  return m.dump();
}

absl::StatusOr<AttackMetadata> ParseAttackMetadataJson(std::string_view line) {
  const OrderedJson m = OrderedJson::parse(line, nullptr, false);
  if (m.is_discarded() || !m.is_object() || !m.contains("id") ||
      !m.contains("kind") || !m.contains("seed") || !m.contains("params") ||
      !m["id"].is_string() || !m["kind"].is_string() ||
      !m["seed"].is_number_unsigned()) {
    return absl::InvalidArgumentError("malformed attack metadata");
  }
  AttackMetadata out;
  out.id = m["id"].get<std::string>();
  absl::StatusOr<AttackKind> kind = ParseAttackKind(m["kind"].get<std::string>());
  if (!kind.ok()) return kind.status();
  out.kind = *kind;
  out.seed = m["seed"].get<uint64_t>();
  absl::StatusOr<AttackParams> params =
      ParseAttackParamsJson(m["params"].dump(), AttackParams());
  if (!params.ok()) return params.status();
  out.params = *params;
  return out;
}

absl::StatusOr<size_t> AttackJsonlStream(std::istream& in, std::ostream& out,
                                         std::ostream& metadata,
                                         const CorpusAttackOptions& options) {
  const size_t threads = static_cast<size_t>(std::max(1, options.threads));
  size_t line_no = 0;
  uint64_t index = 0;
  std::vector<std::string> lines;
  std::vector<size_t> line_nos;
  std::vector<LineResult> results;
  std::string line;
  bool eof = false;
  while (!eof) {
    lines.clear();
    line_nos.clear();
    while (lines.size() < kBatchLines) {
      if (!std::getline(in, line)) {
        eof = true;
        break;
      }
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (StripWhitespace(line).empty()) continue;
      lines.push_back(line);
      line_nos.push_back(line_no);
    }
    results.assign(lines.size(), LineResult());
    auto work = [&](size_t first) {
      for (size_t i = first; i < lines.size(); i += threads) {
        results[i] = AttackLine(lines[i], index + i, options);
      }
    };
    if (threads == 1 || lines.size() < 2) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }
    for (size_t i = 0; i < results.size(); ++i) {
      if (!results[i].status.ok()) {
        return absl::Status(results[i].status.code(),
                            absl::StrCat("line ", line_nos[i], ": ",
                                         results[i].status.message()));
      }
      out << results[i].record << '\n';
      metadata << results[i].metadata << '\n';
    }
    index += lines.size();
  }
  return static_cast<size_t>(index);
}

}  // namespace atn
