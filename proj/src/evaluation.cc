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

#include "atn/evaluation.h"

#include <algorithm>
#include <map>
#include <optional>
#include <thread>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "strings_internal.h"

namespace atn {
namespace {

template <typename Fn>
void ParallelFor(size_t n, int threads, Fn fn) {
  const size_t workers = std::min<size_t>(static_cast<size_t>(std::max(1, threads)), n);
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  for (size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      for (size_t i = t; i < n; i += workers) fn(i);
    });
  }
}

absl::StatusOr<EvalRecord> NormalizeRecord(const EvalRecord& record,
                                           const Normalizer& normalizer) {
  EvalRecord out = record;
  for (std::string* field : {&out.text, &out.premise, &out.hypothesis}) {
    absl::StatusOr<NormalizationResult> r = normalizer.Normalize(*field);
    if (!r.ok()) return r.status();
    *field = std::move(r->output);
  }
  return out;
}

absl::StatusOr<ConditionResult> Score(
    const std::vector<EvalRecord>& gold,
    const std::vector<absl::StatusOr<EvalRecord>>& variants,
    const EvalOptions& options, std::string augmentation, bool normalized,
    Classifier& classifier) {
  ConditionResult result;
  result.dataset = options.dataset;
  result.augmentation = std::move(augmentation);
  result.normalized = normalized;
  result.classifier = classifier.name();

  std::vector<ClassifierInput> inputs;
  std::vector<size_t> owners;
  std::vector<std::pair<size_t, absl::Status>> failures;
  for (size_t i = 0; i < variants.size(); ++i) {
    if (variants[i].ok()) {
      inputs.push_back(InputFor(*variants[i]));
      owners.push_back(i);
    } else {
      failures.emplace_back(i, variants[i].status());
    }
  }
  std::vector<absl::StatusOr<Prediction>> predictions =
      classifier.ScoreBatch(inputs);
  for (size_t k = 0; k < predictions.size(); ++k) {
    const size_t i = owners[k];
    if (!predictions[k].ok()) {
      failures.emplace_back(i, predictions[k].status());
      continue;
    }
    ++result.n;
    if (predictions[k]->label == gold[i].gold_label) ++result.correct;
  }
  result.failed = failures.size();

  const std::string condition =
      absl::StrCat(result.augmentation, normalized ? " normalized" : "");
  if (static_cast<double>(failures.size()) >
          options.failure_budget * static_cast<double>(gold.size()) ||
      result.n == 0) {
    std::sort(failures.begin(), failures.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::map<absl::StatusCode, size_t> codes;
    for (const auto& [i, s] : failures) ++codes[s.code()];
    absl::StatusCode dominant = absl::StatusCode::kUnknown;
    size_t best = 0;
    for (const auto& [code, count] : codes) {
      if (count > best) {
        dominant = code;
        best = count;
      }
    }
    std::string first;
    if (!failures.empty()) {
      first = absl::StrCat("; first failure: record ", gold[failures[0].first].id,
                           ": ", failures[0].second.message());
    }
    return absl::Status(
        dominant, absl::StrCat("condition '", condition, "' on ", options.dataset,
                               ": ", failures.size(), " of ", gold.size(),
                               " records failed", first));
  }
  result.metric =
      static_cast<double>(result.correct) / static_cast<double>(result.n);
  return result;
}

uint64_t Fnv1a(std::string_view s, uint64_t h = 0xCBF29CE484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace

absl::StatusOr<std::vector<ConditionResult>> RunMatrix(
    const std::vector<EvalRecord>& records, const EvalOptions& options,
    Classifier& classifier, const Normalizer& normalizer) {
  if (records.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("dataset ", options.dataset, " has no records"));
  }
  for (const EvalRecord& r : records) {
    if (r.task != classifier.task()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "record ", r.id, " is a ", AV(TaskName(r.task)), " record but classifier ",
          classifier.name(), " expects ", AV(TaskName(classifier.task()))));
    }
  }
  const size_t n = records.size();
  std::vector<ConditionResult> rows;
  std::vector<absl::StatusOr<EvalRecord>> plain(n, absl::UnknownError(""));
  std::vector<absl::StatusOr<EvalRecord>> normalized(n, absl::UnknownError(""));

  auto run = [&](std::string augmentation) -> absl::Status {
    absl::StatusOr<ConditionResult> a =
        Score(records, plain, options, augmentation, false, classifier);
    if (!a.ok()) return a.status();
    rows.push_back(*std::move(a));
    absl::StatusOr<ConditionResult> b =
        Score(records, normalized, options, augmentation, true, classifier);
    if (!b.ok()) return b.status();
    rows.push_back(*std::move(b));
    return absl::OkStatus();
  };

  ParallelFor(n, options.threads, [&](size_t i) {
    plain[i] = records[i];
    normalized[i] = NormalizeRecord(records[i], normalizer);
  });
  if (absl::Status s = run(std::string(kBaseline)); !s.ok()) return s;

  for (AttackKind kind : options.attacks) {
    ParallelFor(n, options.threads, [&](size_t i) {
      plain[i] = AttackRecord(records[i], SpecForRecord(options.master_seed, i, kind),
                              options.field);
      normalized[i] = plain[i].ok() ? NormalizeRecord(*plain[i], normalizer)
                                    : plain[i];
    });
    // A selector that does not fit the task is a configuration error.
    for (const auto& p : plain) {
      if (!p.ok() && absl::IsFailedPrecondition(p.status())) return p.status();
    }
    if (absl::Status s = run(std::string(AttackKindName(kind))); !s.ok()) {
      return s;
    }
  }
  return rows;
}

std::string ConfigHash(const NormalizerConfig& normalizer,
                       const std::vector<AttackKind>& attacks,
                       FieldSelector field, const Classifier& classifier,
                       const std::vector<std::string>& datasets) {
  std::string canon;
  absl::StrAppend(&canon, "threshold=", normalizer.interior_punct_threshold,
                  ";url=", normalizer.url_detection, ";passes=");
  for (Pass p : normalizer.enabled_passes) absl::StrAppend(&canon, AV(PassName(p)), ",");
  if (normalizer.confusables) {
    absl::StrAppend(&canon, ";tables=", normalizer.confusables->name(), "@",
                    normalizer.confusables->version(), "#",
                    normalizer.confusables->size());
  }
  if (normalizer.char_classes) {
    absl::StrAppend(&canon, ";classes=", normalizer.char_classes->version());
  }
  absl::StrAppend(&canon, ";lexicon=");
  for (const std::string& w : normalizer.censor_lexicon.words()) {
    absl::StrAppend(&canon, w, ",");
  }
  absl::StrAppend(&canon, ";attacks=");
  for (AttackKind k : attacks) absl::StrAppend(&canon, AV(AttackKindName(k)), ",");
  absl::StrAppend(&canon, ";field=", AV(FieldSelectorName(field)),
                  ";classifier=", classifier.name(), "/",
                  AV(classifier.backend()), "/", AV(TaskName(classifier.task())),
                  ";datasets=");
  for (const std::string& d : datasets) absl::StrAppend(&canon, d, ",");
  return absl::StrFormat("%016x", Fnv1a(canon));
}

}  // namespace atn
