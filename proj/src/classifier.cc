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

#include "atn/classifier.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "atn/builtin_data.h"
#include "atn/file_util.h"
#include "atn/mappings.h"
#include "atn/utf8.h"
#include "strings_internal.h"

namespace atn {

absl::StatusOr<Prediction> BinaryPrediction(double score) {
  if (!(score >= 0.0 && score <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("binary score must be in [0, 1], got ", score));
  }
  Prediction p;
  p.task = Task::kBinary;
  p.score = score;
  p.label = score >= 0.5 ? kPositive : kNegative;
  p.distribution = {1.0 - score, score, 0.0};
  return p;
}

absl::StatusOr<Prediction> NliPrediction(const std::array<double, 3>& dist) {
  double sum = 0;
  for (double d : dist) {
    if (!(d >= 0.0 && d <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("nli probabilities must be in [0, 1], got ", d));
    }
    sum += d;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    return absl::InvalidArgumentError(
        absl::StrCat("nli probabilities must sum to 1, got ", sum));
  }
  Prediction p;
  p.task = Task::kNli;
  p.distribution = dist;
  p.label = kNeutral;
  for (int i : {kEntailment, kContradiction}) {
    if (dist[i] > dist[p.label]) {
      p.label = i;
    } else if (dist[i] == dist[p.label] && p.label != kNeutral && i < p.label) {
      p.label = i;
    }
  }
  p.score = dist[p.label];
  return p;
}

ClassifierInput InputFor(const EvalRecord& record) {
  return {record.id, record.text, record.premise, record.hypothesis};
}

absl::StatusOr<Prediction> Classifier::Score(const ClassifierInput& input) {
  std::vector<absl::StatusOr<Prediction>> out =
      ScoreBatch(std::span<const ClassifierInput>(&input, 1));
  return std::move(out[0]);
}

LexiconClassifier::LexiconClassifier(std::vector<std::string> words,
                                     std::string name)
    : words_(std::move(words)),
      lookup_(words_.begin(), words_.end()),
      name_(std::move(name)) {}

absl::StatusOr<std::unique_ptr<LexiconClassifier>> LexiconClassifier::Create(
    std::vector<std::string> words, std::string name) {
  if (words.empty()) {
    return absl::InvalidArgumentError("classifier lexicon is empty");
  }
  std::vector<std::string> unique;
  absl::flat_hash_set<std::string> seen;
  for (std::string& w : words) {
    bool ok = !w.empty();
    for (char c : w) {
      ok = ok && ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'));
    }
    if (!ok) {
      return absl::InvalidArgumentError(absl::StrCat(
          "lexicon word '", w, "' must be lowercase ASCII letters or digits"));
    }
    if (seen.insert(w).second) unique.push_back(std::move(w));
  }
  return std::unique_ptr<LexiconClassifier>(
      new LexiconClassifier(std::move(unique), std::move(name)));
}

absl::StatusOr<std::unique_ptr<LexiconClassifier>> LexiconClassifier::Parse(
    std::string_view contents, std::string name) {
  std::vector<std::string> words;
  for (std::string_view line : SplitLines(contents)) {
    line = StripWhitespace(line);
    if (line.empty() || line[0] == '#') continue;
    words.emplace_back(line);
  }
  return Create(std::move(words), std::move(name));
}

absl::StatusOr<std::unique_ptr<LexiconClassifier>> LexiconClassifier::LoadFile(
    const std::string& path, std::string name) {
  absl::StatusOr<std::string> contents = ReadFile(path);
  if (!contents.ok()) return contents.status();
  auto parsed = Parse(*contents, std::move(name));
  if (!parsed.ok()) {
    return absl::Status(parsed.status().code(),
                        absl::StrCat(path, ": ", parsed.status().message()));
  }
  return parsed;
}

std::unique_ptr<LexiconClassifier> LexiconClassifier::Builtin() {
  auto parsed = Parse(*BuiltinData("classifier_lexicon.txt"));
  if (!parsed.ok()) {
    std::fprintf(stderr, "atn: bad builtin classifier lexicon: %s\n",
                 std::string(parsed.status().message()).c_str());
    std::abort();
  }
  return *std::move(parsed);
}

size_t LexiconClassifier::CountHits(std::string_view text) const {
  absl::StatusOr<std::u32string> decoded = DecodeUtf8(text);
  if (!decoded.ok()) return 0;
  const CharClassSet& classes = *BuiltinCharClasses();
  size_t hits = 0;
  std::string token;
  auto flush = [&] {
    if (!token.empty() && lookup_.contains(token)) ++hits;
    token.clear();
  };
  for (char32_t c : *decoded) {
    const CharClass cls = classes.Classify(c);
    if (cls == CharClass::kWhitespace || cls == CharClass::kPunctuation) {
      flush();
    } else {
      AppendUtf8(AsciiToLower(c), &token);
    }
  }
  flush();
  return hits;
}

Prediction LexiconClassifier::ScoreText(std::string_view text) const {
  const double score = std::min(1.0, static_cast<double>(CountHits(text)) / 2);
  return *BinaryPrediction(score);
}

std::vector<absl::StatusOr<Prediction>> LexiconClassifier::ScoreBatch(
    std::span<const ClassifierInput> inputs) {
  std::vector<absl::StatusOr<Prediction>> out;
  out.reserve(inputs.size());
  for (const ClassifierInput& input : inputs) {
    if (!IsValidUtf8(input.text)) {
      out.push_back(absl::InvalidArgumentError("text is not valid UTF-8"));
    } else {
      out.push_back(ScoreText(input.text));
    }
  }
  return out;
}

}  // namespace atn
