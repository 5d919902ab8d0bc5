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

#ifndef ATN_CLASSIFIER_H_
#define ATN_CLASSIFIER_H_

#include <array>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/container/flat_hash_set.h"
#include "absl/status/statusor.h"
#include "atn/records.h"

namespace atn {

// Binary: `score` is the positive-class probability and `distribution` holds
// {1 - score, score}. NLI: `distribution` is over
// {entailment, neutral, contradiction} and `score` is its maximum.
struct Prediction {
  Task task = Task::kBinary;
  int label = kNegative;
  double score = 0;
  std::array<double, 3> distribution = {1, 0, 0};
};

// Positive iff score >= 0.5. InvalidArgument unless score is in [0, 1].
absl::StatusOr<Prediction> BinaryPrediction(double score);
// Argmax; ties go to neutral, then to the lower index. InvalidArgument
// unless every entry is in [0, 1] and the sum is 1 within 1e-9.
absl::StatusOr<Prediction> NliPrediction(const std::array<double, 3>& dist);

struct ClassifierInput {
  std::string id;
  std::string text;        // binary
  std::string premise;     // nli
  std::string hypothesis;  // nli
};

ClassifierInput InputFor(const EvalRecord& record);

class Classifier {
 public:
  virtual ~Classifier() = default;

  virtual const std::string& name() const = 0;
  virtual Task task() const = 0;
  // "builtin_lexicon" or "external_http".
  virtual std::string_view backend() const = 0;

  // One result per input, in input order.
  virtual std::vector<absl::StatusOr<Prediction>> ScoreBatch(
      std::span<const ClassifierInput> inputs) = 0;

  absl::StatusOr<Prediction> Score(const ClassifierInput& input);
};

// Flags text containing any lexicon word as a token. Tokens are maximal
// runs of codepoints that are neither whitespace nor punctuation, compared
// after ASCII lower-casing; score = min(1, hits / 2). Binary only.
class LexiconClassifier : public Classifier {
 public:
  // InvalidArgument for an empty lexicon or a word that is not a single
  // lowercase token.
  static absl::StatusOr<std::unique_ptr<LexiconClassifier>> Create(
      std::vector<std::string> words, std::string name = "toy_lexicon");
  // One word per line; '#' starts a comment line.
  static absl::StatusOr<std::unique_ptr<LexiconClassifier>> Parse(
      std::string_view contents, std::string name = "toy_lexicon");
  static absl::StatusOr<std::unique_ptr<LexiconClassifier>> LoadFile(
      const std::string& path, std::string name = "toy_lexicon");
  // The shipped demo lexicon.
  static std::unique_ptr<LexiconClassifier> Builtin();

  const std::string& name() const override { return name_; }
  Task task() const override { return Task::kBinary; }
  std::string_view backend() const override { return "builtin_lexicon"; }

  std::vector<absl::StatusOr<Prediction>> ScoreBatch(
      std::span<const ClassifierInput> inputs) override;

  Prediction ScoreText(std::string_view text) const;
  size_t CountHits(std::string_view text) const;
  const std::vector<std::string>& words() const { return words_; }

 private:
  LexiconClassifier(std::vector<std::string> words, std::string name);

  std::vector<std::string> words_;
  absl::flat_hash_set<std::string> lookup_;
  std::string name_;
};

}  // namespace atn

#endif  // ATN_CLASSIFIER_H_
