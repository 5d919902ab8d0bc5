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

#ifndef ATN_HTTP_CLASSIFIER_H_
#define ATN_HTTP_CLASSIFIER_H_

#include <functional>
#include <memory>
#include <string>

#include "absl/status/statusor.h"
#include "atn/classifier.h"

namespace atn {

struct HttpClassifierOptions {
  std::string url;  // http://host[:port][/path]
  Task task = Task::kBinary;
  std::string name = "external";
  int max_attempts = 3;
  int max_in_flight = 8;
  double timeout_seconds = 10;
  double backoff_seconds = 0.05;  // doubles after every failed attempt
  // Receives one line per request attempt: id, status, latency.
  std::function<void(const std::string&)> log;
};

// Client for an external model endpoint speaking
//   POST {"id", "text"} or {"id", "premise", "hypothesis"}
//   -> {"id", "label"?, "score"}
// where score is a number for binary tasks and a 3-element distribution for
// nli. The label is recomputed from the score.
//
// Error classes: Unavailable (connection failure), DeadlineExceeded
// (timeout), Aborted (HTTP 5xx or 429) are retried; FailedPrecondition
// (other non-2xx) and DataLoss (response schema mismatch) are not.
class HttpClassifier : public Classifier {
 public:
  static absl::StatusOr<std::unique_ptr<HttpClassifier>> Create(
      HttpClassifierOptions options);

  const std::string& name() const override { return options_.name; }
  Task task() const override { return options_.task; }
  std::string_view backend() const override { return "external_http"; }

  // Up to max_in_flight concurrent requests; each response is matched to
  // its request by id.
  std::vector<absl::StatusOr<Prediction>> ScoreBatch(
      std::span<const ClassifierInput> inputs) override;

  // Parses one response body for the request with `id`.
  static absl::StatusOr<Prediction> ParseResponse(std::string_view body,
                                                  std::string_view id,
                                                  Task task);
  static bool IsRetriable(const absl::Status& status);

 private:
  HttpClassifier(HttpClassifierOptions options, std::string origin,
                 std::string path);

  absl::StatusOr<Prediction> ScoreOne(const ClassifierInput& input) const;

  HttpClassifierOptions options_;
  std::string origin_;
  std::string path_;
};

}  // namespace atn

#endif  // ATN_HTTP_CLASSIFIER_H_
