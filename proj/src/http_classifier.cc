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

#include "atn/http_classifier.h"

#include <atomic>
#include <chrono>
#include <thread>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "httplib.h"
#include "json.hpp"
#include "strings_internal.h"

namespace atn {
namespace {

using Json = nlohmann::json;

absl::Status TransportError(httplib::Error error) {
  const std::string what = httplib::to_string(error);
  if (error == httplib::Error::Read || error == httplib::Error::ConnectionTimeout) {
    return absl::DeadlineExceededError(absl::StrCat("timed out: ", what));
  }
  return absl::UnavailableError(absl::StrCat("network failure: ", what));
}

absl::Status HttpStatusError(int status, const std::string& body) {
  const std::string msg =
      absl::StrCat("HTTP ", status, ": ", body.substr(0, 200));
  if (status >= 500 || status == 429) return absl::AbortedError(msg);
  return absl::FailedPreconditionError(msg);
}

}  // namespace

HttpClassifier::HttpClassifier(HttpClassifierOptions options,
                               std::string origin, std::string path)
    : options_(std::move(options)),
      origin_(std::move(origin)),
      path_(std::move(path)) {}

absl::StatusOr<std::unique_ptr<HttpClassifier>> HttpClassifier::Create(
    HttpClassifierOptions options) {
  std::string_view url = options.url;
  if (!ConsumePrefix(&url, "http://")) {
    return absl::InvalidArgumentError(absl::StrCat(
        "classifier url must start with http://, got '", options.url, "'"));
  }
  const size_t slash = url.find('/');
  const std::string_view host = url.substr(0, slash);
  if (host.empty()) {
    return absl::InvalidArgumentError("classifier url has no host");
  }
  std::string path =
      slash == std::string_view::npos ? "/" : std::string(url.substr(slash));
  if (options.max_attempts < 1 || options.max_in_flight < 1 ||
      !(options.timeout_seconds > 0)) {
    return absl::InvalidArgumentError(
        "attempts, in-flight limit and timeout must be positive");
  }
  std::string origin = absl::StrCat("http://", AV(host));
  return std::unique_ptr<HttpClassifier>(
      new HttpClassifier(std::move(options), std::move(origin), std::move(path)));
}

bool HttpClassifier::IsRetriable(const absl::Status& status) {
  return absl::IsUnavailable(status) || absl::IsDeadlineExceeded(status) ||
         absl::IsAborted(status);
}

absl::StatusOr<Prediction> HttpClassifier::ParseResponse(std::string_view body,
                                                         std::string_view id,
                                                         Task task) {
  const Json j = Json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    return absl::DataLossError("response is not a JSON object");
  }
  if (!j.contains("id") || !(j["id"].is_string() || j["id"].is_number_integer())) {
    return absl::DataLossError("response has no id");
  }
  const std::string got =
      j["id"].is_string() ? j["id"].get<std::string>() : j["id"].dump();
  if (got != id) {
    return absl::DataLossError(
        absl::StrCat("response id '", got, "' does not match request '", AV(id), "'"));
  }
  if (!j.contains("score")) return absl::DataLossError("response has no score");
  const Json& score = j["score"];
  absl::StatusOr<Prediction> p;
  if (task == Task::kBinary) {
    if (!score.is_number()) {
      return absl::DataLossError("binary score must be a number");
    }
    p = BinaryPrediction(score.get<double>());
  } else {
    if (!score.is_array() || score.size() != 3 ||
        !score[0].is_number() || !score[1].is_number() || !score[2].is_number()) {
      return absl::DataLossError("nli score must be an array of 3 numbers");
    }
    p = NliPrediction({score[0].get<double>(), score[1].get<double>(),
                       score[2].get<double>()});
  }
  if (!p.ok()) return absl::DataLossError(p.status().message());
  return p;
}

absl::StatusOr<Prediction> HttpClassifier::ScoreOne(
    const ClassifierInput& input) const {
  Json request;
  request["id"] = input.id;
  if (options_.task == Task::kBinary) {
    request["text"] = input.text;
  } else {
    request["premise"] = input.premise;
    request["hypothesis"] = input.hypothesis;
  }
  const std::string body = request.dump();

  httplib::Client client(origin_);
  const auto timeout = std::chrono::duration<double>(options_.timeout_seconds);
  client.set_connection_timeout(
      std::chrono::duration_cast<std::chrono::microseconds>(timeout));
  client.set_read_timeout(
      std::chrono::duration_cast<std::chrono::microseconds>(timeout));
  client.set_write_timeout(
      std::chrono::duration_cast<std::chrono::microseconds>(timeout));

  absl::Status last;
  double backoff = options_.backoff_seconds;
  for (int attempt = 1; attempt <= options_.max_attempts; ++attempt) {
    const auto start = std::chrono::steady_clock::now();
    httplib::Result res = client.Post(path_, body, "application/json");
    absl::StatusOr<Prediction> outcome;
    if (!res) {
      outcome = TransportError(res.error());
    } else if (res->status < 200 || res->status >= 300) {
      outcome = HttpStatusError(res->status, res->body);
    } else {
      outcome = ParseResponse(res->body, input.id, options_.task);
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    if (options_.log) {
      options_.log(absl::StrFormat(
          "classifier=%s id=%s attempt=%d status=%s latency_ms=%.1f",
          options_.name, input.id, attempt,
          outcome.ok() ? "OK"
                       : absl::StatusCodeToString(outcome.status().code()),
          ms));
    }
    if (outcome.ok() || !IsRetriable(outcome.status())) return outcome;
    last = outcome.status();
    if (attempt < options_.max_attempts) {
      std::this_thread::sleep_for(std::chrono::duration<double>(backoff));
      backoff *= 2;
    }
  }
  return absl::Status(last.code(),
                      absl::StrCat("after ", options_.max_attempts,
                                   " attempts: ", last.message()));
}

std::vector<absl::StatusOr<Prediction>> HttpClassifier::ScoreBatch(
    std::span<const ClassifierInput> inputs) {
  std::vector<absl::StatusOr<Prediction>> out(
      inputs.size(), absl::UnknownError("not scored"));
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next.fetch_add(1)) < inputs.size();) {
      out[i] = ScoreOne(inputs[i]);
    }
  };
  const size_t workers = std::min<size_t>(
      static_cast<size_t>(options_.max_in_flight), inputs.size());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (size_t t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  return out;
}

}  // namespace atn
