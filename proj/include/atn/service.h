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

#ifndef ATN_SERVICE_H_
#define ATN_SERVICE_H_

#include <atomic>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "absl/base/thread_annotations.h"
#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/synchronization/mutex.h"
#include "atn/classifier.h"
#include "atn/normalizer.h"

namespace httplib {
class Server;
}  // namespace httplib

namespace atn {

struct ServiceOptions {
  std::string bind = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  size_t max_body_bytes = 64 * 1024;
  size_t max_session_attempts = 500;
  std::string cors_origin = "*";
  std::string static_dir;        // served under / when set
  std::string session_log_path;  // JSONL, appended to when set
};

// Immutable after construction; shared by every request.
struct ServiceState {
  Normalizer normalizer;
  std::shared_ptr<Classifier> classifier;  // may be null
};

struct HttpResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// Body of a /normalize response; the CLI's trace lines use the same form.
std::string NormalizeResponseBody(const NormalizationResult& result);

// JSON API over the normalizer, the attack generators and a classifier:
//   POST /normalize  {text, passes?}
//   POST /attack     {text, kind, seed?, params?}
//   POST /score      {text | premise+hypothesis, classifier?, normalize?,
//                     session_id?, attack?}
//   GET  /health
//   GET  /session/<id>  (JSONL attempt log)
class Service {
 public:
  explicit Service(ServiceOptions options);
  ~Service();

  // /health answers 503 until the state is set.
  void SetState(std::unique_ptr<const ServiceState> state);

  // Routing without a socket; used by the server and by tests.
  HttpResponse Handle(std::string_view method, std::string_view path,
                      std::string_view body);

  // Binds and serves on a background thread. Returns the bound port.
  absl::StatusOr<int> Start();
  // Binds and serves on the calling thread until Stop().
  absl::Status Run();
  void Stop();

 private:
  HttpResponse Normalize(std::string_view body) const;
  HttpResponse Attack(std::string_view body) const;
  HttpResponse Score(std::string_view body);
  HttpResponse Health() const;
  HttpResponse Session(std::string_view id) const;

  absl::Status Bind();
  void Configure();

  const ServiceOptions options_;
  std::shared_ptr<const ServiceState> state_;  // set once
  std::atomic<bool> ready_{false};

  mutable absl::Mutex sessions_mu_;
  absl::flat_hash_map<std::string, std::vector<std::string>> sessions_
      ABSL_GUARDED_BY(sessions_mu_);

  std::unique_ptr<httplib::Server> server_;
  int bound_port_ = -1;
  std::unique_ptr<std::thread> thread_;
};

}  // namespace atn

#endif  // ATN_SERVICE_H_
