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

#include "atn/service.h"

#include <chrono>
#include <fstream>

#include "absl/strings/str_cat.h"
#include "absl/time/clock.h"
#include "absl/time/time.h"
#include "atn/attacks.h"
#include "atn/corpus_attack.h"
#include "atn/mappings.h"
#include "atn/version.h"
#include "httplib.h"
#include "json.hpp"
#include "strings_internal.h"

namespace atn {
namespace {

using Json = nlohmann::ordered_json;

HttpResponse JsonResponse(int status, const Json& body) {
  return {status, body.dump(), "application/json"};
}

HttpResponse Error(int status, std::string_view message) {
  Json body;
  body["error"] = std::string(message);
  return JsonResponse(status, body);
}

Json EditsJson(const std::vector<Edit>& edits) {
  Json out = Json::array();
  for (const Edit& e : edits) {
    Json j;
    j["start"] = e.start;
    j["end"] = e.end;
    j["replacement"] = e.replacement;
    j["pass"] = std::string(PassName(e.pass));
    out.push_back(std::move(j));
  }
  return out;
}

Json PredictionJson(const Prediction& p) {
  Json j;
  j["label"] = std::string(LabelName(p.task, p.label));
  j["score"] = p.score;
  if (p.task == Task::kNli) {
    j["distribution"] = {p.distribution[0], p.distribution[1], p.distribution[2]};
  }
  return j;
}

int StatusToHttp(const absl::Status& s) {
  if (absl::IsUnavailable(s) || absl::IsDeadlineExceeded(s) ||
      absl::IsAborted(s)) {
    return 503;
  }
  if (absl::IsInvalidArgument(s) || absl::IsFailedPrecondition(s) ||
      absl::IsDataLoss(s)) {
    return 422;
  }
  return 500;
}

// Parses a request body into an object; 400 on failure.
bool ParseBody(std::string_view body, Json* out, HttpResponse* error) {
  *out = Json::parse(body, nullptr, false);
  if (out->is_discarded() || !out->is_object()) {
    *error = Error(400, "body must be a JSON object");
    return false;
  }
  return true;
}

}  // namespace

std::string NormalizeResponseBody(const NormalizationResult& result) {
  Json out;
  out["normalized"] = result.output;
  out["edits"] = EditsJson(result.edits);
  return out.dump();
}

Service::Service(ServiceOptions options) : options_(std::move(options)) {}

Service::~Service() { Stop(); }

void Service::SetState(std::unique_ptr<const ServiceState> state) {
  state_ = std::move(state);
  ready_.store(true, std::memory_order_release);
}

HttpResponse Service::Handle(std::string_view method, std::string_view path,
                             std::string_view body) {
  if (body.size() > options_.max_body_bytes) {
    return Error(413, absl::StrCat("body exceeds ", options_.max_body_bytes,
                                   " bytes"));
  }
  if (method == "GET" && path == "/health") return Health();
  if (!ready_.load(std::memory_order_acquire)) {
    return Error(503, "service is starting");
  }
  if (method == "POST") {
    if (path == "/normalize") return Normalize(body);
    if (path == "/attack") return Attack(body);
    if (path == "/score") return Score(body);
  }
  if (method == "GET" && path.starts_with("/session/")) {
    return Session(path.substr(std::string_view("/session/").size()));
  }
  return Error(404, absl::StrCat("no route for ", AV(method), " ", AV(path)));
}

HttpResponse Service::Health() const {
  Json j;
  if (!ready_.load(std::memory_order_acquire)) {
    j["status"] = "starting";
    j["version"] = std::string(Version());
    j["tables_loaded"] = false;
    return JsonResponse(503, j);
  }
  const NormalizerConfig& config = state_->normalizer.config();
  j["status"] = "ok";
  j["version"] = std::string(Version());
  j["tables_loaded"] = true;
  Json tables = Json::object();
  if (config.confusables) {
    tables["confusables"] = config.confusables->version();
    tables["confusable_entries"] = config.confusables->size();
  }
  if (config.char_classes) tables["char_classes"] = config.char_classes->version();
  j["tables"] = tables;
  j["classifier"] = state_->classifier ? Json(state_->classifier->name()) : Json();
  return JsonResponse(200, j);
}

HttpResponse Service::Normalize(std::string_view body) const {
  Json req;
  HttpResponse error;
  if (!ParseBody(body, &req, &error)) return error;
  if (!req.contains("text") || !req["text"].is_string()) {
    return Error(400, "missing string field 'text'");
  }
  const Normalizer* normalizer = &state_->normalizer;
  std::optional<Normalizer> custom;
  if (req.contains("passes")) {
    if (!req["passes"].is_array()) return Error(400, "'passes' must be an array");
    std::string list;
    for (const Json& p : req["passes"]) {
      if (!p.is_string()) return Error(400, "'passes' must hold strings");
      absl::StatusOr<Pass> pass = ParsePass(p.get<std::string>());
      if (!pass.ok()) return Error(422, SV(pass.status().message()));
      absl::StrAppend(&list, AV(PassName(*pass)), ",");
    }
    NormalizerConfig config = normalizer->config();
    config.enabled_passes = *ParsePassList(list);
    absl::StatusOr<Normalizer> n = Normalizer::Create(std::move(config));
    if (!n.ok()) return Error(422, SV(n.status().message()));
    custom = *std::move(n);
    normalizer = &*custom;
  }
  absl::StatusOr<NormalizationResult> r =
      normalizer->Normalize(req["text"].get<std::string>());
  if (!r.ok()) return Error(400, SV(r.status().message()));
  return {200, NormalizeResponseBody(*r), "application/json"};
}

HttpResponse Service::Attack(std::string_view body) const {
  Json req;
  HttpResponse error;
  if (!ParseBody(body, &req, &error)) return error;
  if (!req.contains("text") || !req["text"].is_string()) {
    return Error(400, "missing string field 'text'");
  }
  if (!req.contains("kind") || !req["kind"].is_string()) {
    return Error(400, "missing string field 'kind'");
  }
  absl::StatusOr<AttackKind> kind = ParseAttackKind(req["kind"].get<std::string>());
  if (!kind.ok()) {
    Json out;
    out["error"] = std::string(kind.status().message());
    out["kinds"] = Json::array();
    for (AttackKind k : kAllAttackKinds) {
      out["kinds"].push_back(std::string(AttackKindName(k)));
    }
    return JsonResponse(422, out);
  }
  AttackSpec spec;
  spec.kind = *kind;
  if (req.contains("seed") && !req["seed"].is_null()) {
    if (!req["seed"].is_number_unsigned()) {
      return Error(400, "'seed' must be a non-negative integer");
    }
    spec.seed = req["seed"].get<uint64_t>();
  } else {
    spec.seed = EntropySeed();
  }
  spec.params = SampleParams(spec.seed);
  if (req.contains("params") && !req["params"].is_null()) {
    absl::StatusOr<AttackParams> params =
        ParseAttackParamsJson(req["params"].dump(), spec.params);
    if (!params.ok()) return Error(422, SV(params.status().message()));
    spec.params = *params;
  }
  absl::StatusOr<std::string> attacked =
      ApplyAttack(req["text"].get<std::string>(), spec);
  if (!attacked.ok()) return Error(400, SV(attacked.status().message()));
  Json out;
  out["attacked"] = *attacked;
  out["kind"] = std::string(AttackKindName(spec.kind));
  out["params_used"] = Json::parse(AttackParamsJson(spec.params));
  out["seed_used"] = spec.seed;
  return JsonResponse(200, out);
}

HttpResponse Service::Score(std::string_view body) {
  Json req;
  HttpResponse error;
  if (!ParseBody(body, &req, &error)) return error;
  Classifier* classifier = state_->classifier.get();
  if (classifier == nullptr) return Error(503, "no classifier configured");
  if (req.contains("classifier") && !req["classifier"].is_null() &&
      req["classifier"] != classifier->name()) {
    return Error(422, absl::StrCat("unknown classifier; this service runs '",
                                   classifier->name(), "'"));
  }
  ClassifierInput input;
  input.id = "1";
  const bool has_text = req.contains("text");
  const bool has_pair = req.contains("premise") || req.contains("hypothesis");
  if (!has_text && !has_pair) {
    return Error(400, "missing 'text' or 'premise' and 'hypothesis'");
  }
  auto string_field = [&](const char* key, std::string* out) {
    if (!req.contains(key) || !req[key].is_string()) return false;
    *out = req[key].get<std::string>();
    return true;
  };
  if (classifier->task() == Task::kBinary) {
    if (!has_text) return Error(422, "binary classifier needs 'text'");
    if (!string_field("text", &input.text)) {
      return Error(400, "'text' must be a string");
    }
  } else {
    if (!has_pair) return Error(422, "nli classifier needs 'premise' and 'hypothesis'");
    if (!string_field("premise", &input.premise) ||
        !string_field("hypothesis", &input.hypothesis)) {
      return Error(400, "'premise' and 'hypothesis' must be strings");
    }
  }
  const bool normalize = req.value("normalize", false);
  std::string session_id;
  if (req.contains("session_id") && !req["session_id"].is_null()) {
    if (!req["session_id"].is_string() || req["session_id"].get<std::string>().empty()) {
      return Error(400, "'session_id' must be a non-empty string");
    }
    session_id = req["session_id"].get<std::string>();
    absl::MutexLock lock(&sessions_mu_);
    auto it = sessions_.find(session_id);
    if (it != sessions_.end() && it->second.size() >= options_.max_session_attempts) {
      return Error(429, "session attempt limit reached");
    }
  }

  absl::StatusOr<Prediction> raw = classifier->Score(input);
  if (!raw.ok()) return Error(StatusToHttp(raw.status()), SV(raw.status().message()));
  Json out;
  out["classifier"] = classifier->name();
  out["raw"] = PredictionJson(*raw);
  ClassifierInput normalized = input;
  if (normalize) {
    for (std::string* field :
         {&normalized.text, &normalized.premise, &normalized.hypothesis}) {
      absl::StatusOr<NormalizationResult> r = state_->normalizer.Normalize(*field);
      if (!r.ok()) return Error(400, SV(r.status().message()));
      *field = std::move(r->output);
    }
    absl::StatusOr<Prediction> after = classifier->Score(normalized);
    if (!after.ok()) {
      return Error(StatusToHttp(after.status()), SV(after.status().message()));
    }
    out["normalized"] = PredictionJson(*after);
    if (classifier->task() == Task::kBinary) {
      out["normalized_text"] = normalized.text;
    } else {
      out["normalized_premise"] = normalized.premise;
      out["normalized_hypothesis"] = normalized.hypothesis;
    }
  }

  if (!session_id.empty()) {
    Json attempt;
    attempt["session_id"] = session_id;
    if (classifier->task() == Task::kBinary) {
      attempt["input"] = input.text;
    } else {
      attempt["premise"] = input.premise;
      attempt["hypothesis"] = input.hypothesis;
    }
    attempt["attack"] = req.contains("attack") ? req["attack"] : Json();
    if (normalize) {
      attempt["normalized"] = classifier->task() == Task::kBinary
                                  ? Json(normalized.text)
                                  : Json(normalized.hypothesis);
    } else {
      attempt["normalized"] = Json();
    }
    attempt["raw"] = out["raw"];
    attempt["normalized_score"] = normalize ? out["normalized"] : Json();
    attempt["timestamp"] = absl::FormatTime(absl::RFC3339_sec, absl::Now(),
                                            absl::UTCTimeZone());
    const std::string line = attempt.dump();
    absl::MutexLock lock(&sessions_mu_);
    std::vector<std::string>& log = sessions_[session_id];
    if (log.size() >= options_.max_session_attempts) {
      return Error(429, "session attempt limit reached");
    }
    log.push_back(line);
    if (!options_.session_log_path.empty()) {
      std::ofstream file(options_.session_log_path, std::ios::app);
      file << line << '\n';
    }
    out["session_attempts"] = log.size();
  }
  return JsonResponse(200, out);
}

HttpResponse Service::Session(std::string_view id) const {
  absl::MutexLock lock(&sessions_mu_);
  auto it = sessions_.find(std::string(id));
  if (it == sessions_.end()) return Error(404, "unknown session");
  std::string body;
  for (const std::string& line : it->second) absl::StrAppend(&body, line, "\n");
  return {200, body, "application/x-ndjson"};
}

void Service::Configure() {
  server_ = std::make_unique<httplib::Server>();
  server_->set_payload_max_length(options_.max_body_bytes);
  server_->set_default_headers(
      {{"Access-Control-Allow-Origin", options_.cors_origin},
       {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
       {"Access-Control-Allow-Headers", "Content-Type"}});
  if (!options_.static_dir.empty()) {
    server_->set_mount_point("/", options_.static_dir);
  }
  auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    HttpResponse r = Handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  for (const char* path : {"/normalize", "/attack", "/score"}) {
    server_->Post(path, forward);
  }
  server_->Get("/health", forward);
  server_->Get(R"(/session/[^/]+)", forward);
  server_->Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
}

absl::Status Service::Bind() {
  Configure();
  if (options_.port == 0) {
    bound_port_ = server_->bind_to_any_port(options_.bind);
  } else if (server_->bind_to_port(options_.bind, options_.port)) {
    bound_port_ = options_.port;
  }
  if (bound_port_ < 0) {
    return absl::UnavailableError(
        absl::StrCat("cannot bind ", options_.bind, ":", options_.port));
  }
  return absl::OkStatus();
}

absl::StatusOr<int> Service::Start() {
  if (absl::Status s = Bind(); !s.ok()) return s;
  thread_ = std::make_unique<std::thread>([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return bound_port_;
}

absl::Status Service::Run() {
  if (absl::Status s = Bind(); !s.ok()) return s;
  if (!server_->listen_after_bind()) {
    return absl::UnavailableError("server stopped unexpectedly");
  }
  return absl::OkStatus();
}

void Service::Stop() {
  if (server_) server_->stop();
  if (thread_ && thread_->joinable()) thread_->join();
  thread_.reset();
}

}  // namespace atn
