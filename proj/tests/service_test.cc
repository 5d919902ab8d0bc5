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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "atn/attacks.h"
#include "atn/classifier.h"
#include "atn/normalizer.h"
#include "atn/version.h"
#include "gtest/gtest.h"
#include "httplib.h"
#include "json.hpp"

namespace atn {
namespace {

using Json = nlohmann::json;

std::unique_ptr<const ServiceState> DefaultState(
    std::shared_ptr<Classifier> classifier = nullptr) {
  auto state = std::make_unique<ServiceState>(ServiceState{
      *Normalizer::Create(NormalizerConfig::Default()),
      classifier ? std::move(classifier)
                 : std::shared_ptr<Classifier>(*LexiconClassifier::Create({"kill"}))});
  return state;
}

class ServiceTest : public ::testing::Test {
 protected:
  ServiceTest() : service_(ServiceOptions{}) { service_.SetState(DefaultState()); }

  Json Post(std::string_view path, const Json& body, int expected = 200) {
    HttpResponse r = service_.Handle("POST", path, body.dump());
    EXPECT_EQ(r.status, expected) << r.body;
    return Json::parse(r.body);
  }

  Service service_;
};

TEST_F(ServiceTest, NormalizeTableRow) {
  Json r = Post("/normalize",
                {{"text", "T\u200Bh\u200Bis is aug\u2060mented te\uFEFFxt"}});
  EXPECT_EQ(r["normalized"], "This is augmented text");
  ASSERT_FALSE(r["edits"].empty());
  EXPECT_EQ(r["edits"][0]["pass"], "zero_width");
  EXPECT_EQ(r["edits"][0]["start"], 1);
  EXPECT_EQ(r["edits"][0]["end"], 2);
  EXPECT_EQ(r["edits"][0]["replacement"], "");
}

TEST_F(ServiceTest, NormalizeEmptyAndNoPasses) {
  EXPECT_EQ(Post("/normalize", {{"text", ""}}),
            Json::parse(R"({"normalized":"","edits":[]})"));
  const std::string text = "Th.i.s i\u200Bs ｔｅｘｔ";
  Json r = Post("/normalize", {{"text", text}, {"passes", Json::array()}});
  EXPECT_EQ(r["normalized"], text);
  EXPECT_TRUE(r["edits"].empty());
  r = Post("/normalize", {{"text", text}, {"passes", {"zero_width"}}});
  EXPECT_EQ(r["normalized"], "Th.i.s is ｔｅｘｔ");
}

TEST_F(ServiceTest, NormalizeErrors) {
  EXPECT_EQ(service_.Handle("POST", "/normalize", "{oops").status, 400);
  EXPECT_EQ(service_.Handle("POST", "/normalize", "[]").status, 400);
  Post("/normalize", {{"txt", "x"}}, 400);
  Post("/normalize", {{"text", "x"}, {"passes", {"bogus"}}}, 422);
  EXPECT_EQ(service_.Handle("POST", "/normalize", "{\"text\":\"\xff\"}").status, 400);
  const std::string big = Json{{"text", std::string(70 * 1024, 'a')}}.dump();
  EXPECT_EQ(service_.Handle("POST", "/normalize", big).status, 413);
}

TEST_F(ServiceTest, AttackIsReproducible) {
  Json req = {{"text", "This is augmented text"},
              {"kind", "merge_words"},
              {"seed", 1},
              {"params", {{"aug_word_p", 0.3}}}};
  Json a = Post("/attack", req);
  EXPECT_EQ(a["attacked"], "Thisis augmented text");
  EXPECT_EQ(a["seed_used"], 1);
  EXPECT_DOUBLE_EQ(a["params_used"]["aug_word_p"].get<double>(), 0.3);
  EXPECT_EQ(Post("/attack", req), a);
}

TEST_F(ServiceTest, AttackDrawsSeedWhenOmitted) {
  Json a = Post("/attack", {{"text", "This is augmented text"},
                            {"kind", "insert_zero_width_chars"}});
  ASSERT_TRUE(a["seed_used"].is_number_unsigned());
  EXPECT_LT(a["seed_used"].get<uint64_t>(), uint64_t{1} << 53);
  Json again = Post("/attack", {{"text", "This is augmented text"},
                                {"kind", "insert_zero_width_chars"},
                                {"seed", a["seed_used"]}});
  EXPECT_EQ(again["attacked"], a["attacked"]);
  EXPECT_EQ(again["params_used"], a["params_used"]);
}

TEST_F(ServiceTest, AttackUnknownKindListsKinds) {
  Json r = Post("/attack", {{"text", "x"}, {"kind", "bogus"}}, 422);
  ASSERT_EQ(r["kinds"].size(), kAllAttackKinds.size());
  EXPECT_EQ(r["kinds"][0], "insert_punctuation_chars");
  Post("/attack", {{"kind", "merge_words"}}, 400);
  Post("/attack", {{"text", "x"}, {"kind", "merge_words"}, {"params", {{"aug_p", 3}}}},
       422);
}

TEST_F(ServiceTest, AttackThenNormalizeRoundTrips) {
  const std::string text = "people should never be treated like that";
  for (int seed = 0; seed < 50; ++seed) {
    Json a = Post("/attack", {{"text", text},
                              {"kind", "insert_zero_width_chars"},
                              {"seed", seed}});
    Json n = Post("/normalize", {{"text", a["attacked"]}});
    EXPECT_EQ(n["normalized"], text) << seed;
  }
}

TEST_F(ServiceTest, ScoreRawAndNormalized) {
  Json r = Post("/score", {{"text", "I will kill you"}});
  EXPECT_EQ(r["raw"]["label"], "positive");
  EXPECT_DOUBLE_EQ(r["raw"]["score"].get<double>(), 0.5);
  EXPECT_FALSE(r.contains("normalized"));

  r = Post("/score", {{"text", "I will k\u200Bill you"}, {"normalize", true}});
  EXPECT_EQ(r["raw"]["label"], "negative");
  EXPECT_EQ(r["normalized"]["label"], "positive");
  EXPECT_EQ(r["normalized_text"], "I will kill you");
}

TEST_F(ServiceTest, ScoreErrors) {
  Post("/score", {{"normalize", true}}, 400);
  Post("/score", {{"premise", "a"}, {"hypothesis", "b"}}, 422);
  Post("/score", {{"text", "x"}, {"classifier", "other"}}, 422);
  Post("/score", {{"text", 5}}, 400);
}

// Always fails like an unreachable endpoint.
class DownClassifier : public Classifier {
 public:
  const std::string& name() const override { return name_; }
  Task task() const override { return Task::kBinary; }
  std::string_view backend() const override { return "external_http"; }
  std::vector<absl::StatusOr<Prediction>> ScoreBatch(
      std::span<const ClassifierInput> inputs) override {
    return std::vector<absl::StatusOr<Prediction>>(
        inputs.size(), absl::UnavailableError("connection refused"));
  }

 private:
  std::string name_ = "down";
};

TEST(ServiceStateTest, ScoreClassifierDownIs503) {
  Service service{ServiceOptions{}};
  service.SetState(DefaultState(std::make_shared<DownClassifier>()));
  EXPECT_EQ(service.Handle("POST", "/score", R"({"text":"x"})").status, 503);
}

TEST(ServiceStateTest, HealthBeforeAndAfterLoad) {
  Service service{ServiceOptions{}};
  HttpResponse before = service.Handle("GET", "/health", "");
  EXPECT_EQ(before.status, 503);
  EXPECT_EQ(service.Handle("POST", "/normalize", R"({"text":"x"})").status, 503);
  service.SetState(DefaultState());
  HttpResponse after = service.Handle("GET", "/health", "");
  ASSERT_EQ(after.status, 200);
  Json j = Json::parse(after.body);
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["version"], std::string(Version()));
  EXPECT_EQ(j["tables_loaded"], true);
}

TEST(ServiceStateTest, UnknownRouteIs404) {
  Service service{ServiceOptions{}};
  service.SetState(DefaultState());
  EXPECT_EQ(service.Handle("GET", "/normalize", "").status, 404);
  EXPECT_EQ(service.Handle("POST", "/nope", "{}").status, 404);
}

TEST(ServiceSessionTest, AppendOnlyBoundedLog) {
  const std::string log_path = ::testing::TempDir() + "/atn_session.jsonl";
  std::remove(log_path.c_str());
  ServiceOptions options;
  options.max_session_attempts = 3;
  options.session_log_path = log_path;
  Service service(options);
  service.SetState(DefaultState());
  for (int i = 0; i < 3; ++i) {
    Json req = {{"text", "k\u200Bill " + std::to_string(i)},
                {"normalize", true},
                {"session_id", "s1"}};
    HttpResponse r = service.Handle("POST", "/score", req.dump());
    ASSERT_EQ(r.status, 200) << r.body;
    EXPECT_EQ(Json::parse(r.body)["session_attempts"], i + 1);
  }
  EXPECT_EQ(service
                .Handle("POST", "/score",
                        R"({"text":"x","session_id":"s1"})")
                .status,
            429);
  HttpResponse log = service.Handle("GET", "/session/s1", "");
  ASSERT_EQ(log.status, 200);
  EXPECT_EQ(log.content_type, "application/x-ndjson");
  std::vector<Json> lines;
  std::istringstream in(log.body);
  for (std::string line; std::getline(in, line);) lines.push_back(Json::parse(line));
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0]["input"], "k\u200Bill 0");
  EXPECT_EQ(lines[0]["normalized"], "kill 0");
  EXPECT_EQ(lines[0]["raw"]["label"], "negative");
  EXPECT_EQ(lines[0]["normalized_score"]["label"], "positive");
  EXPECT_FALSE(lines[0]["timestamp"].get<std::string>().empty());
  EXPECT_EQ(service.Handle("GET", "/session/none", "").status, 404);

  std::ifstream file(log_path);
  std::string persisted((std::istreambuf_iterator<char>(file)), {});
  EXPECT_EQ(persisted, log.body);
}

TEST(ServiceSocketTest, ServesOverHttp) {
  ServiceOptions options;
  options.port = 0;
  Service service(options);
  service.SetState(DefaultState());
  absl::StatusOr<int> port = service.Start();
  ASSERT_TRUE(port.ok()) << port.status();
  httplib::Client client("127.0.0.1", *port);

  auto health = client.Get("/health");
  ASSERT_TRUE(health);
  EXPECT_EQ(health->status, 200);
  EXPECT_EQ(health->get_header_value("Access-Control-Allow-Origin"), "*");

  auto options_res = client.Options("/normalize");
  ASSERT_TRUE(options_res);
  EXPECT_EQ(options_res->status, 204);

  // Concurrent requests.
  std::vector<std::thread> threads;
  std::atomic<int> ok{0};
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      httplib::Client c("127.0.0.1", *port);
      for (int i = 0; i < 10; ++i) {
        auto r = c.Post("/normalize",
                        Json{{"text", "Th.i.s " + std::to_string(t)}}.dump(),
                        "application/json");
        if (r && r->status == 200 &&
            Json::parse(r->body)["normalized"] == "This " + std::to_string(t)) {
          ++ok;
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(ok, 40);

  auto big = client.Post("/normalize", std::string(70 * 1024, 'a'), "application/json");
  ASSERT_TRUE(big);
  EXPECT_EQ(big->status, 413);
  service.Stop();
}

}  // namespace
}  // namespace atn
