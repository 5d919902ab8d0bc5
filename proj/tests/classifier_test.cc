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

#include <atomic>
#include <thread>

#include "absl/status/status.h"
#include "atn/http_classifier.h"
#include "gtest/gtest.h"
#include "httplib.h"
#include "json.hpp"

namespace atn {
namespace {

std::unique_ptr<LexiconClassifier> Kill() {
  return *LexiconClassifier::Create({"kill"});
}

TEST(LexiconClassifierTest, OneHitIsHalf) {
  const Prediction p = Kill()->ScoreText("I will kill you");
  EXPECT_EQ(p.label, kPositive);
  EXPECT_DOUBLE_EQ(p.score, 0.5);
}

TEST(LexiconClassifierTest, ZeroWidthHidesWord) {
  const Prediction p = Kill()->ScoreText("k\u200Bill them");
  EXPECT_EQ(p.label, kNegative);
  EXPECT_DOUBLE_EQ(p.score, 0.0);
}

TEST(LexiconClassifierTest, NoHit) {
  const Prediction p = Kill()->ScoreText("hello world");
  EXPECT_EQ(p.label, kNegative);
  EXPECT_DOUBLE_EQ(p.score, 0.0);
}

TEST(LexiconClassifierTest, TokensArePunctuationDelimitedAndCaseFolded) {
  auto c = Kill();
  EXPECT_EQ(c->CountHits("KILL!"), 1u);
  EXPECT_EQ(c->CountHits("(kill),kill."), 2u);
  EXPECT_EQ(c->CountHits("killer skill"), 0u);
  EXPECT_DOUBLE_EQ(c->ScoreText("kill kill kill").score, 1.0);
}

TEST(LexiconClassifierTest, LexiconValidation) {
  EXPECT_FALSE(LexiconClassifier::Create({}).ok());
  EXPECT_FALSE(LexiconClassifier::Create({"two words"}).ok());
  EXPECT_FALSE(LexiconClassifier::Create({"Upper"}).ok());
  absl::StatusOr<std::unique_ptr<LexiconClassifier>> parsed =
      LexiconClassifier::Parse("# comment\nfoo\n\nbar\n");
  ASSERT_TRUE(parsed.ok()) << parsed.status();
  EXPECT_EQ((*parsed)->words().size(), 2u);
}

TEST(LexiconClassifierTest, BuiltinScoresBatchInOrder) {
  auto c = LexiconClassifier::Builtin();
  ASSERT_FALSE(c->words().empty());
  const std::string word = c->words().front();
  std::vector<ClassifierInput> inputs = {{"1", "nice day", "", ""},
                                         {"2", "you " + word, "", ""}};
  auto out = c->ScoreBatch(inputs);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0]->label, kNegative);
  EXPECT_EQ(out[1]->label, kPositive);
}

TEST(PredictionTest, BinaryThreshold) {
  EXPECT_EQ(BinaryPrediction(0.9)->label, kPositive);
  EXPECT_EQ(BinaryPrediction(0.49)->label, kNegative);
  EXPECT_FALSE(BinaryPrediction(1.5).ok());
  EXPECT_FALSE(BinaryPrediction(-0.1).ok());
}

TEST(PredictionTest, NliArgmaxAndTies) {
  EXPECT_EQ(NliPrediction({0.2, 0.5, 0.3})->label, kNeutral);
  EXPECT_EQ(NliPrediction({0.6, 0.1, 0.3})->label, kEntailment);
  EXPECT_EQ(NliPrediction({0.4, 0.2, 0.4})->label, kEntailment);
  EXPECT_EQ(NliPrediction({0.4, 0.4, 0.2})->label, kNeutral);
  EXPECT_EQ(NliPrediction({0.3, 0.35, 0.35})->label, kNeutral);
  EXPECT_FALSE(NliPrediction({0.5, 0.5, 0.5}).ok());
  EXPECT_FALSE(NliPrediction({-0.5, 1.0, 0.5}).ok());
}

TEST(HttpClassifierTest, ParseResponse) {
  auto p = HttpClassifier::ParseResponse(R"({"id":"7","label":"hate","score":0.9})",
                                         "7", Task::kBinary);
  ASSERT_TRUE(p.ok()) << p.status();
  EXPECT_EQ(p->label, kPositive);
  EXPECT_DOUBLE_EQ(p->score, 0.9);
  auto nli = HttpClassifier::ParseResponse(R"({"id":"a","score":[0.2,0.5,0.3]})",
                                           "a", Task::kNli);
  ASSERT_TRUE(nli.ok()) << nli.status();
  EXPECT_EQ(nli->label, kNeutral);
  EXPECT_TRUE(absl::IsDataLoss(
      HttpClassifier::ParseResponse(R"({"id":"8","score":0.9})", "7", Task::kBinary)
          .status()));
  EXPECT_TRUE(absl::IsDataLoss(
      HttpClassifier::ParseResponse("oops", "7", Task::kBinary).status()));
  EXPECT_TRUE(absl::IsDataLoss(
      HttpClassifier::ParseResponse(R"({"id":"7"})", "7", Task::kBinary).status()));
}

TEST(HttpClassifierTest, ErrorClasses) {
  EXPECT_TRUE(HttpClassifier::IsRetriable(absl::UnavailableError("")));
  EXPECT_TRUE(HttpClassifier::IsRetriable(absl::DeadlineExceededError("")));
  EXPECT_TRUE(HttpClassifier::IsRetriable(absl::AbortedError("")));
  EXPECT_FALSE(HttpClassifier::IsRetriable(absl::FailedPreconditionError("")));
  EXPECT_FALSE(HttpClassifier::IsRetriable(absl::DataLossError("")));
}

TEST(HttpClassifierTest, RejectsBadUrl) {
  EXPECT_FALSE(HttpClassifier::Create({.url = "https://example.com"}).ok());
  EXPECT_FALSE(HttpClassifier::Create({.url = "ftp://x"}).ok());
  EXPECT_FALSE(HttpClassifier::Create({.url = "http://"}).ok());
}

// A local endpoint whose behavior each test sets.
class FakeEndpoint {
 public:
  using Handler = std::function<void(const nlohmann::json&, httplib::Response&)>;

  explicit FakeEndpoint(Handler handler) : handler_(std::move(handler)) {
    server_.Post("/score", [this](const httplib::Request& req,
                                  httplib::Response& res) {
      ++requests_;
      handler_(nlohmann::json::parse(req.body), res);
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~FakeEndpoint() {
    server_.stop();
    thread_.join();
  }

  std::string url() const {
    return "http://127.0.0.1:" + std::to_string(port_) + "/score";
  }
  int requests() const { return requests_; }

 private:
  Handler handler_;
  httplib::Server server_;
  std::thread thread_;
  int port_ = -1;
  std::atomic<int> requests_{0};
};

void Reply(const nlohmann::json& req, httplib::Response& res, double score) {
  nlohmann::json out = {{"id", req["id"]}, {"label", "x"}, {"score", score}};
  res.set_content(out.dump(), "application/json");
}

HttpClassifierOptions Options(const std::string& url) {
  HttpClassifierOptions o;
  o.url = url;
  o.backoff_seconds = 0.001;
  o.timeout_seconds = 2;
  return o;
}

TEST(HttpClassifierTest, HealthyEndpointPassesThrough) {
  FakeEndpoint endpoint(
      [](const nlohmann::json& req, httplib::Response& res) { Reply(req, res, 0.9); });
  std::vector<std::string> log;
  std::mutex mu;
  HttpClassifierOptions o = Options(endpoint.url());
  o.log = [&](const std::string& line) {
    std::lock_guard<std::mutex> lock(mu);
    log.push_back(line);
  };
  auto c = HttpClassifier::Create(o);
  ASSERT_TRUE(c.ok()) << c.status();
  auto p = (*c)->Score({"1", "hello", "", ""});
  ASSERT_TRUE(p.ok()) << p.status();
  EXPECT_EQ(p->label, kPositive);
  EXPECT_DOUBLE_EQ(p->score, 0.9);
  ASSERT_EQ(log.size(), 1u);
  EXPECT_NE(log[0].find("latency_ms="), std::string::npos);
}

TEST(HttpClassifierTest, ResponsesMatchedById) {
  // Scores encode the id so a mix-up would show.
  FakeEndpoint endpoint([](const nlohmann::json& req, httplib::Response& res) {
    const int id = std::stoi(req["id"].get<std::string>());
    std::this_thread::sleep_for(std::chrono::milliseconds((id * 7) % 5));
    Reply(req, res, id / 100.0);
  });
  auto c = *HttpClassifier::Create(Options(endpoint.url()));
  std::vector<ClassifierInput> inputs;
  for (int i = 0; i < 40; ++i) inputs.push_back({std::to_string(i), "t", "", ""});
  auto out = c->ScoreBatch(inputs);
  for (int i = 0; i < 40; ++i) {
    ASSERT_TRUE(out[i].ok()) << out[i].status();
    EXPECT_DOUBLE_EQ(out[i]->score, i / 100.0);
  }
}

TEST(HttpClassifierTest, ServerErrorsRetriedThenSucceed) {
  std::atomic<int> calls{0};
  FakeEndpoint endpoint([&](const nlohmann::json& req, httplib::Response& res) {
    if (++calls < 3) {
      res.status = 503;
      return;
    }
    Reply(req, res, 0.2);
  });
  auto c = *HttpClassifier::Create(Options(endpoint.url()));
  auto p = c->Score({"1", "x", "", ""});
  ASSERT_TRUE(p.ok()) << p.status();
  EXPECT_EQ(endpoint.requests(), 3);
}

TEST(HttpClassifierTest, ClientErrorIsTerminal) {
  FakeEndpoint endpoint(
      [](const nlohmann::json&, httplib::Response& res) { res.status = 400; });
  auto c = *HttpClassifier::Create(Options(endpoint.url()));
  auto p = c->Score({"1", "x", "", ""});
  EXPECT_TRUE(absl::IsFailedPrecondition(p.status())) << p.status();
  EXPECT_EQ(endpoint.requests(), 1);
}

TEST(HttpClassifierTest, SchemaMismatchIsTerminal) {
  FakeEndpoint endpoint([](const nlohmann::json&, httplib::Response& res) {
    res.set_content(R"({"id":"other","score":0.1})", "application/json");
  });
  auto c = *HttpClassifier::Create(Options(endpoint.url()));
  EXPECT_TRUE(absl::IsDataLoss(c->Score({"1", "x", "", ""}).status()));
  EXPECT_EQ(endpoint.requests(), 1);
}

TEST(HttpClassifierTest, TimeoutRetriedThenReported) {
  FakeEndpoint endpoint([](const nlohmann::json& req, httplib::Response& res) {
    std::this_thread::sleep_for(std::chrono::milliseconds(400));
    Reply(req, res, 0.1);
  });
  HttpClassifierOptions o = Options(endpoint.url());
  o.timeout_seconds = 0.1;
  auto c = *HttpClassifier::Create(o);
  auto p = c->Score({"1", "x", "", ""});
  EXPECT_TRUE(absl::IsDeadlineExceeded(p.status())) << p.status();
  EXPECT_EQ(endpoint.requests(), 3);
}

TEST(HttpClassifierTest, UnreachableIsUnavailable) {
  // Nothing listens on port 1.
  auto c = *HttpClassifier::Create(Options("http://127.0.0.1:1/score"));
  const absl::Status s = c->Score({"1", "x", "", ""}).status();
  EXPECT_TRUE(absl::IsUnavailable(s)) << s;
}

TEST(HttpClassifierTest, NliPayloadShape) {
  FakeEndpoint endpoint([](const nlohmann::json& req, httplib::Response& res) {
    const bool ok = req.contains("premise") && req.contains("hypothesis") &&
                    !req.contains("text");
    nlohmann::json out = {{"id", req["id"]},
                          {"score", ok ? nlohmann::json{0.2, 0.5, 0.3}
                                       : nlohmann::json{1, 0, 0}}};
    res.set_content(out.dump(), "application/json");
  });
  HttpClassifierOptions o = Options(endpoint.url());
  o.task = Task::kNli;
  auto c = *HttpClassifier::Create(o);
  auto p = c->Score({"1", "", "p", "h"});
  ASSERT_TRUE(p.ok()) << p.status();
  EXPECT_EQ(p->label, kNeutral);
}

}  // namespace
}  // namespace atn
