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

#include "atn/bench.h"

#include <algorithm>
#include <cmath>

#include "atn/normalizer.h"
#include "atn/utf8.h"
#include "gtest/gtest.h"

namespace atn {
namespace {

const std::string kCorpus = std::string(ATN_SOURCE_DIR) + "/data/bench_corpus.jsonl";

TEST(BenchTest, ShippedCorpusShape) {
  absl::StatusOr<std::vector<std::string>> texts = LoadBenchCorpus(kCorpus);
  ASSERT_TRUE(texts.ok()) << texts.status();
  EXPECT_GE(texts->size(), 1000u);
  const Normalizer n = *Normalizer::Create(NormalizerConfig::Default());
  BenchResult r = ThroughputBench(*texts, n, 1);
  EXPECT_GE(r.mean_codepoints, 80.0);
  EXPECT_LE(r.mean_codepoints, 120.0);
  EXPECT_EQ(r.texts, texts->size());
}

TEST(BenchTest, MedianOfRuns) {
  const Normalizer n = *Normalizer::Create(NormalizerConfig::Default());
  std::vector<std::string> texts(200, "T\u200Bhis i.s a.u.g.m.e.n.t.e.d text");
  BenchResult r = ThroughputBench(texts, n, 5);
  ASSERT_EQ(r.rates.size(), 5u);
  std::vector<double> sorted = r.rates;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_DOUBLE_EQ(r.median_rate, sorted[2]);
  EXPECT_GT(r.median_rate, 0);
}

TEST(BenchTest, EmptyStringsGiveFiniteRate) {
  const Normalizer n = *Normalizer::Create(NormalizerConfig::Default());
  BenchResult r = ThroughputBench(std::vector<std::string>(1000, ""), n, 3);
  EXPECT_TRUE(std::isfinite(r.median_rate));
  EXPECT_GT(r.median_rate, 0);
  EXPECT_DOUBLE_EQ(r.mean_codepoints, 0);
  EXPECT_TRUE(std::isfinite(ThroughputBench({}, n, 1).median_rate));
}

TEST(BenchTest, LoadErrors) {
  EXPECT_FALSE(LoadBenchCorpus("/nonexistent/corpus.jsonl").ok());
}

}  // namespace
}  // namespace atn
