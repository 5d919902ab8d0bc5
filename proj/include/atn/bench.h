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

#ifndef ATN_BENCH_H_
#define ATN_BENCH_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "atn/normalizer.h"

namespace atn {

struct BenchResult {
  double median_rate = 0;  // texts per second
  std::vector<double> rates;
  size_t texts = 0;
  double mean_codepoints = 0;
};

// Single-threaded normalize over `texts`, `runs` times; reports the median
// rate. Each run repeats the corpus until it lasts at least 50 ms. An empty corpus gives a rate of 0.
BenchResult ThroughputBench(const std::vector<std::string>& texts,
                            const Normalizer& normalizer, int runs = 5);

// Bench corpus: one JSON object per line with a "text" field, or plain
// text lines when a line does not start with '{'.
absl::StatusOr<std::vector<std::string>> LoadBenchCorpus(const std::string& path);

}  // namespace atn

#endif  // ATN_BENCH_H_
