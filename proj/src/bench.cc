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
#include <chrono>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "atn/file_util.h"
#include "atn/utf8.h"
#include "json.hpp"

namespace atn {

BenchResult ThroughputBench(const std::vector<std::string>& texts,
                            const Normalizer& normalizer, int runs) {
  BenchResult result;
  result.texts = texts.size();
  size_t codepoints = 0;
  for (const std::string& t : texts) {
    for (char c : t) codepoints += (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }
  if (!texts.empty()) {
    result.mean_codepoints =
        static_cast<double>(codepoints) / static_cast<double>(texts.size());
  }
  size_t sink = 0;
  auto pass = [&] {
    for (const std::string& t : texts) {
      absl::StatusOr<NormalizationResult> r = normalizer.Normalize(t);
      if (r.ok()) sink += r->output.size();
    }
  };
  pass();  // warm-up, untimed
  // A run repeats whole passes until it lasts long enough to time reliably.
  constexpr double kMinRunSeconds = 0.05;
  for (int run = 0; run < std::max(1, runs); ++run) {
    const auto start = std::chrono::steady_clock::now();
    size_t done = 0;
    double seconds = 0;
    do {
      pass();
      done += texts.size();
      seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
    } while (seconds < kMinRunSeconds && !texts.empty());
    result.rates.push_back(
        texts.empty() ? 0.0 : static_cast<double>(done) / std::max(seconds, 1e-9));
  }
  // Keeps the work observable so it cannot be optimized away.
  if (sink == static_cast<size_t>(-1)) result.texts = 0;
  std::vector<double> sorted = result.rates;
  std::sort(sorted.begin(), sorted.end());
  result.median_rate = sorted[sorted.size() / 2];
  return result;
}

absl::StatusOr<std::vector<std::string>> LoadBenchCorpus(const std::string& path) {
  absl::StatusOr<std::string> contents = ReadFile(path);
  if (!contents.ok()) return contents.status();
  std::vector<std::string> texts;
  const std::vector<std::string_view> lines = SplitLines(*contents);
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (line.empty()) continue;
    if (line[0] == '{') {
      const nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.is_object() || !j.contains("text") ||
          !j["text"].is_string()) {
        return absl::InvalidArgumentError(
            absl::StrCat(path, ": line ", i + 1, ": expected {\"text\": ...}"));
      }
      texts.push_back(j["text"].get<std::string>());
    } else {
      if (!IsValidUtf8(line)) {
        return absl::InvalidArgumentError(
            absl::StrCat(path, ": line ", i + 1, ": invalid UTF-8"));
      }
      texts.emplace_back(line);
    }
  }
  return texts;
}

}  // namespace atn
