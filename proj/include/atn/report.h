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

#ifndef ATN_REPORT_H_
#define ATN_REPORT_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "atn/evaluation.h"

namespace atn {

enum class ReportFormat { kCsv, kMarkdown, kJson };

std::string_view ReportFormatName(ReportFormat format);
absl::StatusOr<ReportFormat> ParseReportFormat(std::string_view name);

// CSV and markdown print accuracy as a percentage with two decimals; each
// augmentation row is followed by its normalized companion. JSON keeps full
// precision and loads back with ParseReportJson.
std::string EmitReport(const EvalReport& report, ReportFormat format);
absl::StatusOr<EvalReport> ParseReportJson(std::string_view json);

// Plain-text table with one line per augmentation:
// baseline / augmented / normalized accuracy.
std::string SummarizeReport(const EvalReport& report);

}  // namespace atn

#endif  // ATN_REPORT_H_
