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

#include "atn/report.h"

#include <map>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "json.hpp"
#include "strings_internal.h"

namespace atn {
namespace {

using OrderedJson = nlohmann::ordered_json;

std::string Percent(double metric) {
  return absl::StrFormat("%.2f", metric * 100.0);
}

std::string CsvField(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string MarkdownCell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

// Rows grouped by (dataset, classifier) in first-appearance order.
std::vector<std::vector<const ConditionResult*>> Groups(const EvalReport& report) {
  std::vector<std::vector<const ConditionResult*>> groups;
  std::map<std::pair<std::string, std::string>, size_t> index;
  for (const ConditionResult& row : report.rows) {
    auto [it, inserted] =
        index.emplace(std::pair{row.dataset, row.classifier}, groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(&row);
  }
  return groups;
}

std::string EmitCsv(const EvalReport& report) {
  std::string out =
      "dataset,classifier,augmentation,normalized,accuracy_pct,correct,n,failed\n";
  for (const ConditionResult& r : report.rows) {
    absl::StrAppend(&out, CsvField(r.dataset), ",", CsvField(r.classifier), ",",
                    CsvField(r.augmentation), ",", r.normalized ? "true" : "false",
                    ",", Percent(r.metric), ",", r.correct, ",", r.n, ",",
                    r.failed, "\n");
  }
  return out;
}

std::string EmitMarkdown(const EvalReport& report) {
  std::string out;
  for (const auto& group : Groups(report)) {
    if (!out.empty()) out += "\n";
    absl::StrAppend(&out, "### ", MarkdownCell(group[0]->dataset), " / ",
                    MarkdownCell(group[0]->classifier), "\n\n",
                    "| Augmentation | Accuracy (%) | n |\n",
                    "|---|---:|---:|\n");
    for (const ConditionResult* r : group) {
      absl::StrAppend(&out, "| ",
                      r->normalized ? "normalized" : MarkdownCell(r->augmentation),
                      " | ", Percent(r->metric), " | ", r->n, " |\n");
    }
  }
  return out;
}

std::string EmitJson(const EvalReport& report) {
  OrderedJson j;
  OrderedJson& p = j["provenance"];
  p["master_seed"] = report.provenance.master_seed;
  p["config_hash"] = report.provenance.config_hash;
  p["version"] = report.provenance.version;
  if (!report.provenance.started_at.empty()) {
    p["started_at"] = report.provenance.started_at;
  }
  if (!report.provenance.finished_at.empty()) {
    p["finished_at"] = report.provenance.finished_at;
  }
  j["rows"] = OrderedJson::array();
  for (const ConditionResult& r : report.rows) {
    OrderedJson row;
    row["dataset"] = r.dataset;
    row["classifier"] = r.classifier;
    row["augmentation"] = r.augmentation;
    row["normalized"] = r.normalized;
    row["metric"] = r.metric;
    row["correct"] = r.correct;
    row["n"] = r.n;
    row["failed"] = r.failed;
    j["rows"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

}  // namespace

std::string_view ReportFormatName(ReportFormat format) {
  switch (format) {
    case ReportFormat::kCsv:
      return "csv";
    case ReportFormat::kMarkdown:
      return "markdown";
    case ReportFormat::kJson:
      return "json";
  }
  return "";
}

absl::StatusOr<ReportFormat> ParseReportFormat(std::string_view name) {
  for (ReportFormat f :
       {ReportFormat::kCsv, ReportFormat::kMarkdown, ReportFormat::kJson}) {
    if (ReportFormatName(f) == name) return f;
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown report format '", AV(name), "' (expected csv, markdown, json)"));
}

std::string EmitReport(const EvalReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kCsv:
      return EmitCsv(report);
    case ReportFormat::kMarkdown:
      return EmitMarkdown(report);
    case ReportFormat::kJson:
      return EmitJson(report);
  }
  return "";
}

absl::StatusOr<EvalReport> ParseReportJson(std::string_view json) {
  const OrderedJson j = OrderedJson::parse(json, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    return absl::InvalidArgumentError("report is not a JSON object");
  }
  EvalReport report;
  try {
    const OrderedJson& p = j.at("provenance");
    report.provenance.master_seed = p.at("master_seed").get<uint64_t>();
    report.provenance.config_hash = p.at("config_hash").get<std::string>();
    report.provenance.version = p.at("version").get<std::string>();
    report.provenance.started_at = p.value("started_at", "");
    report.provenance.finished_at = p.value("finished_at", "");
    for (const OrderedJson& row : j.at("rows")) {
      ConditionResult r;
      r.dataset = row.at("dataset").get<std::string>();
      r.classifier = row.at("classifier").get<std::string>();
      r.augmentation = row.at("augmentation").get<std::string>();
      r.normalized = row.at("normalized").get<bool>();
      r.metric = row.at("metric").get<double>();
      r.correct = row.at("correct").get<size_t>();
      r.n = row.at("n").get<size_t>();
      r.failed = row.at("failed").get<size_t>();
      report.rows.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("malformed report: ", e.what()));
  }
  return report;
}

std::string SummarizeReport(const EvalReport& report) {
  std::string out;
  for (const auto& group : Groups(report)) {
    absl::StrAppend(&out, group[0]->dataset, " / ", group[0]->classifier, "\n");
    absl::StrAppendFormat(&out, "  %-30s %9s %9s %10s\n", "augmentation",
                          "baseline", "augmented", "normalized");
    const ConditionResult* baseline = nullptr;
    for (const ConditionResult* r : group) {
      if (r->augmentation == kBaseline && !r->normalized) baseline = r;
    }
    for (size_t i = 0; i + 1 < group.size(); i += 2) {
      const ConditionResult* aug = group[i];
      const ConditionResult* norm = group[i + 1];
      absl::StrAppendFormat(&out, "  %-30s %9s %9s %10s\n", aug->augmentation,
                            baseline ? Percent(baseline->metric) : "-",
                            Percent(aug->metric), Percent(norm->metric));
    }
  }
  return out;
}

}  // namespace atn
