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

// Command-line front end: normalize, attack, evaluate, bench and serve.
//
// Settings come from three layers. A key-value config file (--config) is
// overridden by ATN_<FLAG> environment variables, which are overridden by
// flags. Exit codes: 0 success, 2 skipped input lines, 64 usage, 65 bad
// data, 69 classifier or network unavailable, 1 anything else.

#include <pthread.h>
#include <signal.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/time/clock.h"
#include "absl/time/time.h"
#include "atn/attacks.h"
#include "atn/bench.h"
#include "atn/classifier.h"
#include "atn/corpus_attack.h"
#include "atn/evaluation.h"
#include "atn/http_classifier.h"
#include "atn/normalizer.h"
#include "atn/records.h"
#include "atn/report.h"
#include "atn/service.h"
#include "atn/utf8.h"
#include "atn/version.h"
#include "json.hpp"

namespace atn {
namespace {

using Json = nlohmann::ordered_json;

enum ExitCode {
  kExitOk = 0,
  kExitInternal = 1,
  kExitPartial = 2,
  kExitUsage = 64,
  kExitData = 65,
  kExitUnavailable = 69,
};

int Fail(int code, std::string_view message) {
  std::cerr << "atn: " << message << "\n";
  return code;
}

int Fail(int code, const absl::Status& status) {
  return Fail(code, std::string(status.message()));
}

// Classifier and transport failures.
bool IsServiceFailure(const absl::Status& s) {
  return absl::IsUnavailable(s) || absl::IsDeadlineExceeded(s) ||
         absl::IsAborted(s) || absl::IsFailedPrecondition(s) ||
         absl::IsDataLoss(s);
}

// ---------------------------------------------------------------------------
// Flags shared by several subcommands.

struct NormalizerFlags {
  std::string passes;
  CLI::Option* passes_opt = nullptr;
  int threshold = 2;
  std::string lexicon;
  bool no_url_detection = false;

  void Register(CLI::App* app) {
    passes_opt = app->add_option(
        "--passes", passes,
        "Comma-separated passes to run; empty runs none (default: all)");
    app->add_option("--threshold", threshold,
                    "Interior punctuation marks needed to collapse a word")
        ->check(CLI::PositiveNumber);
    app->add_option("--lexicon", lexicon,
                    "Censor lexicon file, one word per line (default: builtin)");
    app->add_flag("--no-url-detection", no_url_detection,
                  "Collapse URL-like tokens too");
  }

  // Validation only; reading the lexicon is I/O and comes later.
  absl::Status Validate() const {
    if (passes_opt->count() > 0) {
      if (absl::StatusOr<std::vector<Pass>> p = ParsePassList(passes); !p.ok()) {
        return p.status();
      }
    }
    return absl::OkStatus();
  }

  absl::StatusOr<Normalizer> Build() const {
    NormalizerConfig config = NormalizerConfig::Default();
    if (passes_opt->count() > 0) config.enabled_passes = *ParsePassList(passes);
    config.interior_punct_threshold = threshold;
    config.url_detection = !no_url_detection;
    if (!lexicon.empty()) {
      absl::StatusOr<CensorLexicon> lex = CensorLexicon::LoadFile(lexicon);
      if (!lex.ok()) return lex.status();
      config.censor_lexicon = *std::move(lex);
    }
    return Normalizer::Create(std::move(config));
  }
};

struct ClassifierFlags {
  std::string spec = "builtin";
  std::string task = "binary";
  CLI::Option* task_opt = nullptr;
  std::string name;
  int max_attempts = 3;
  int max_in_flight = 8;
  double timeout = 10;
  bool log_requests = false;

  void Register(CLI::App* app) {
    app->add_option("--classifier", spec,
                    "builtin, lexicon:<file> or an http:// scoring endpoint");
    task_opt = app->add_option("--task", task, "binary or nli (external classifiers)")
                   ->check(CLI::IsMember({"binary", "nli"}));
    app->add_option("--classifier-name", name, "Name used in reports");
    app->add_option("--max-attempts", max_attempts, "Attempts per request")
        ->check(CLI::PositiveNumber);
    app->add_option("--max-in-flight", max_in_flight, "Concurrent requests")
        ->check(CLI::PositiveNumber);
    app->add_option("--timeout", timeout, "Seconds per request")
        ->check(CLI::PositiveNumber);
    app->add_flag("--log-requests", log_requests,
                  "Log each external request with its latency to stderr");
  }

  absl::Status Validate() const {
    if (spec == "builtin" || spec.starts_with("lexicon:") ||
        spec.starts_with("http://")) {
      return absl::OkStatus();
    }
    return absl::InvalidArgumentError(absl::StrCat(
        "unknown classifier '", spec,
        "' (expected builtin, lexicon:<file> or http://host:port/path)"));
  }

  absl::StatusOr<std::shared_ptr<Classifier>> Build(Task task_value) const {
    if (spec == "builtin") {
      std::unique_ptr<LexiconClassifier> c = LexiconClassifier::Builtin();
      if (!name.empty()) {
        return std::shared_ptr<Classifier>(*LexiconClassifier::Create(c->words(), name));
      }
      return std::shared_ptr<Classifier>(std::move(c));
    }
    if (spec.starts_with("lexicon:")) {
      absl::StatusOr<std::unique_ptr<LexiconClassifier>> c = LexiconClassifier::LoadFile(
          spec.substr(8), name.empty() ? "toy_lexicon" : name);
      if (!c.ok()) return c.status();
      return std::shared_ptr<Classifier>(*std::move(c));
    }
    HttpClassifierOptions options;
    options.url = spec;
    options.task = task_value;
    if (!name.empty()) options.name = name;
    options.max_attempts = max_attempts;
    options.max_in_flight = max_in_flight;
    options.timeout_seconds = timeout;
    if (log_requests) {
      options.log = [](const std::string& line) { std::cerr << line << "\n"; };
    }
    absl::StatusOr<std::unique_ptr<HttpClassifier>> c = HttpClassifier::Create(options);
    if (!c.ok()) return c.status();
    return std::shared_ptr<Classifier>(*std::move(c));
  }
};

// Seed from the flag, or drawn and reported so the run can be repeated.
uint64_t ResolveSeed(const CLI::Option* opt, uint64_t value) {
  if (opt->count() > 0) return value;
  const uint64_t seed = EntropySeed();
  std::cerr << "atn: no --seed given; using --seed " << seed << "\n";
  return seed;
}

// ---------------------------------------------------------------------------
// normalize

struct NormalizeCommand {
  NormalizerFlags normalizer;
  std::string input;
  bool trace = false;

  void Register(CLI::App* app) {
    normalizer.Register(app);
    app->add_option("--input", input,
                    "JSONL file; its text, premise and hypothesis fields are "
                    "normalized (default: plain lines on stdin)");
    app->add_flag("--trace", trace, "Emit JSON lines with the edit list");
  }

  int Run() {
    if (absl::Status s = normalizer.Validate(); !s.ok()) return Fail(kExitUsage, s);
    absl::StatusOr<Normalizer> n = normalizer.Build();
    if (!n.ok()) return Fail(kExitData, n.status());
    std::ifstream file;
    if (!input.empty()) {
      file.open(input, std::ios::binary);
      if (!file) return Fail(kExitData, absl::StrCat("cannot open ", input));
    }
    std::istream& in = input.empty() ? std::cin : file;
    size_t skipped = 0;
    size_t line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!IsValidUtf8(line)) {
        std::cerr << "atn: line " << line_no << ": invalid UTF-8, skipped\n";
        ++skipped;
        continue;
      }
      if (input.empty()) {
        const NormalizationResult r = *n->Normalize(line);
        std::cout << (trace ? NormalizeResponseBody(r) : r.output) << "\n";
        continue;
      }
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      Json record = Json::parse(line, nullptr, false);
      if (record.is_discarded() || !record.is_object()) {
        std::cerr << "atn: line " << line_no << ": not a JSON object, skipped\n";
        ++skipped;
        continue;
      }
      Json edits = Json::object();
      for (const char* key : {"text", "premise", "hypothesis"}) {
        if (!record.contains(key) || !record[key].is_string()) continue;
        const NormalizationResult r = *n->Normalize(record[key].get<std::string>());
        record[key] = r.output;
        if (trace) edits[key] = Json::parse(NormalizeResponseBody(r))["edits"];
      }
      if (trace) record["edits"] = std::move(edits);
      std::cout << record.dump() << "\n";
    }
    std::cout.flush();
    if (skipped > 0) {
      std::cerr << "atn: skipped " << skipped << " line(s)\n";
      return kExitPartial;
    }
    return kExitOk;
  }
};

// ---------------------------------------------------------------------------
// attack

struct AttackCommand {
  std::string input;
  std::string output;
  std::string kind;
  uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;
  std::string field = "default";
  int threads = 1;
  double aug_p = 0, aug_word_p = 0, aug_char_p = 0;
  std::string granularity;
  bool vary_fonts = false;
  std::vector<CLI::Option*> param_opts;

  void Register(CLI::App* app) {
    app->add_option("--input", input, "JSONL dataset")->required();
    app->add_option("--output", output, "Attacked JSONL (default: stdout)");
    app->add_option("--kind", kind, "Attack kind")->required();
    seed_opt = app->add_option("--seed", seed, "Master seed (default: drawn)");
    app->add_option("--field", field,
                    "text, premise, hypothesis or both (default: text for "
                    "binary records, hypothesis for nli)");
    app->add_option("--threads", threads, "Worker threads")
        ->check(CLI::PositiveNumber);
    const CLI::Range unit(0.0, 1.0);
    param_opts = {
        app->add_option("--aug-p", aug_p, "Fixed aug_p")->check(unit),
        app->add_option("--aug-word-p", aug_word_p, "Fixed aug_word_p")->check(unit),
        app->add_option("--aug-char-p", aug_char_p, "Fixed aug_char_p")->check(unit),
        app->add_option("--granularity", granularity, "char, word or all"),
        app->add_flag("--vary-fonts", vary_fonts, "Vary fonts per character")};
  }

  int Run() {
    absl::StatusOr<AttackKind> k = ParseAttackKind(kind);
    if (!k.ok()) {
      return Fail(kExitUsage, absl::StrCat(k.status().message(), "\nkinds: ",
                                           AttackKindList()));
    }
    absl::StatusOr<FieldSelector> f = ParseFieldSelector(field);
    if (!f.ok()) return Fail(kExitUsage, f.status());
    CorpusAttackOptions options;
    options.kind = *k;
    options.field = *f;
    options.threads = threads;
    const bool fixed = std::any_of(param_opts.begin(), param_opts.end(),
                                   [](CLI::Option* o) { return o->count() > 0; });
    if (fixed) {
      AttackParams p;
      if (param_opts[0]->count()) p.aug_p = aug_p;
      if (param_opts[1]->count()) p.aug_word_p = aug_word_p;
      if (param_opts[2]->count()) p.aug_char_p = aug_char_p;
      if (param_opts[3]->count()) {
        absl::StatusOr<Granularity> g = ParseGranularity(granularity);
        if (!g.ok()) return Fail(kExitUsage, g.status());
        p.granularity = *g;
      }
      p.vary_fonts = vary_fonts;
      options.params = p;
    }
    options.master_seed = ResolveSeed(seed_opt, seed);

    std::ifstream in(input, std::ios::binary);
    if (!in) return Fail(kExitData, absl::StrCat("cannot open ", input));
    const std::string sidecar = input + ".attacks.jsonl";
    std::ofstream meta(sidecar, std::ios::binary | std::ios::trunc);
    if (!meta) return Fail(kExitInternal, absl::StrCat("cannot write ", sidecar));
    std::ofstream out_file;
    if (!output.empty()) {
      out_file.open(output, std::ios::binary | std::ios::trunc);
      if (!out_file) return Fail(kExitInternal, absl::StrCat("cannot write ", output));
    }
    std::ostream& out = output.empty() ? std::cout : out_file;
    absl::StatusOr<size_t> n = AttackJsonlStream(in, out, meta, options);
    if (!n.ok()) {
      return Fail(absl::IsFailedPrecondition(n.status()) ? kExitUsage : kExitData,
                  n.status());
    }
    out.flush();
    meta.flush();
    if (!out || !meta) return Fail(kExitInternal, "write failed");
    std::cerr << "atn: attacked " << *n << " record(s); metadata in " << sidecar
              << "\n";
    return kExitOk;
  }
};

// ---------------------------------------------------------------------------
// evaluate

// JSONL files are NLI when their first record carries a premise.
absl::StatusOr<DatasetSchema> SniffSchema(const std::string& path) {
  DatasetSchema schema = GuessDatasetSchema(path);
  if (schema == DatasetSchema::kCsv) return schema;
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const Json j = Json::parse(line, nullptr, false);
    if (j.is_object() && j.contains("premise")) return DatasetSchema::kNliJsonl;
    break;
  }
  return schema;
}

std::string DatasetName(const std::string& path) {
  std::string name = path.substr(path.find_last_of('/') + 1);
  if (const size_t dot = name.find('.'); dot != std::string::npos && dot > 0) {
    name.resize(dot);
  }
  return name;
}

bool SelectorFits(Task task, FieldSelector field) {
  if (field == FieldSelector::kDefault) return true;
  return task == Task::kBinary ? field == FieldSelector::kText
                               : field != FieldSelector::kText;
}

struct EvaluateCommand {
  NormalizerFlags normalizer;
  ClassifierFlags classifier;
  std::string datasets;
  std::string attacks = "all";
  std::string out;
  std::string format;
  uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;
  std::string field = "default";
  int threads = 1;
  bool stamp = false;
  double failure_budget = 0.1;

  void Register(CLI::App* app) {
    normalizer.Register(app);
    classifier.Register(app);
    app->add_option("--datasets", datasets,
                    "Comma-separated dataset files (.jsonl or .csv)")
        ->required();
    app->add_option("--attacks", attacks,
                    "Comma-separated attack kinds, 'all' or 'none'");
    app->add_option("--out", out, "Report file (default: stdout)");
    app->add_option("--format", format,
                    "csv, markdown or json (default: from --out, else markdown)");
    seed_opt = app->add_option("--seed", seed, "Master seed (default: drawn)");
    app->add_option("--field", field, "Attacked field for nli records");
    app->add_option("--threads", threads, "Worker threads")
        ->check(CLI::PositiveNumber);
    app->add_flag("--stamp", stamp, "Record start and finish times in the report");
    app->add_option("--failure-budget", failure_budget,
                    "Fraction of records allowed to fail per condition")
        ->check(CLI::Range(0.0, 1.0));
  }

  absl::StatusOr<std::vector<AttackKind>> Attacks() const {
    std::vector<AttackKind> out_kinds;
    if (attacks == "all") {
      return std::vector<AttackKind>(kAllAttackKinds.begin(), kAllAttackKinds.end());
    }
    if (attacks == "none" || attacks.empty()) return out_kinds;
    for (absl::string_view name : absl::StrSplit(attacks, ',', absl::SkipWhitespace())) {
      absl::StatusOr<AttackKind> k =
          ParseAttackKind(std::string(absl::StripAsciiWhitespace(name)));
      if (!k.ok()) {
        return absl::InvalidArgumentError(absl::StrCat(
            k.status().message(), "\nkinds: ", AttackKindList()));
      }
      out_kinds.push_back(*k);
    }
    return out_kinds;
  }

  absl::StatusOr<ReportFormat> Format() const {
    if (!format.empty()) return ParseReportFormat(format);
    if (out.ends_with(".json")) return ReportFormat::kJson;
    if (out.ends_with(".csv")) return ReportFormat::kCsv;
    return ReportFormat::kMarkdown;
  }

  int Run() {
    absl::StatusOr<std::vector<AttackKind>> kinds = Attacks();
    if (!kinds.ok()) return Fail(kExitUsage, kinds.status());
    absl::StatusOr<ReportFormat> fmt = Format();
    if (!fmt.ok()) return Fail(kExitUsage, fmt.status());
    absl::StatusOr<FieldSelector> f = ParseFieldSelector(field);
    if (!f.ok()) return Fail(kExitUsage, f.status());
    if (absl::Status s = normalizer.Validate(); !s.ok()) return Fail(kExitUsage, s);
    if (absl::Status s = classifier.Validate(); !s.ok()) return Fail(kExitUsage, s);
    std::vector<std::string> paths =
        absl::StrSplit(datasets, ',', absl::SkipWhitespace());
    if (paths.empty()) return Fail(kExitUsage, "--datasets is empty");
    const uint64_t master_seed = ResolveSeed(seed_opt, seed);

    absl::StatusOr<Normalizer> norm = normalizer.Build();
    if (!norm.ok()) return Fail(kExitData, norm.status());
    std::vector<std::vector<EvalRecord>> loaded;
    std::vector<std::string> names;
    for (const std::string& path : paths) {
      absl::StatusOr<DatasetSchema> schema = SniffSchema(path);
      if (!schema.ok()) return Fail(kExitData, schema.status());
      absl::StatusOr<std::vector<EvalRecord>> records = LoadDataset(path, *schema);
      if (!records.ok()) return Fail(kExitData, records.status());
      if (records->empty()) return Fail(kExitData, absl::StrCat(path, ": no records"));
      if (!SelectorFits(records->front().task, *f)) {
        return Fail(kExitUsage,
                    absl::StrCat("--field ", field, " does not apply to ",
                                 std::string(TaskName(records->front().task)),
                                 " dataset ", path));
      }
      loaded.push_back(*std::move(records));
      names.push_back(DatasetName(path));
    }
    Task task = loaded.front().front().task;
    if (classifier.task_opt->count() > 0) task = *ParseTask(classifier.task);
    absl::StatusOr<std::shared_ptr<Classifier>> c = classifier.Build(task);
    if (!c.ok()) return Fail(kExitUsage, c.status());

    EvalReport report;
    report.provenance.master_seed = master_seed;
    report.provenance.config_hash =
        ConfigHash(norm->config(), *kinds, *f, **c, names);
    report.provenance.version = std::string(Version());
    if (stamp) report.provenance.started_at = absl::FormatTime(absl::Now());
    for (size_t i = 0; i < loaded.size(); ++i) {
      EvalOptions options;
      options.dataset = names[i];
      options.attacks = *kinds;
      options.master_seed = master_seed;
      options.field = *f;
      options.threads = threads;
      options.failure_budget = failure_budget;
      absl::StatusOr<std::vector<ConditionResult>> rows =
          RunMatrix(loaded[i], options, **c, *norm);
      if (!rows.ok()) {
        return Fail(IsServiceFailure(rows.status()) ? kExitUnavailable : kExitData,
                    absl::StrCat(names[i], ": ", rows.status().message()));
      }
      report.rows.insert(report.rows.end(), rows->begin(), rows->end());
    }
    if (stamp) report.provenance.finished_at = absl::FormatTime(absl::Now());

    const std::string body = EmitReport(report, *fmt);
    std::cout << SummarizeReport(report);
    if (out.empty()) {
      std::cout << "\n" << body;
    } else {
      std::ofstream file(out, std::ios::binary | std::ios::trunc);
      file << body;
      file.close();
      if (!file) return Fail(kExitInternal, absl::StrCat("cannot write ", out));
      std::cout << "report: " << out << "\n";
    }
    return kExitOk;
  }
};

// ---------------------------------------------------------------------------
// bench

struct BenchCommand {
  NormalizerFlags normalizer;
  std::string corpus = std::string(ATN_DATA_DIR) + "/bench_corpus.jsonl";
  int runs = 5;

  void Register(CLI::App* app) {
    normalizer.Register(app);
    app->add_option("--corpus", corpus, "JSONL with a text field, or plain lines");
    app->add_option("--runs", runs, "Timed runs; the median is reported")
        ->check(CLI::PositiveNumber);
  }

  int Run() {
    if (absl::Status s = normalizer.Validate(); !s.ok()) return Fail(kExitUsage, s);
    absl::StatusOr<Normalizer> n = normalizer.Build();
    if (!n.ok()) return Fail(kExitData, n.status());
    absl::StatusOr<std::vector<std::string>> texts = LoadBenchCorpus(corpus);
    if (!texts.ok()) return Fail(kExitData, texts.status());
    const BenchResult r = ThroughputBench(*texts, *n, runs);
    Json j;
    j["texts"] = r.texts;
    j["mean_codepoints"] = r.mean_codepoints;
    j["runs"] = r.rates;
    j["median_rate"] = r.median_rate;
    std::cout << j.dump() << "\n";
    return kExitOk;
  }
};

// ---------------------------------------------------------------------------
// serve

struct ServeCommand {
  NormalizerFlags normalizer;
  ClassifierFlags classifier;
  ServiceOptions options;

  void Register(CLI::App* app) {
    normalizer.Register(app);
    classifier.Register(app);
    app->add_option("--port", options.port, "TCP port; 0 picks a free one")
        ->check(CLI::Range(0, 65535));
    app->add_option("--bind", options.bind, "Address to listen on");
    app->add_option("--static-dir", options.static_dir, "Files served under /")
        ->check(CLI::ExistingDirectory);
    app->add_option("--session-log", options.session_log_path,
                    "Append every session attempt to this JSONL file");
    app->add_option("--max-session-attempts", options.max_session_attempts,
                    "Attempts kept per session")
        ->check(CLI::PositiveNumber);
    app->add_option("--cors-origin", options.cors_origin,
                    "Access-Control-Allow-Origin value");
  }

  int Run() {
    if (absl::Status s = normalizer.Validate(); !s.ok()) return Fail(kExitUsage, s);
    if (absl::Status s = classifier.Validate(); !s.ok()) return Fail(kExitUsage, s);
    // Signals are taken synchronously below; server threads inherit the mask.
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);

    Service service(options);
    absl::StatusOr<int> port = service.Start();
    if (!port.ok()) return Fail(kExitUnavailable, port.status());
    std::cerr << "atn: listening on http://" << options.bind << ":" << *port
              << std::endl;

    absl::StatusOr<Normalizer> n = normalizer.Build();
    if (!n.ok()) return Fail(kExitData, n.status());
    absl::StatusOr<std::shared_ptr<Classifier>> c =
        classifier.Build(*ParseTask(classifier.task));
    if (!c.ok()) return Fail(kExitUsage, c.status());
    service.SetState(std::make_unique<const ServiceState>(
        ServiceState{*std::move(n), *std::move(c)}));
    std::cerr << "atn: ready" << std::endl;

    int sig = 0;
    sigwait(&signals, &sig);
    service.Stop();
    return kExitOk;
  }
};

// ---------------------------------------------------------------------------
// Config file and environment layers.

std::string EnvName(std::string_view flag) {
  std::string out = "ATN_";
  for (char c : flag) out += c == '-' ? '_' : absl::ascii_toupper(c);
  return out;
}

// Arguments standing in for config-file entries that apply to `sub`.
absl::StatusOr<std::vector<std::string>> ConfigArgs(const std::string& path,
                                                    CLI::App& app,
                                                    CLI::App* sub) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot read config ", path));
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigINI().from_config(in);
  } catch (const CLI::Error& e) {
    return absl::InvalidArgumentError(absl::StrCat(path, ": ", e.what()));
  }
  std::vector<std::string> args;
  for (const CLI::ConfigItem& item : items) {
    if (item.name == "++" || item.name == "--") continue;
    std::string key = item.name;
    std::replace(key.begin(), key.end(), '_', '-');
    const std::string value = absl::StrJoin(item.inputs, ",");
    if (item.parents.size() > 1) {
      return absl::InvalidArgumentError(
          absl::StrCat(path, ": unknown section ", item.fullname()));
    }
    if (item.parents.size() == 1) {
      if (app.get_subcommand_no_throw(item.parents[0]) == nullptr) {
        return absl::InvalidArgumentError(
            absl::StrCat(path, ": unknown section [", item.parents[0], "]"));
      }
      if (item.parents[0] != sub->get_name()) continue;
      if (sub->get_option_no_throw("--" + key) == nullptr) {
        return absl::InvalidArgumentError(
            absl::StrCat(path, ": unknown key '", item.name, "' in [",
                         item.parents[0], "]"));
      }
    } else {
      // Top-level keys apply to every subcommand that has the flag.
      bool known = false;
      for (CLI::App* s : app.get_subcommands({})) {
        known |= s->get_option_no_throw("--" + key) != nullptr;
      }
      if (!known) {
        return absl::InvalidArgumentError(
            absl::StrCat(path, ": unknown key '", item.name, "'"));
      }
      if (sub->get_option_no_throw("--" + key) == nullptr) continue;
    }
    args.push_back(absl::StrCat("--", key, "=", value));
  }
  return args;
}

std::vector<std::string> EnvArgs(CLI::App* sub) {
  std::vector<std::string> args;
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->get_lnames().empty()) continue;
    const std::string& flag = opt->get_lnames().front();
    if (flag == "help") continue;
    if (const char* v = std::getenv(EnvName(flag).c_str()); v != nullptr) {
      args.push_back(absl::StrCat("--", flag, "=", v));
    }
  }
  return args;
}

int Main(int argc, char** argv) {
  CLI::App app("Adversarial text normalizer: reverses character-level attacks "
               "on text and measures their effect on a classifier.",
               "atn");
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path,
                 "Key-value config file; [subcommand] sections allowed");
  app.set_version_flag("--version", std::string(Version()));

  NormalizeCommand normalize;
  AttackCommand attack;
  EvaluateCommand evaluate;
  BenchCommand bench;
  ServeCommand serve;
  CLI::App* normalize_app =
      app.add_subcommand("normalize", "Normalize stdin lines or a JSONL file");
  CLI::App* attack_app =
      app.add_subcommand("attack", "Attack a JSONL dataset with one attack kind");
  CLI::App* evaluate_app = app.add_subcommand(
      "evaluate", "Score baseline, attacked and normalized conditions");
  CLI::App* bench_app = app.add_subcommand("bench", "Measure normalizer throughput");
  CLI::App* serve_app = app.add_subcommand("serve", "Run the HTTP JSON service");
  normalize.Register(normalize_app);
  attack.Register(attack_app);
  evaluate.Register(evaluate_app);
  bench.Register(bench_app);
  serve.Register(serve_app);

  // Locate the subcommand and --config before the full parse so the config
  // and environment layers can be placed beneath the flags.
  std::vector<std::string> args(argv + 1, argv + argc);
  size_t sub_index = args.size();
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[++i];
    } else if (args[i].starts_with("--config=")) {
      config_path = args[i].substr(9);
    } else if (!args[i].starts_with("-")) {
      sub_index = i;
      break;
    }
  }
  if (config_path.empty()) {
    if (const char* env = std::getenv("ATN_CONFIG")) config_path = env;
  }
  if (sub_index < args.size()) {
    CLI::App* sub = app.get_subcommand_no_throw(args[sub_index]);
    if (sub != nullptr) {
      std::vector<std::string> layered;
      if (!config_path.empty()) {
        absl::StatusOr<std::vector<std::string>> cfg =
            ConfigArgs(config_path, app, sub);
        if (!cfg.ok()) return Fail(kExitUsage, cfg.status());
        layered = *std::move(cfg);
      }
      std::vector<std::string> env = EnvArgs(sub);
      layered.insert(layered.end(), env.begin(), env.end());
      args.insert(args.begin() + sub_index + 1, layered.begin(), layered.end());
    }
  }
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (normalize_app->parsed()) return normalize.Run();
  if (attack_app->parsed()) return attack.Run();
  if (evaluate_app->parsed()) return evaluate.Run();
  if (bench_app->parsed()) return bench.Run();
  if (serve_app->parsed()) return serve.Run();
  return kExitUsage;
}

}  // namespace
}  // namespace atn

int main(int argc, char** argv) { return atn::Main(argc, argv); }
