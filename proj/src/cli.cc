// Copyright 2026 The chartclean Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chartclean/cli.h"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "chartclean/chart_model.h"
#include "chartclean/corpus_stats.h"
#include "chartclean/entailment.h"
#include "chartclean/errors.h"
#include "chartclean/ingest.h"
#include "chartclean/linearize.h"
#include "chartclean/metrics.h"
#include "chartclean/nli_filter.h"
#include "chartclean/noise.h"
#include "json.hpp"

#ifndef CHARTCLEAN_VERSION
#define CHARTCLEAN_VERSION "0.0.0"
#endif

namespace chartclean::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

std::shared_ptr<spdlog::logger> Log() {
  static std::shared_ptr<spdlog::logger> logger = [] {
    auto sink = std::make_shared<spdlog::sinks::stderr_sink_mt>();
    auto l = std::make_shared<spdlog::logger>("chartclean", sink);
    l->set_pattern("[%Y-%m-%d %H:%M:%S.%e] [%l] %v");
    return l;
  }();
  return logger;
}

std::string Sha256File(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                             &EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  char buffer[1 << 16];
  while (in) {
    in.read(buffer, sizeof buffer);
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buffer, static_cast<size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &length);
  std::string hex;
  char byte[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(byte, sizeof byte, "%02x", digest[i]);
    hex += byte;
  }
  return hex;
}

std::string UtcTimestamp(std::chrono::system_clock::time_point when) {
  const std::time_t t = std::chrono::system_clock::to_time_t(when);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

// Files written by a run. Each is written to a sibling temporary and renamed
// into place by CommitAll; anything uncommitted is removed on destruction.
class StagedOutputs {
 public:
  StagedOutputs() = default;
  StagedOutputs(const StagedOutputs&) = delete;
  StagedOutputs& operator=(const StagedOutputs&) = delete;

  ~StagedOutputs() {
    for (auto& entry : entries_) {
      entry.stream.reset();
      std::error_code ignored;
      fs::remove(entry.temp, ignored);
    }
  }

  std::ostream& Open(const fs::path& path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    Entry entry;
    entry.final_path = path;
    entry.temp = path;
    entry.temp += ".partial";
    entry.stream = std::make_unique<std::ofstream>(entry.temp, std::ios::binary | std::ios::trunc);
    if (!*entry.stream) throw DataError("cannot write " + path.string());
    entries_.push_back(std::move(entry));
    return *entries_.back().stream;
  }

  std::vector<fs::path> CommitAll() {
    for (auto& entry : entries_) {
      entry.stream->flush();
      if (!*entry.stream) throw DataError("write failed: " + entry.final_path.string());
      entry.stream.reset();
    }
    std::vector<fs::path> committed;
    for (auto& entry : entries_) {
      fs::rename(entry.temp, entry.final_path);
      committed.push_back(entry.final_path);
    }
    entries_.clear();
    return committed;
  }

 private:
  struct Entry {
    fs::path final_path;
    fs::path temp;
    std::unique_ptr<std::ofstream> stream;
  };
  std::vector<Entry> entries_;
};

class RunManifest {
 public:
  explicit RunManifest(std::string subcommand)
      : subcommand_(std::move(subcommand)),
        started_(std::chrono::system_clock::now()),
        steady_start_(std::chrono::steady_clock::now()) {}

  void set_path(fs::path path) { path_ = std::move(path); }
  void set_config(Json config) { config_ = std::move(config); }
  void set_results(Json results) { results_ = std::move(results); }

  void AddInput(const fs::path& path) {
    inputs_.push_back({{"path", path.string()}, {"sha256", Sha256File(path)}});
  }
  void AddOutput(const fs::path& path) {
    outputs_.push_back({{"path", path.string()}, {"sha256", Sha256File(path)}});
  }

  // Writes the manifest if a path is known. Never throws.
  void Write(bool ok, const std::string& error) noexcept {
    if (path_.empty()) return;
    try {
      Json m;
      m["tool"] = "chartclean";
      m["version"] = CHARTCLEAN_VERSION;
      m["subcommand"] = subcommand_;
      m["status"] = ok ? "ok" : "failed";
      m["error"] = ok ? Json(nullptr) : Json(error);
      m["config"] = config_;
      m["inputs"] = inputs_;
      m["outputs"] = ok ? outputs_ : Json::array();
      m["results"] = results_;
      const double wall =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - steady_start_)
              .count();
      m["timing"] = {{"started_at", UtcTimestamp(started_)}, {"wall_seconds", wall}};
      if (path_.has_parent_path()) fs::create_directories(path_.parent_path());
      std::ofstream out(path_, std::ios::binary | std::ios::trunc);
      out << m.dump(2) << '\n';
    } catch (const std::exception& e) {
      Log()->error("could not write manifest {}: {}", path_.string(), e.what());
    }
  }

 private:
  std::string subcommand_;
  fs::path path_;
  Json config_ = Json::object();
  Json results_ = Json::object();
  Json inputs_ = Json::array();
  Json outputs_ = Json::array();
  std::chrono::system_clock::time_point started_;
  std::chrono::steady_clock::time_point steady_start_;
};

fs::path ManifestFor(const fs::path& output) {
  fs::path m = output;
  m += ".manifest.json";
  return m;
}

std::optional<std::string> Env(const char* name) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return std::nullopt;
  return std::string(value);
}

// Backend connection flags shared by filter and inject-noise.
struct RemoteFlags {
  std::optional<std::string> url;
  std::optional<double> timeout;
  std::optional<int> retries;
  double backoff = 0.5;
  size_t batch_size = 0;

  void Register(CLI::App* app) {
    app->add_option("--backend-url", url, "Service base URL (env CHARTCLEAN_BACKEND_URL)");
    app->add_option("--timeout", timeout,
                    "Per-request timeout in seconds (env CHARTCLEAN_BACKEND_TIMEOUT)");
    app->add_option("--retries", retries,
                    "Retries after the first attempt (env CHARTCLEAN_BACKEND_RETRIES)");
    app->add_option("--backoff", backoff, "Seconds of backoff per retry")
        ->capture_default_str();
  }

  RemoteOptions Resolve() const {
    RemoteOptions options;
    if (auto v = Env("CHARTCLEAN_BACKEND_URL")) options.base_url = *v;
    try {
      if (auto v = Env("CHARTCLEAN_BACKEND_TIMEOUT")) options.timeout_seconds = std::stod(*v);
      if (auto v = Env("CHARTCLEAN_BACKEND_RETRIES")) options.retries = std::stoi(*v);
    } catch (const std::exception&) {
      throw UsageError("bad CHARTCLEAN_BACKEND_TIMEOUT or CHARTCLEAN_BACKEND_RETRIES value");
    }
    if (url) options.base_url = *url;
    if (timeout) options.timeout_seconds = *timeout;
    if (retries) options.retries = *retries;
    options.backoff_seconds = backoff;
    options.batch_size = batch_size;
    if (options.timeout_seconds <= 0) throw UsageError("timeout must be positive");
    if (options.retries < 0) throw UsageError("retries must be non-negative");
    return options;
  }
};

struct SpecFlags {
  std::string format = "proposed";
  LinearizationSpec defaults;

  void Register(CLI::App* app) {
    app->add_option("--format", format,
                    "proposed|obeid|obeid-title|kantharaj|kantharaj-labels")
        ->capture_default_str();
    app->add_option("--label-marker", defaults.label_marker)->capture_default_str();
    app->add_option("--value-marker", defaults.value_marker)->capture_default_str();
    app->add_option("--pair-separator", defaults.pair_separator)->capture_default_str();
    app->add_option("--cell-separator", defaults.cell_separator)->capture_default_str();
    app->add_option("--multi-label-joiner", defaults.multi_label_joiner)
        ->capture_default_str();
  }

  LinearizationSpec Resolve() const {
    auto parsed = ParseLinearFormat(format);
    if (!parsed) throw UsageError("unknown format '" + format + "'");
    LinearizationSpec spec = defaults;
    spec.format = *parsed;
    if (spec.format == LinearFormat::kProposed &&
        (spec.label_marker.empty() || spec.value_marker.empty())) {
      throw UsageError("proposed format needs non-empty markers");
    }
    return spec;
  }
};

// ---- subcommands ----------------------------------------------------------

struct IngestArgs {
  fs::path in;
  std::optional<fs::path> meta;
  fs::path out;
};

void RunIngest(const IngestArgs& args, RunManifest& manifest) {
  manifest.set_path(ManifestFor(args.out));
  Json config;
  config["in"] = args.in.string();
  config["meta"] = args.meta ? Json(args.meta->string()) : Json(nullptr);
  config["out"] = args.out.string();
  config["layout"] = args.meta ? "tabular" : "canonical";
  manifest.set_config(config);

  Corpus corpus;
  if (args.meta) {
    corpus = LoadTabular(args.in, *args.meta);
    if (fs::is_regular_file(args.in)) manifest.AddInput(args.in);
    manifest.AddInput(*args.meta);
  } else {
    manifest.AddInput(args.in);
    corpus = LoadCanonical(args.in);
  }
  StagedOutputs outputs;
  SaveCanonical(corpus, outputs.Open(args.out));
  for (const auto& p : outputs.CommitAll()) manifest.AddOutput(p);
  manifest.set_results({{"records", corpus.records.size()}});
  Log()->info("ingested {} records into {}", corpus.records.size(), args.out.string());
}

struct SplitArgs {
  fs::path in;
  std::string ratios = "0.70,0.15,0.15";
  uint64_t seed = 0;
  std::string out_prefix;
  bool force = false;
};

void RunSplit(const SplitArgs& args, RunManifest& manifest) {
  const fs::path train = args.out_prefix + "train.jsonl";
  const fs::path validation = args.out_prefix + "validation.jsonl";
  const fs::path test = args.out_prefix + "test.jsonl";
  manifest.set_path(args.out_prefix + "split.manifest.json");

  const SplitRatios ratios = ParseRatios(args.ratios);
  Json config;
  config["in"] = args.in.string();
  config["ratios"] = {ratios.train, ratios.validation, ratios.test};
  config["seed"] = args.seed;
  config["out_prefix"] = args.out_prefix;
  config["force"] = args.force;
  config["prng"] = "splitmix64";
  manifest.set_config(config);

  manifest.AddInput(args.in);
  Corpus corpus = LoadCanonical(args.in);
  const SplitTag existing = InferSplitTag(args.in);
  if (existing != SplitTag::kUnsplit && !args.force) {
    throw UsageError(args.in.string() + " is already a '" + std::string(SplitTagName(existing)) +
                     "' split; pass --force to re-split it");
  }
  const SplitResult result = SplitCorpus(corpus, ratios, args.seed);

  StagedOutputs outputs;
  SaveCanonical(result.train, outputs.Open(train));
  SaveCanonical(result.validation, outputs.Open(validation));
  SaveCanonical(result.test, outputs.Open(test));
  for (const auto& p : outputs.CommitAll()) manifest.AddOutput(p);
  manifest.set_results({{"train", result.train.records.size()},
                        {"validation", result.validation.records.size()},
                        {"test", result.test.records.size()}});
  Log()->info("split {} records into {}/{}/{}", corpus.records.size(),
              result.train.records.size(), result.validation.records.size(),
              result.test.records.size());
}

struct LinearizeArgs {
  fs::path in;
  SpecFlags spec;
  fs::path out;
};

void RunLinearize(const LinearizeArgs& args, RunManifest& manifest) {
  manifest.set_path(ManifestFor(args.out));
  const LinearizationSpec spec = args.spec.Resolve();
  Json config;
  config["in"] = args.in.string();
  config["spec"] = SpecToJson(spec);
  config["out"] = args.out.string();
  manifest.set_config(config);

  manifest.AddInput(args.in);
  const Corpus corpus = LoadCanonical(args.in);
  StagedOutputs outputs;
  std::ostream& out = outputs.Open(args.out);
  const std::string format(LinearFormatName(spec.format));
  for (const ChartRecord& record : corpus.records) {
    const LinearizedInput input = Linearize(record, spec);
    Json line;
    line["id"] = input.source_id;
    line["format"] = format;
    line["text"] = input.text;
    out << line.dump() << '\n';
  }
  for (const auto& p : outputs.CommitAll()) manifest.AddOutput(p);
  manifest.set_results({{"records", corpus.records.size()}});
  Log()->info("linearized {} records ({})", corpus.records.size(), format);
}

struct FilterArgs {
  fs::path in;
  SpecFlags spec;
  double threshold = kDefaultThreshold;
  std::string backend = "lexical";
  std::string empty_policy = "drop";
  std::string on_error = "abort";
  size_t parallelism = 1;
  RemoteFlags remote;
  fs::path out;
  fs::path audit;
};

void RunFilter(const FilterArgs& args, RunManifest& manifest) {
  manifest.set_path(ManifestFor(args.out));
  FilterOptions options;
  options.spec = args.spec.Resolve();
  options.threshold = args.threshold;
  if (!(args.threshold >= 0.0 && args.threshold <= 1.0)) {
    throw UsageError("--threshold must lie in [0, 1]");
  }
  auto policy = ParseEmptyPolicy(args.empty_policy);
  if (!policy) throw UsageError("unknown --empty-policy '" + args.empty_policy + "'");
  options.empty_policy = *policy;
  if (args.on_error != "abort" && args.on_error != "skip") {
    throw UsageError("unknown --on-error '" + args.on_error + "'");
  }
  options.on_error = args.on_error == "skip" ? OnBackendError::kSkip : OnBackendError::kAbort;
  if (args.parallelism == 0) throw UsageError("--parallelism must be at least 1");
  options.parallelism = args.parallelism;

  const RemoteOptions remote = args.remote.Resolve();
  auto backend = MakeBackend(args.backend, remote);

  Json config;
  config["in"] = args.in.string();
  config["spec"] = SpecToJson(options.spec);
  config["threshold"] = options.threshold;
  config["backend"] = args.backend;
  config["backend_config"] = backend->Describe();
  config["empty_policy"] = std::string(EmptyPolicyName(options.empty_policy));
  config["on_error"] = args.on_error;
  config["parallelism"] = options.parallelism;
  config["out"] = args.out.string();
  config["audit"] = args.audit.string();
  manifest.set_config(config);

  manifest.AddInput(args.in);
  const Corpus corpus = LoadCanonical(args.in);
  if (args.backend == "remote") {
    const auto& rb = static_cast<const RemoteBackend&>(*backend);
    const std::string model = rb.Health();
    Log()->info("scoring service at {} reports model '{}'", remote.base_url, model);
    auto described = config;
    described["backend_config"]["model"] = model;
    manifest.set_config(described);
  }

  const FilterCorpusResult result = FilterCorpus(corpus, *backend, options);
  for (const auto& failure : result.failures) {
    Log()->warn("skipped record '{}': {}", failure.id, failure.message);
  }

  StagedOutputs outputs;
  SaveCanonical(result.cleaned, outputs.Open(args.out));
  std::ostream& audit = outputs.Open(args.audit);
  for (const auto& record : result.records) audit << FilteredRecordToJson(record).dump() << '\n';
  for (const auto& failure : result.failures) {
    Json line;
    line["id"] = failure.id;
    line["error"] = failure.message;
    audit << line.dump() << '\n';
  }
  for (const auto& p : outputs.CommitAll()) manifest.AddOutput(p);
  manifest.set_results(FilterStatsToJson(result.stats));
  Log()->info("filtered {} records: {} unchanged, {} modified, {} emptied, {} failed",
              result.stats.records_total, result.stats.records_unchanged,
              result.stats.records_modified, result.stats.records_emptied,
              result.stats.records_failed);
}

struct NoiseArgs {
  fs::path in;
  std::string generator = "stub";
  std::string stub_template = StubGenerator::kDefaultTemplate;
  uint64_t seed = 0;
  double fraction = 1.0;
  size_t parallelism = 1;
  RemoteFlags remote;
  fs::path out;
  fs::path events;
};

void RunInjectNoise(const NoiseArgs& args, RunManifest& manifest) {
  manifest.set_path(ManifestFor(args.out));
  if (!(args.fraction > 0.0 && args.fraction <= 1.0)) {
    throw UsageError("--fraction must lie in (0, 1]");
  }
  if (args.parallelism == 0) throw UsageError("--parallelism must be at least 1");
  std::unique_ptr<TextGenerator> generator;
  if (args.generator == "stub") {
    generator = std::make_unique<StubGenerator>(args.stub_template);
  } else if (args.generator == "remote") {
    generator = std::make_unique<RemoteGenerator>(args.remote.Resolve());
  } else {
    throw UsageError("unknown --generator '" + args.generator + "'");
  }

  Json config;
  config["in"] = args.in.string();
  config["generator"] = generator->Describe();
  config["seed"] = args.seed;
  config["fraction"] = args.fraction;
  config["parallelism"] = args.parallelism;
  config["prng"] = "splitmix64";
  config["out"] = args.out.string();
  config["events"] = args.events.string();
  manifest.set_config(config);

  manifest.AddInput(args.in);
  const Corpus corpus = LoadCanonical(args.in);
  const InjectResult result =
      InjectCorpus(corpus, *generator, args.seed, args.fraction, args.parallelism);

  StagedOutputs outputs;
  SaveCanonical(result.corpus, outputs.Open(args.out));
  std::ostream& events = outputs.Open(args.events);
  for (const auto& event : result.events) events << NoiseEventToJson(event).dump() << '\n';
  for (const auto& p : outputs.CommitAll()) manifest.AddOutput(p);
  manifest.set_results({{"records", corpus.records.size()}, {"noised", result.events.size()}});
  Log()->info("noised {} of {} records", result.events.size(), corpus.records.size());
}

struct EvaluateArgs {
  fs::path hyp;
  fs::path ref;
  fs::path out;
};

void RunEvaluate(const EvaluateArgs& args, RunManifest& manifest) {
  manifest.set_path(ManifestFor(args.out));
  Json config;
  config["hyp"] = args.hyp.string();
  config["ref"] = args.ref.string();
  config["out"] = args.out.string();
  config["tokenizer"] = "13a";
  config["bleu_smoothing"] = "exp";
  config["rouge2_aggregation"] = "mean_f1";
  manifest.set_config(config);

  manifest.AddInput(args.hyp);
  manifest.AddInput(args.ref);
  const EvalReport report = Evaluate(AlignPairs(args.hyp, args.ref));
  StagedOutputs outputs;
  outputs.Open(args.out) << EvalReportToJson(report).dump(2) << '\n';
  for (const auto& p : outputs.CommitAll()) manifest.AddOutput(p);
  manifest.set_results({{"bleu4", report.bleu4},
                        {"rouge2_f1", report.rouge2_f1},
                        {"pair_count", report.pair_count}});
  Log()->info("BLEU-4 {:.2f}  ROUGE-2 F1 {:.4f}  ({} pairs)", report.bleu4, report.rouge2_f1,
              report.pair_count);
}

struct StatsArgs {
  std::vector<fs::path> inputs;
  std::optional<fs::path> out;
};

void RunStats(const StatsArgs& args, RunManifest& manifest) {
  if (args.out) manifest.set_path(ManifestFor(*args.out));
  Json config;
  Json inputs = Json::array();
  for (const auto& p : args.inputs) inputs.push_back(p.string());
  config["inputs"] = inputs;
  config["out"] = args.out ? Json(args.out->string()) : Json(nullptr);
  manifest.set_config(config);

  std::vector<Corpus> corpora;
  for (const auto& path : args.inputs) {
    manifest.AddInput(path);
    Corpus corpus = LoadCanonical(path);
    corpus.split_tag = InferSplitTag(path);
    corpora.push_back(std::move(corpus));
  }
  const CorpusStats stats = ComputeCorpusStats(corpora);
  std::cout << FormatCorpusStats(stats) << std::flush;
  if (args.out) {
    StagedOutputs outputs;
    outputs.Open(*args.out) << CorpusStatsToJson(stats).dump(2) << '\n';
    for (const auto& p : outputs.CommitAll()) manifest.AddOutput(p);
  }
  manifest.set_results(CorpusStatsToJson(stats));
}

}  // namespace

int Run(int argc, const char* const* argv) {
  CLI::App app{"chartclean: chart summarization corpus toolkit", "chartclean"};
  app.set_version_flag("--version", CHARTCLEAN_VERSION);
  app.require_subcommand(1);
  std::string log_level = "info";
  app.add_option("--log-level", log_level, "trace|debug|info|warn|error|off")
      ->capture_default_str();

  IngestArgs ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Convert input data to canonical JSONL");
  ingest_cmd->add_option("--in", ingest.in, "Canonical JSONL, or table file/directory")
      ->required();
  ingest_cmd->add_option("--meta", ingest.meta, "Metadata sidecar for tabular input");
  ingest_cmd->add_option("--out", ingest.out, "Output canonical JSONL")->required();

  SplitArgs split;
  auto* split_cmd = app.add_subcommand("split", "Deterministic train/validation/test split");
  split_cmd->add_option("--in", split.in)->required();
  split_cmd->add_option("--ratios", split.ratios)->capture_default_str();
  split_cmd->add_option("--seed", split.seed)->required();
  split_cmd->add_option("--out-prefix", split.out_prefix)->required();
  split_cmd->add_flag("--force", split.force, "Re-split a file already named as a split");

  LinearizeArgs linearize;
  auto* linearize_cmd = app.add_subcommand("linearize", "Linearize charts");
  linearize_cmd->add_option("--in", linearize.in)->required();
  linearize.spec.Register(linearize_cmd);
  linearize_cmd->add_option("--out", linearize.out)->required();

  FilterArgs filter;
  auto* filter_cmd = app.add_subcommand("filter", "Entailment-filter reference summaries");
  filter_cmd->add_option("--in", filter.in)->required();
  filter.spec.Register(filter_cmd);
  filter_cmd->add_option("--threshold", filter.threshold)->capture_default_str();
  filter_cmd->add_option("--backend", filter.backend, "remote|lexical|mock:<v>")
      ->capture_default_str();
  filter_cmd->add_option("--empty-policy", filter.empty_policy, "drop|keep-best")
      ->capture_default_str();
  filter_cmd->add_option("--on-error", filter.on_error, "abort|skip")->capture_default_str();
  filter_cmd->add_option("--parallelism", filter.parallelism)->capture_default_str();
  filter_cmd->add_option("--batch-size", filter.remote.batch_size,
                         "Remote: pairs per /v1/score_batch call (0 = /v1/score)")
      ->capture_default_str();
  filter.remote.Register(filter_cmd);
  filter_cmd->add_option("--out", filter.out)->required();
  filter_cmd->add_option("--audit", filter.audit)->required();

  NoiseArgs noise;
  auto* noise_cmd = app.add_subcommand("inject-noise", "Insert generated sentences");
  noise_cmd->add_option("--in", noise.in)->required();
  noise_cmd->add_option("--generator", noise.generator, "stub|remote")->capture_default_str();
  noise_cmd->add_option("--stub-template", noise.stub_template)->capture_default_str();
  noise_cmd->add_option("--seed", noise.seed)->required();
  noise_cmd->add_option("--fraction", noise.fraction)->capture_default_str();
  noise_cmd->add_option("--parallelism", noise.parallelism)->capture_default_str();
  noise.remote.Register(noise_cmd);
  noise_cmd->add_option("--out", noise.out)->required();
  noise_cmd->add_option("--events", noise.events)->required();

  EvaluateArgs evaluate;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "BLEU-4 and ROUGE-2 against references");
  evaluate_cmd->add_option("--hyp", evaluate.hyp)->required();
  evaluate_cmd->add_option("--ref", evaluate.ref)->required();
  evaluate_cmd->add_option("--out", evaluate.out)->required();

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Corpus size and summary statistics");
  stats_cmd->add_option("inputs", stats.inputs, "Canonical JSONL files")->required();
  stats_cmd->add_option("--out", stats.out, "Also write the statistics as JSON");

  try {
    app.parse(argc, argv);
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

  const auto level = spdlog::level::from_str(log_level);
  Log()->set_level(level);

  CLI::App* chosen = app.get_subcommands().front();
  RunManifest manifest(chosen->get_name());
  try {
    if (chosen == ingest_cmd) RunIngest(ingest, manifest);
    else if (chosen == split_cmd) RunSplit(split, manifest);
    else if (chosen == linearize_cmd) RunLinearize(linearize, manifest);
    else if (chosen == filter_cmd) RunFilter(filter, manifest);
    else if (chosen == noise_cmd) RunInjectNoise(noise, manifest);
    else if (chosen == evaluate_cmd) RunEvaluate(evaluate, manifest);
    else if (chosen == stats_cmd) RunStats(stats, manifest);
  } catch (const UsageError& e) {
    Log()->error("{}", e.what());
    manifest.Write(false, e.what());
    return kExitUsage;
  } catch (const BackendError& e) {
    Log()->error("{}", e.what());
    manifest.Write(false, e.what());
    return kExitBackend;
  } catch (const std::exception& e) {
    Log()->error("{}", e.what());
    manifest.Write(false, e.what());
    return kExitData;
  }
  manifest.Write(true, {});
  return kExitOk;
}

int Run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("chartclean");
  for (const auto& a : args) argv.push_back(a.c_str());
  return Run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace chartclean::cli
