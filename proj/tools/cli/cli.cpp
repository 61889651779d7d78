// Copyright 2026 The oclpath Authors.
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

#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "oclpath/embedding.hpp"
#include "oclpath/error.hpp"
#include "oclpath/eval.hpp"
#include "oclpath/llm.hpp"
#include "oclpath/model.hpp"
#include "oclpath/nlp.hpp"
#include "oclpath/ocl/checker.hpp"
#include "oclpath/pathgen.hpp"
#include "oclpath/pipeline.hpp"
#include "oclpath/prompt.hpp"
#include "oclpath/rank.hpp"

namespace oclpath::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";
constexpr const char* kEmbeddingEndpointEnv = "OCLPATH_EMBEDDING_ENDPOINT";
constexpr const char* kEmbeddingApiKeyEnv = "OCLPATH_EMBEDDING_API_KEY";

// Raised for configuration problems detected after parsing; exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flat keys apply to the subcommand being run; sections for other
// subcommands are dropped.
class SubcommandConfig final : public CLI::ConfigBase {
 public:
  explicit SubcommandConfig(std::string subcommand) : subcommand_(std::move(subcommand)) {}

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    std::vector<CLI::ConfigItem> out;
    for (CLI::ConfigItem& item : CLI::ConfigBase::from_config(input)) {
      if (item.parents.empty()) {
        if (item.name == "++" || item.name == "--") continue;
        item.parents.push_back(subcommand_);
      } else if (item.parents.front() != subcommand_) {
        continue;
      }
      out.push_back(std::move(item));
    }
    return out;
  }

 private:
  std::string subcommand_;
};

struct Settings {
  std::string modelFile;
  std::string specText;
  std::string specsFile;
  std::string specId;

  std::string metric = "jaccard";
  std::size_t k = 10;
  std::string technique = "pathocl";
  std::string embedder = "bundled";
  std::string embeddingModel = "text-embedding-3-small";
  std::string embeddingCache;
  std::optional<std::size_t> maxLen;
  std::size_t maxPaths = 100'000;
  bool parallel = false;
  unsigned threads = 1;

  std::string backend = "replay";
  std::string replayFile;
  std::string llmModel = "gpt-4";
  double temperature = 0.0;
  int maxOutputTokens = 256;
  double price = 0.003;
  unsigned maxInFlight = 4;
  double rps = 0;
  double burst = 1;

  std::string runLog;
  std::string baselineRunLog;
  std::string verdictsFile;
  std::string baselineVerdictsFile;
  std::vector<std::size_t> ks{kDefaultKs.begin(), kDefaultKs.end()};
  std::size_t compareK = 1;
  std::string mode = "any";
  bool strict = false;

  std::string constraint;
  std::string outDir;
};

void add_model(CLI::App* sub, Settings& s) {
  sub->add_option("--model", s.modelFile, "UML model file (JSON)")->required()->check(CLI::ExistingFile);
}

void add_specs(CLI::App* sub, Settings& s) {
  auto* text = sub->add_option("--spec", s.specText, "English specification text");
  auto* file = sub->add_option("--specs", s.specsFile, "specification file (JSON lines)")->check(CLI::ExistingFile);
  text->excludes(file);
  sub->add_option("--spec-id", s.specId, "only process this id from --specs");
}

void add_ranking(CLI::App* sub, Settings& s) {
  sub->add_option("--metric", s.metric, "similarity metric")->check(CLI::IsMember({"jaccard", "cosine"}));
  sub->add_option("--k", s.k, "number of top-ranked paths")->check(CLI::PositiveNumber);
  sub->add_option("--embedder", s.embedder, "embedding provider for cosine")
      ->check(CLI::IsMember({"bundled", "remote"}));
  sub->add_option("--embedding-model", s.embeddingModel, "remote embedding model name");
  sub->add_option("--embedding-cache", s.embeddingCache, "persistent embedding cache file");
  sub->add_option("--max-len", s.maxLen, "longest path in nodes")->check(CLI::PositiveNumber);
  sub->add_option("--max-paths", s.maxPaths, "abort when more paths would be produced")->check(CLI::PositiveNumber);
  sub->add_flag("--parallel", s.parallel, "enumerate paths on worker threads");
  sub->add_option("--threads", s.threads, "ranking threads")->check(CLI::PositiveNumber);
}

void add_technique(CLI::App* sub, Settings& s) {
  sub->add_option("--technique", s.technique, "prompting technique")
      ->check(CLI::IsMember({"pathocl", "uml-augmentation"}));
}

void add_generation(CLI::App* sub, Settings& s) {
  sub->add_option("--backend", s.backend, "completion backend")->check(CLI::IsMember({"replay", "live"}));
  sub->add_option("--replay", s.replayFile, "replay fixture (required for --backend replay)");
  sub->add_option("--llm-model", s.llmModel, "chat model name");
  sub->add_option("--temperature", s.temperature, "sampling temperature")->check(CLI::NonNegativeNumber);
  sub->add_option("--max-output-tokens", s.maxOutputTokens, "completion token limit")->check(CLI::PositiveNumber);
  sub->add_option("--price", s.price, "USD per 1000 input tokens")->check(CLI::NonNegativeNumber);
  sub->add_option("--max-in-flight", s.maxInFlight, "concurrent requests")->check(CLI::PositiveNumber);
  sub->add_option("--rps", s.rps, "request rate limit, 0 for none")->check(CLI::NonNegativeNumber);
  sub->add_option("--burst", s.burst, "rate limiter burst size")->check(CLI::PositiveNumber);
}

void add_scoring(CLI::App* sub, Settings& s) {
  sub->add_option("--verdicts", s.verdictsFile, "correctness verdicts (JSON lines)")->check(CLI::ExistingFile);
  sub->add_option("--baseline-run-log", s.baselineRunLog, "run log of a second technique for McNemar's test")
      ->check(CLI::ExistingFile);
  sub->add_option("--baseline-verdicts", s.baselineVerdictsFile, "correctness verdicts for the baseline run")
      ->check(CLI::ExistingFile);
  sub->add_option("--ks", s.ks, "k values to score")->delimiter(',')->check(CLI::PositiveNumber);
  sub->add_option("--compare-k", s.compareK, "k used for McNemar's test")->check(CLI::PositiveNumber);
  sub->add_option("--mode", s.mode, "any: spec succeeds if any top-k constraint does; per-constraint: ratio of constraints")
      ->check(CLI::IsMember({"any", "per-constraint"}));
  sub->add_flag("--strict", s.strict, "fail on unjudged constraints instead of counting them incorrect");
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(fmt::format("cannot open {}", path.string()));
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError(fmt::format("cannot write {}", path.string()));
  out << content;
}

std::vector<SpecInput> spec_inputs(const Settings& s) {
  std::vector<SpecInput> specs;
  if (!s.specText.empty()) {
    specs.push_back({"spec", s.specText, std::nullopt});
  } else if (!s.specsFile.empty()) {
    specs = load_specs(s.specsFile);
  } else {
    throw UsageError("one of --spec or --specs is required");
  }
  if (!s.specId.empty()) {
    std::erase_if(specs, [&](const SpecInput& x) { return x.id != s.specId; });
    if (specs.empty()) throw DataError(fmt::format("no specification with id '{}'", s.specId));
  }
  return specs;
}

std::shared_ptr<const Embedder> make_embedder(const Settings& s) {
  std::shared_ptr<const Embedder> inner;
  if (s.embedder == "remote") {
    const char* endpoint = std::getenv(kEmbeddingEndpointEnv);
    if (!endpoint || !*endpoint)
      throw UsageError(fmt::format("--embedder remote requires ${} (and usually ${})", kEmbeddingEndpointEnv,
                                   kEmbeddingApiKeyEnv));
    const char* key = std::getenv(kEmbeddingApiKeyEnv);
    inner = std::make_shared<RemoteEmbedder>(endpoint, key ? key : "", s.embeddingModel);
  } else {
    inner = std::make_shared<HashingEmbedder>();
  }
  return std::make_shared<CachingEmbedder>(inner, s.embeddingCache.empty() ? fs::path() : fs::path(s.embeddingCache));
}

struct Context {
  std::shared_ptr<const Embedder> embedder;
  PipelineOptions options;

  ~Context() {
    if (auto* caching = dynamic_cast<const CachingEmbedder*>(embedder.get())) {
      try {
        caching->flush();
      } catch (const std::exception& e) {
        spdlog::warn("could not write embedding cache: {}", e.what());
      }
    }
  }
};

std::unique_ptr<Context> make_context(const Settings& s) {
  auto ctx = std::make_unique<Context>();
  PipelineOptions& o = ctx->options;
  o.metric = parse_metric(s.metric);
  o.k = s.k;
  o.technique = parse_technique(s.technique);
  if (o.metric == Metric::Cosine) {
    ctx->embedder = make_embedder(s);
    o.embedder = ctx->embedder.get();
  }
  if (s.maxLen || s.parallel || s.maxPaths != 100'000) {
    EnumerationOptions e;
    e.maxLen = s.maxLen;
    e.maxPaths = s.maxPaths;
    e.parallel = s.parallel;
    o.enumeration = e;
  }
  o.generation.modelName = s.llmModel;
  o.generation.temperature = s.temperature;
  o.generation.maxOutputTokens = s.maxOutputTokens;
  o.generation.pricePerThousandInputTokens = s.price;
  o.threads = s.threads;
  return ctx;
}

std::unique_ptr<CompletionBackend> make_backend(const Settings& s) {
  if (s.backend == "replay") {
    if (s.replayFile.empty()) throw UsageError("--backend replay requires --replay <fixture.json>");
    return std::make_unique<ReplayBackend>(ReplayBackend::load(s.replayFile));
  }
  const char* endpoint = std::getenv(LiveBackend::kEndpointEnv);
  if (!endpoint || !*endpoint)
    throw UsageError(fmt::format("--backend live requires ${} and ${}", LiveBackend::kEndpointEnv,
                                 LiveBackend::kApiKeyEnv));
  return std::make_unique<LiveBackend>(LiveBackend::from_env());
}

ScoreOptions score_options(const Settings& s) {
  return {s.mode == "any" ? ScoreMode::AnyOfTopK : ScoreMode::PerConstraint,
          s.strict ? UnjudgedPolicy::Strict : UnjudgedPolicy::AsIncorrect};
}

std::vector<ocl::CheckVerdict> validate_all(const std::vector<std::string>& texts, const UmlModel& model,
                                            unsigned maxInFlight) {
  std::vector<ocl::CheckVerdict> out(texts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < texts.size(); i = next++) out[i] = ocl::validate(texts[i], model);
  };
  std::size_t n = std::min<std::size_t>(std::max(1u, maxInFlight), texts.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  return out;
}

EvalReport build_report(const Settings& s, const UmlModel& model, const std::vector<Completion>& completions,
                        const std::map<std::string, std::string>& texts) {
  std::vector<SpecRecord> records = records_from_completions(completions, model, texts);
  if (!s.verdictsFile.empty()) apply_correctness(records, load_correctness(s.verdictsFile));
  ScoreOptions options = score_options(s);
  EvalReport report = evaluate(records, s.ks, options);
  report.technique = completions.empty() ? s.technique : completions.front().technique;
  report.cost = cost_report(completions);

  std::vector<PromptSample> samples = prompt_samples(completions);
  if (!s.baselineRunLog.empty()) {
    std::vector<Completion> baseline = load_run_log(s.baselineRunLog);
    std::vector<SpecRecord> baseRecords = records_from_completions(baseline, model, texts);
    if (!s.baselineVerdictsFile.empty()) apply_correctness(baseRecords, load_correctness(s.baselineVerdictsFile));
    report.comparisonK = s.compareK;
    report.mcnemarValidity = mcnemar(paired_outcomes(records, baseRecords, s.compareK, Outcome::Validity, options));
    if (!s.verdictsFile.empty() && !s.baselineVerdictsFile.empty())
      report.mcnemarCorrectness =
          mcnemar(paired_outcomes(records, baseRecords, s.compareK, Outcome::Correctness, options));
    for (PromptSample& p : prompt_samples(baseline)) samples.push_back(std::move(p));
  }
  std::vector<UmlModel> models{model};
  report.sizeScaling = size_scaling(models, samples);
  return report;
}

void emit_report(const Settings& s, const EvalReport& report, std::ostream& out) {
  std::string jsonText = to_json(report).dump(2) + "\n";
  std::string table = render_table(report);
  if (!s.outDir.empty()) {
    write_file(fs::path(s.outDir) / "report.json", jsonText);
    write_file(fs::path(s.outDir) / "report.txt", table);
  }
  out << table;
}

int cmd_ingest(const Settings& s, std::ostream& out) {
  UmlModel model = load_model(s.modelFile);
  out << json{{"name", model.name()},
              {"classes", model.classes().size()},
              {"associations", model.associations().size()},
              {"model", model_to_json(model)}}
             .dump()
      << '\n';
  return kExitOk;
}

int cmd_extract(const Settings& s, std::ostream& out) {
  for (const SpecInput& spec : spec_inputs(s)) {
    auto tokens = nlp::preprocess(spec.text);
    json tj = json::array();
    for (const nlp::Token& t : tokens)
      tj.push_back({{"surface", t.surface}, {"lemma", t.lemma}, {"pos", nlp::to_string(t.pos)}});
    out << json{{"id", spec.id}, {"elements", nlp::extract_uml_elements(tokens)}, {"tokens", tj}}.dump() << '\n';
  }
  return kExitOk;
}

int cmd_paths(const Settings& s, std::ostream& out) {
  UmlModel model = load_model(s.modelFile);
  auto ctx = make_context(s);
  for (const SimplePath& p : model_paths(model, ctx->options)) out << json{{"path", p.classes}}.dump() << '\n';
  return kExitOk;
}

int cmd_rank(const Settings& s, std::ostream& out) {
  UmlModel model = load_model(s.modelFile);
  auto ctx = make_context(s);
  ctx->options.technique = Technique::PathOcl;
  auto paths = model_paths(model, ctx->options);
  for (const SpecInput& spec : spec_inputs(s)) {
    SpecPrompts p = prepare_spec(model, paths, spec, ctx->options);
    for (const RankedPath& r : p.ranked)
      out << json{{"spec_id", spec.id},
                  {"rank", r.rank},
                  {"score", r.score},
                  {"metric", to_string(r.metric)},
                  {"path", r.path.classes}}
                 .dump()
          << '\n';
  }
  return kExitOk;
}

int cmd_prompt(const Settings& s, std::ostream& out) {
  UmlModel model = load_model(s.modelFile);
  auto ctx = make_context(s);
  auto specs = spec_inputs(s);
  for (const GenerationJob& job : build_jobs(model, specs, ctx->options))
    out << prompt_record(job.specId, job.rank, job.bundle).dump() << '\n';
  return kExitOk;
}

int cmd_generate(const Settings& s, std::ostream& out) {
  UmlModel model = load_model(s.modelFile);
  auto ctx = make_context(s);
  auto backend = make_backend(s);
  auto specs = spec_inputs(s);
  std::vector<GenerationJob> jobs = build_jobs(model, specs, ctx->options);

  std::optional<RateLimiter> limiter;
  if (s.rps > 0) limiter.emplace(s.rps, s.burst);
  std::ostringstream log;
  FanOutOptions fan{s.maxInFlight, limiter ? &*limiter : nullptr, &log};
  generate_all(jobs, ctx->options.generation, *backend, fan);
  if (s.runLog.empty()) {
    out << log.str();
  } else {
    write_file(s.runLog, log.str());
    out << fmt::format("wrote {} completions to {}\n", jobs.size(), s.runLog);
  }
  return kExitOk;
}

int cmd_validate(const Settings& s, std::ostream& out) {
  UmlModel model = load_model(s.modelFile);
  if (!s.constraint.empty()) {
    ocl::CheckVerdict v = ocl::validate(s.constraint, model);
    out << to_json(v).dump() << '\n';
    return kExitOk;
  }
  if (s.runLog.empty()) throw UsageError("one of --constraint or --run-log is required");
  std::vector<Completion> completions = load_run_log(s.runLog);
  std::vector<std::string> texts;
  for (const Completion& c : completions) texts.push_back(c.text);
  std::vector<ocl::CheckVerdict> verdicts = validate_all(texts, model, s.maxInFlight);
  for (std::size_t i = 0; i < completions.size(); ++i)
    out << json{{"spec_id", completions[i].specId},
                {"rank", completions[i].rank},
                {"text", completions[i].text},
                {"verdict", to_json(verdicts[i])}}
               .dump()
        << '\n';
  return kExitOk;
}

std::map<std::string, std::string> spec_texts(const Settings& s) {
  std::map<std::string, std::string> texts;
  if (!s.specsFile.empty())
    for (const SpecInput& spec : load_specs(s.specsFile)) texts[spec.id] = spec.text;
  return texts;
}

int cmd_evaluate(const Settings& s, std::ostream& out) {
  UmlModel model = load_model(s.modelFile);
  if (s.runLog.empty()) throw UsageError("--run-log is required");
  EvalReport report = build_report(s, model, load_run_log(s.runLog), spec_texts(s));
  emit_report(s, report, out);
  return kExitOk;
}

int cmd_cost(const Settings& s, std::ostream& out) {
  if (s.runLog.empty()) throw UsageError("--run-log is required");
  std::vector<Completion> completions = load_run_log(s.runLog);
  out << to_json(cost_report(completions)).dump(2) << '\n';
  return kExitOk;
}

int cmd_run(const Settings& s, std::ostream& out) {
  if (s.outDir.empty()) throw UsageError("--out is required");
  UmlModel model = load_model(s.modelFile);
  auto ctx = make_context(s);
  auto backend = make_backend(s);
  auto specs = spec_inputs(s);
  std::vector<GenerationJob> jobs = build_jobs(model, specs, ctx->options);

  std::string prompts;
  for (const GenerationJob& job : jobs) prompts += prompt_record(job.specId, job.rank, job.bundle).dump() + "\n";
  write_file(fs::path(s.outDir) / "prompts.jsonl", prompts);

  std::optional<RateLimiter> limiter;
  if (s.rps > 0) limiter.emplace(s.rps, s.burst);
  std::ostringstream log;
  std::vector<Completion> completions =
      generate_all(jobs, ctx->options.generation, *backend, {s.maxInFlight, limiter ? &*limiter : nullptr, &log});
  write_file(fs::path(s.outDir) / "run_log.jsonl", log.str());

  std::map<std::string, std::string> texts;
  for (const SpecInput& spec : specs) texts[spec.id] = spec.text;
  std::string checked;
  for (const Completion& c : completions)
    checked += json{{"spec_id", c.specId}, {"rank", c.rank}, {"text", c.text},
                    {"verdict", to_json(ocl::validate(c.text, model))}}
                   .dump() +
               "\n";
  write_file(fs::path(s.outDir) / "validated.jsonl", checked);

  EvalReport report = build_report(s, model, completions, texts);
  emit_report(s, report, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank UML paths for an English specification, prompt an LLM for OCL and score the results", "oclpath"};
  app.set_version_flag("--version", fmt::format("oclpath {} (prompt templates {})", kVersion, kTemplateVersion));
  app.set_config("--config", "", "TOML or INI file of option values; flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  std::function<int(const Settings&, std::ostream&)> action;
  auto command = [&](const char* name, const char* help, int (*fn)(const Settings&, std::ostream&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  CLI::App* ingest = command("ingest", "load and validate a UML model", cmd_ingest);
  add_model(ingest, s);

  CLI::App* extract = command("extract", "tokenize a specification and list its UML elements", cmd_extract);
  add_specs(extract, s);

  CLI::App* paths = command("paths", "enumerate simple paths of the model graph", cmd_paths);
  add_model(paths, s);
  paths->add_option("--max-len", s.maxLen, "longest path in nodes")->check(CLI::PositiveNumber);
  paths->add_option("--max-paths", s.maxPaths, "abort when more paths would be produced")->check(CLI::PositiveNumber);
  paths->add_flag("--parallel", s.parallel, "enumerate on worker threads");

  CLI::App* rank = command("rank", "rank simple paths against specifications", cmd_rank);
  add_model(rank, s);
  add_specs(rank, s);
  add_ranking(rank, s);

  CLI::App* prompt = command("prompt", "craft prompts (JSON lines)", cmd_prompt);
  add_model(prompt, s);
  add_specs(prompt, s);
  add_ranking(prompt, s);
  add_technique(prompt, s);

  CLI::App* generate = command("generate", "generate OCL candidates and write a run log", cmd_generate);
  add_model(generate, s);
  add_specs(generate, s);
  add_ranking(generate, s);
  add_technique(generate, s);
  add_generation(generate, s);
  generate->add_option("--run-log", s.runLog, "output run log (stdout when omitted)");

  CLI::App* validate = command("validate", "type-check a constraint or every completion of a run log", cmd_validate);
  add_model(validate, s);
  auto* c = validate->add_option("--constraint", s.constraint, "OCL constraint text");
  validate->add_option("--run-log", s.runLog, "run log to check")->check(CLI::ExistingFile)->excludes(c);
  validate->add_option("--max-in-flight", s.maxInFlight, "worker threads")->check(CLI::PositiveNumber);

  CLI::App* evaluate = command("evaluate", "score a run log: validity/correctness@k, errors, cost", cmd_evaluate);
  add_model(evaluate, s);
  evaluate->add_option("--run-log", s.runLog, "run log to score")->check(CLI::ExistingFile);
  evaluate->add_option("--specs", s.specsFile, "specification file, for report context")->check(CLI::ExistingFile);
  add_scoring(evaluate, s);
  evaluate->add_option("--out", s.outDir, "write report.json and report.txt here");

  CLI::App* cost = command("cost", "summarize token usage and cost of a run log", cmd_cost);
  cost->add_option("--run-log", s.runLog, "run log")->check(CLI::ExistingFile);

  CLI::App* run = command("run", "full pipeline: prompts, generation, validation, report", cmd_run);
  add_model(run, s);
  add_specs(run, s);
  add_ranking(run, s);
  add_technique(run, s);
  add_generation(run, s);
  add_scoring(run, s);
  run->add_option("--out", s.outDir, "output directory");

  for (const std::string& arg : args) {
    if (app.get_subcommand_no_throw(arg)) {
      app.config_formatter(std::make_shared<SubcommandConfig>(arg));
      break;
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action(s, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BackendError& e) {
    err << "backend error: " << e.what() << '\n';
    return kExitBackend;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const fs::filesystem_error& e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace oclpath::cli
