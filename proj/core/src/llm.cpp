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

#include "oclpath/llm.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <thread>

#include <fmt/format.h>
#include <openssl/evp.h>
#include <spdlog/spdlog.h>

#include "http.hpp"

namespace oclpath {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

bool retryable_status(int status) {
  return status == 401 || status == 403 || status == 408 || status == 429 || status >= 500;
}

}  // namespace

std::string_view to_string(BackendKind kind) { return kind == BackendKind::Live ? "live" : "replay"; }

nlohmann::ordered_json to_json(const Completion& c) {
  return {{"spec_id", c.specId},         {"rank", c.rank},
          {"technique", c.technique},    {"model", c.modelName},
          {"text", c.text},              {"input_tokens", c.inputTokens},
          {"output_tokens", c.outputTokens}, {"cost_usd", c.costUsd},
          {"backend", to_string(c.backend)}};
}

Completion completion_from_json(const nlohmann::json& j) {
  Completion c;
  try {
    c.specId = j.at("spec_id").get<std::string>();
    c.rank = j.at("rank").get<std::size_t>();
    c.technique = j.value("technique", std::string("pathocl"));
    c.modelName = j.value("model", std::string());
    c.text = j.at("text").get<std::string>();
    c.inputTokens = j.at("input_tokens").get<long>();
    c.outputTokens = j.value("output_tokens", 0L);
    c.costUsd = j.at("cost_usd").get<double>();
    std::string backend = j.value("backend", std::string("replay"));
    if (backend != "live" && backend != "replay") throw DataError(fmt::format("unknown backend '{}'", backend));
    c.backend = backend == "live" ? BackendKind::Live : BackendKind::Replay;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(fmt::format("malformed completion record: {}", e.what()));
  }
  return c;
}

std::vector<Completion> load_run_log(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(fmt::format("cannot open run log {}", path.string()));
  std::vector<Completion> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    try {
      out.push_back(completion_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::parse_error& e) {
      throw DataError(fmt::format("{}:{}: {}", path.string(), lineno, e.what()));
    } catch (const DataError& e) {
      throw DataError(fmt::format("{}:{}: {}", path.string(), lineno, e.what()));
    }
  }
  return out;
}

std::string strip_completion(std::string_view raw) {
  std::string text = trim(raw);
  if (text.rfind("```", 0) == 0) {
    auto first_nl = text.find('\n');
    auto closing = text.rfind("```");
    if (first_nl != std::string::npos && closing != std::string::npos && closing > first_nl) {
      text = trim(std::string_view(text).substr(first_nl + 1, closing - first_nl - 1));
    } else {
      // Single-line fence: ```ocl context ...```
      text = text.substr(3);
      if (text.size() >= 3 && text.compare(text.size() - 3, 3, "```") == 0) text.resize(text.size() - 3);
      text = trim(text);
    }
  }
  return text;
}

double input_cost(long inputTokens, const GenerationConfig& cfg) {
  return static_cast<double>(inputTokens) / 1000.0 * cfg.pricePerThousandInputTokens;
}

std::string prompt_key(const PromptBundle& bundle) {
  std::string material = bundle.systemText;
  material.push_back('\0');
  material += bundle.userText;

  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(material.data(), material.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw BackendError("SHA-256 computation failed");
  std::string hex;
  hex.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

ReplayMiss::ReplayMiss(std::string key)
    : BackendError(fmt::format("replay fixture has no completion for prompt {}", key)), key_(std::move(key)) {}

ReplayBackend ReplayBackend::load(const std::filesystem::path& fixture) {
  std::ifstream in(fixture);
  if (!in) throw DataError(fmt::format("cannot open replay fixture {}", fixture.string()));
  try {
    return from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(fmt::format("{}: {}", fixture.string(), e.what()));
  }
}

ReplayBackend ReplayBackend::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw DataError("replay fixture must be a JSON object");
  ReplayBackend backend;
  for (const auto& [key, entry] : doc.items()) {
    try {
      backend.add(key, {entry.at("text").get<std::string>(), entry.at("input_tokens").get<long>(),
                        entry.at("output_tokens").get<long>()});
    } catch (const nlohmann::json::exception& e) {
      throw DataError(fmt::format("replay entry {}: {}", key, e.what()));
    }
  }
  return backend;
}

void ReplayBackend::add(const std::string& key, RawCompletion entry) { entries_[key] = std::move(entry); }

nlohmann::json ReplayBackend::to_json() const {
  nlohmann::json doc = nlohmann::json::object();
  for (const auto& [key, e] : entries_)
    doc[key] = {{"text", e.text}, {"input_tokens", e.inputTokens}, {"output_tokens", e.outputTokens}};
  return doc;
}

RawCompletion ReplayBackend::complete(const PromptBundle& bundle, const GenerationConfig&) const {
  std::string key = prompt_key(bundle);
  auto it = entries_.find(key);
  if (it == entries_.end()) throw ReplayMiss(key);
  return it->second;
}

LiveBackend::LiveBackend(std::string endpoint, std::string apiKey, RetryPolicy retry)
    : endpoint_(std::move(endpoint)), apiKey_(std::move(apiKey)), retry_(retry) {
  while (!endpoint_.empty() && endpoint_.back() == '/') endpoint_.pop_back();
  if (endpoint_.empty()) throw DataError("live backend needs an endpoint URL");
  if (retry_.maxAttempts < 1) retry_.maxAttempts = 1;
}

LiveBackend LiveBackend::from_env(RetryPolicy retry) {
  const char* endpoint = std::getenv(kEndpointEnv);
  if (!endpoint || !*endpoint)
    throw DataError(fmt::format("live backend requires ${} (and usually ${})", kEndpointEnv, kApiKeyEnv));
  const char* key = std::getenv(kApiKeyEnv);
  return LiveBackend(endpoint, key ? key : "", retry);
}

RawCompletion LiveBackend::complete(const PromptBundle& bundle, const GenerationConfig& cfg) const {
  nlohmann::json req = {{"model", cfg.modelName},
                        {"temperature", cfg.temperature},
                        {"max_tokens", cfg.maxOutputTokens},
                        {"messages",
                         {{{"role", "system"}, {"content", bundle.systemText}},
                          {{"role", "user"}, {"content", bundle.userText}}}}};
  std::vector<std::pair<std::string, std::string>> headers;
  if (!apiKey_.empty()) headers.emplace_back("Authorization", "Bearer " + apiKey_);
  const std::string url = endpoint_ + "/chat/completions";
  const std::string body = req.dump();

  auto delay = retry_.initialDelay;
  std::string last_error;
  for (int attempt = 1; attempt <= retry_.maxAttempts; ++attempt) {
    if (attempt > 1) {
      std::this_thread::sleep_for(delay);
      delay = std::min(delay * 2, retry_.maxDelay);
    }
    detail::HttpResponse res;
    try {
      res = detail::post_json(url, body, headers, std::chrono::seconds(120));
    } catch (const BackendError& e) {
      last_error = e.what();
      spdlog::warn("attempt {}/{}: {}", attempt, retry_.maxAttempts, last_error);
      continue;
    }
    if (res.status == 200) {
      try {
        auto doc = nlohmann::json::parse(res.body);
        RawCompletion out;
        out.text = doc.at("choices").at(0).at("message").at("content").get<std::string>();
        if (auto u = doc.find("usage"); u != doc.end()) {
          out.inputTokens = u->value("prompt_tokens", 0L);
          out.outputTokens = u->value("completion_tokens", 0L);
        }
        return out;
      } catch (const nlohmann::json::exception& e) {
        throw BackendError(fmt::format("malformed chat completion response: {}", e.what()));
      }
    }
    last_error = fmt::format("HTTP {} from {}", res.status, url);
    if (!retryable_status(res.status)) break;
    spdlog::warn("attempt {}/{}: {}", attempt, retry_.maxAttempts, last_error);
  }
  throw BackendError(fmt::format("chat completion failed: {}", last_error));
}

Completion generate(const PromptBundle& bundle, const GenerationConfig& cfg, const CompletionBackend& backend) {
  RawCompletion raw = backend.complete(bundle, cfg);
  Completion c;
  c.text = strip_completion(raw.text);
  c.inputTokens = raw.inputTokens > 0 ? raw.inputTokens : static_cast<long>(bundle.approxTokens);
  c.outputTokens = raw.outputTokens;
  c.costUsd = input_cost(c.inputTokens, cfg);
  c.backend = backend.kind();
  return c;
}

RateLimiter::RateLimiter(double requestsPerSecond, double burst)
    : rate_(requestsPerSecond),
      capacity_(std::max(1.0, burst)),
      tokens_(capacity_),
      last_(std::chrono::steady_clock::now()) {}

void RateLimiter::acquire() {
  if (rate_ <= 0) return;
  for (;;) {
    std::chrono::duration<double> wait{};
    {
      std::lock_guard lock(mutex_);
      auto now = std::chrono::steady_clock::now();
      tokens_ = std::min(capacity_, tokens_ + std::chrono::duration<double>(now - last_).count() * rate_);
      last_ = now;
      if (tokens_ >= 1.0) {
        tokens_ -= 1.0;
        return;
      }
      wait = std::chrono::duration<double>((1.0 - tokens_) / rate_);
    }
    std::this_thread::sleep_for(wait);
  }
}

std::vector<Completion> generate_all(std::span<const GenerationJob> jobs, const GenerationConfig& cfg,
                                     const CompletionBackend& backend, const FanOutOptions& options) {
  std::vector<std::optional<Completion>> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};

  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size() && !failed; i = next++) {
      try {
        if (options.limiter) options.limiter->acquire();
        Completion c = generate(jobs[i].bundle, cfg, backend);
        c.specId = jobs[i].specId;
        c.rank = jobs[i].rank;
        c.technique = jobs[i].technique;
        c.modelName = jobs[i].modelName;
        results[i] = std::move(c);
      } catch (...) {
        errors[i] = std::current_exception();
        failed = true;
      }
    }
  };

  unsigned workers = std::clamp<unsigned>(options.maxInFlight, 1u, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }

  std::vector<Completion> out;
  out.reserve(jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    if (!results[i]) continue;  // skipped after another job failed
    if (options.runLog) *options.runLog << to_json(*results[i]).dump() << '\n';
    out.push_back(std::move(*results[i]));
  }
  return out;
}

CostSummary cost_report(std::span<const Completion> completions) {
  CostSummary s;
  std::map<std::size_t, RankCost> ranks;
  double tokens = 0;
  for (const Completion& c : completions) {
    ++s.count;
    s.totalCostUsd += c.costUsd;
    tokens += static_cast<double>(c.inputTokens);
    RankCost& r = ranks[c.rank];
    r.rank = c.rank;
    ++r.count;
    r.costUsd += c.costUsd;
    r.meanPromptTokens += static_cast<double>(c.inputTokens);
  }
  if (s.count) s.meanPromptTokens = tokens / static_cast<double>(s.count);
  double cumulative = 0;
  for (auto& [rank, r] : ranks) {
    cumulative += r.costUsd;
    r.cumulativeCostUsd = cumulative;
    r.meanPromptTokens /= static_cast<double>(r.count);
    s.perRank.push_back(r);
  }
  return s;
}

nlohmann::ordered_json to_json(const CostSummary& summary) {
  nlohmann::ordered_json per = nlohmann::ordered_json::array();
  for (const RankCost& r : summary.perRank)
    per.push_back({{"rank", r.rank},
                   {"count", r.count},
                   {"cost_usd", r.costUsd},
                   {"cumulative_cost_usd", r.cumulativeCostUsd},
                   {"mean_prompt_tokens", r.meanPromptTokens}});
  return {{"count", summary.count},
          {"total_cost_usd", summary.totalCostUsd},
          {"mean_prompt_tokens", summary.meanPromptTokens},
          {"per_rank", std::move(per)}};
}

}  // namespace oclpath
