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

#ifndef OCLPATH_LLM_HPP
#define OCLPATH_LLM_HPP

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "oclpath/error.hpp"
#include "oclpath/prompt.hpp"

namespace oclpath {

struct GenerationConfig {
  std::string modelName = "gpt-4";
  double temperature = 0.0;
  int maxOutputTokens = 256;
  double pricePerThousandInputTokens = 0.003;  // USD
};

enum class BackendKind { Live, Replay };

std::string_view to_string(BackendKind kind);

struct Completion {
  // Where the prompt came from; filled by the pipeline, not the backend.
  std::string specId;
  std::size_t rank = 0;
  std::string technique;
  std::string modelName;

  std::string text;
  long inputTokens = 0;
  long outputTokens = 0;
  double costUsd = 0;
  BackendKind backend = BackendKind::Replay;

  friend bool operator==(const Completion&, const Completion&) = default;
};

nlohmann::ordered_json to_json(const Completion& c);
Completion completion_from_json(const nlohmann::json& j);
std::vector<Completion> load_run_log(const std::filesystem::path& path);

// Trims whitespace and unwraps a ``` fenced block (with optional language tag).
std::string strip_completion(std::string_view raw);

// Input-only pricing.
double input_cost(long inputTokens, const GenerationConfig& cfg);

// Hex SHA-256 of system + '\0' + user.
std::string prompt_key(const PromptBundle& bundle);

// What a backend returns before post-processing.
struct RawCompletion {
  std::string text;
  long inputTokens = 0;
  long outputTokens = 0;
};

class CompletionBackend {
 public:
  virtual ~CompletionBackend() = default;
  virtual RawCompletion complete(const PromptBundle& bundle, const GenerationConfig& cfg) const = 0;
  virtual BackendKind kind() const = 0;
};

class ReplayMiss : public BackendError {
 public:
  explicit ReplayMiss(std::string key);
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

// Content-addressed canned completions: {"<sha256>": {"text", "input_tokens",
// "output_tokens"}}.
class ReplayBackend final : public CompletionBackend {
 public:
  ReplayBackend() = default;
  static ReplayBackend load(const std::filesystem::path& fixture);
  static ReplayBackend from_json(const nlohmann::json& doc);

  void add(const std::string& key, RawCompletion entry);
  nlohmann::json to_json() const;
  std::size_t size() const { return entries_.size(); }

  RawCompletion complete(const PromptBundle& bundle, const GenerationConfig& cfg) const override;
  BackendKind kind() const override { return BackendKind::Replay; }

 private:
  std::map<std::string, RawCompletion> entries_;
};

struct RetryPolicy {
  int maxAttempts = 4;
  std::chrono::milliseconds initialDelay{500};
  std::chrono::milliseconds maxDelay{8000};
};

// OpenAI-compatible chat completions: POST {endpoint}/chat/completions with
// messages = [system, user].
class LiveBackend final : public CompletionBackend {
 public:
  static constexpr const char* kEndpointEnv = "OCLPATH_LLM_ENDPOINT";
  static constexpr const char* kApiKeyEnv = "OCLPATH_LLM_API_KEY";

  LiveBackend(std::string endpoint, std::string apiKey, RetryPolicy retry = {});
  // Throws DataError when the endpoint variable is unset.
  static LiveBackend from_env(RetryPolicy retry = {});

  RawCompletion complete(const PromptBundle& bundle, const GenerationConfig& cfg) const override;
  BackendKind kind() const override { return BackendKind::Live; }

 private:
  std::string endpoint_;
  std::string apiKey_;
  RetryPolicy retry_;
};

// Calls the backend, strips the answer and prices it. When the backend
// reports no input tokens the prompt's estimate is used.
Completion generate(const PromptBundle& bundle, const GenerationConfig& cfg, const CompletionBackend& backend);

// Token bucket shared by concurrent requests. A rate of 0 disables limiting.
class RateLimiter {
 public:
  RateLimiter(double requestsPerSecond, double burst);
  void acquire();

 private:
  double rate_;
  double capacity_;
  double tokens_;
  std::chrono::steady_clock::time_point last_;
  std::mutex mutex_;
};

struct GenerationJob {
  std::string specId;
  std::size_t rank = 0;
  std::string technique;
  std::string modelName;
  PromptBundle bundle;
};

struct FanOutOptions {
  unsigned maxInFlight = 4;
  RateLimiter* limiter = nullptr;
  std::ostream* runLog = nullptr;  // one JSON line per completion, in job order
};

// Runs jobs with up to maxInFlight concurrent requests; results follow job
// order. The first failure is rethrown after in-flight work drains.
std::vector<Completion> generate_all(std::span<const GenerationJob> jobs, const GenerationConfig& cfg,
                                     const CompletionBackend& backend, const FanOutOptions& options = {});

struct RankCost {
  std::size_t rank = 0;
  std::size_t count = 0;
  double costUsd = 0;
  double cumulativeCostUsd = 0;  // ranks 1..rank
  double meanPromptTokens = 0;
};

struct CostSummary {
  std::size_t count = 0;
  double totalCostUsd = 0;
  double meanPromptTokens = 0;
  std::vector<RankCost> perRank;
};

CostSummary cost_report(std::span<const Completion> completions);
nlohmann::ordered_json to_json(const CostSummary& summary);

}  // namespace oclpath

#endif  // OCLPATH_LLM_HPP
