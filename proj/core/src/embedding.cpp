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

#include "oclpath/embedding.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <mutex>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "http.hpp"
#include "oclpath/error.hpp"

namespace oclpath {

namespace {

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void normalize(std::vector<double>& v) {
  double norm = 0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  if (norm == 0) throw DataError("cannot normalize a zero embedding vector");
  for (double& x : v) x /= norm;
}

std::string cache_key(const std::string& provider, std::string_view term) {
  std::string key = provider;
  key.push_back('\0');
  key.append(term);
  return key;
}

}  // namespace

HashingEmbedder::HashingEmbedder(std::size_t dimension) : dimension_(dimension) {
  if (dimension_ == 0) throw DataError("embedding dimension must be positive");
}

std::vector<double> HashingEmbedder::embed(std::string_view term) const {
  if (term.empty()) throw DataError("cannot embed an empty term");
  std::string padded = fmt::format("#{}#", term);
  std::vector<double> v(dimension_, 0.0);
  for (std::size_t i = 0; i + 3 <= padded.size(); ++i) v[fnv1a(std::string_view(padded).substr(i, 3)) % dimension_] += 1.0;
  normalize(v);
  return v;
}

std::string HashingEmbedder::provider() const { return fmt::format("trigram-hash-{}", dimension_); }

RemoteEmbedder::RemoteEmbedder(std::string baseUrl, std::string apiKey, std::string model)
    : baseUrl_(std::move(baseUrl)), apiKey_(std::move(apiKey)), model_(std::move(model)) {
  while (!baseUrl_.empty() && baseUrl_.back() == '/') baseUrl_.pop_back();
}

std::vector<double> RemoteEmbedder::embed(std::string_view term) const {
  nlohmann::json req = {{"model", model_}, {"input", std::string(term)}};
  std::vector<std::pair<std::string, std::string>> headers;
  if (!apiKey_.empty()) headers.emplace_back("Authorization", "Bearer " + apiKey_);
  auto res = detail::post_json(baseUrl_ + "/embeddings", req.dump(), headers, std::chrono::seconds(30));
  if (res.status != 200)
    throw BackendError(fmt::format("embedding endpoint returned HTTP {}", res.status));
  std::vector<double> v;
  try {
    auto doc = nlohmann::json::parse(res.body);
    v = doc.at("data").at(0).at("embedding").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw BackendError(fmt::format("malformed embedding response: {}", e.what()));
  }
  if (v.empty()) throw BackendError("embedding endpoint returned an empty vector");
  normalize(v);
  return v;
}

std::string RemoteEmbedder::provider() const { return "remote:" + model_; }

CachingEmbedder::CachingEmbedder(std::shared_ptr<const Embedder> inner, std::filesystem::path cacheFile)
    : inner_(std::move(inner)), cacheFile_(std::move(cacheFile)) {
  if (cacheFile_.empty() || !std::filesystem::exists(cacheFile_)) return;
  std::ifstream in(cacheFile_);
  try {
    auto doc = nlohmann::json::parse(in);
    for (const auto& [provider, terms] : doc.items())
      for (const auto& [term, vec] : terms.items())
        cache_.emplace(cache_key(provider, term), vec.get<std::vector<double>>());
  } catch (const nlohmann::json::exception& e) {
    throw DataError(fmt::format("{}: malformed embedding cache: {}", cacheFile_.string(), e.what()));
  }
}

std::vector<double> CachingEmbedder::embed(std::string_view term) const {
  std::string key = cache_key(inner_->provider(), term);
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  std::vector<double> v = inner_->embed(term);
  std::unique_lock lock(mutex_);
  return cache_.try_emplace(key, std::move(v)).first->second;
}

void CachingEmbedder::flush() const {
  if (cacheFile_.empty()) return;
  nlohmann::json doc = nlohmann::json::object();
  {
    std::shared_lock lock(mutex_);
    for (const auto& [key, vec] : cache_) {
      auto sep = key.find('\0');
      doc[key.substr(0, sep)][key.substr(sep + 1)] = vec;
    }
  }
  std::ofstream out(cacheFile_);
  if (!out) throw DataError(fmt::format("cannot write embedding cache {}", cacheFile_.string()));
  out << doc.dump() << '\n';
}

std::size_t CachingEmbedder::size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw DataError("embedding dimensions differ");
  double dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0 || nb == 0) return 0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace oclpath
