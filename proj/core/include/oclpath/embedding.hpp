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

#ifndef OCLPATH_EMBEDDING_HPP
#define OCLPATH_EMBEDDING_HPP

#include <cstddef>
#include <filesystem>
#include <memory>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace oclpath {

// Maps a term to a fixed-dimension vector of unit L2 norm. embed() must be
// deterministic per term and safe to call concurrently.
class Embedder {
 public:
  virtual ~Embedder() = default;
  virtual std::vector<double> embed(std::string_view term) const = 0;
  virtual std::string provider() const = 0;
};

// Bag of hashed character trigrams over "#term#", L2-normalized. All
// components are non-negative, so cosine scores fall in [0, 1].
class HashingEmbedder final : public Embedder {
 public:
  static constexpr std::size_t kDefaultDimension = 256;

  explicit HashingEmbedder(std::size_t dimension = kDefaultDimension);

  std::vector<double> embed(std::string_view term) const override;
  std::string provider() const override;
  std::size_t dimension() const { return dimension_; }

 private:
  std::size_t dimension_;
};

// OpenAI-compatible embeddings endpoint: POST {base}/embeddings with
// {"model": ..., "input": term}. Vectors are re-normalized on receipt.
class RemoteEmbedder final : public Embedder {
 public:
  // `baseUrl` like "http://localhost:8080/v1".
  RemoteEmbedder(std::string baseUrl, std::string apiKey, std::string model);

  std::vector<double> embed(std::string_view term) const override;
  std::string provider() const override;

 private:
  std::string baseUrl_;
  std::string apiKey_;
  std::string model_;
};

// Memoizes another embedder, optionally persisting to a JSON file keyed by
// (provider, term). Concurrent lookups take a shared lock; inserts an
// exclusive one.
class CachingEmbedder final : public Embedder {
 public:
  explicit CachingEmbedder(std::shared_ptr<const Embedder> inner,
                           std::filesystem::path cacheFile = {});

  std::vector<double> embed(std::string_view term) const override;
  std::string provider() const override { return inner_->provider(); }

  // Writes the cache file if one was configured.
  void flush() const;
  std::size_t size() const;

 private:
  std::shared_ptr<const Embedder> inner_;
  std::filesystem::path cacheFile_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::string, std::vector<double>> cache_;
};

double cosine(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace oclpath

#endif  // OCLPATH_EMBEDDING_HPP
