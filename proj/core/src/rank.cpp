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

#include "oclpath/rank.hpp"

#include <algorithm>
#include <future>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "oclpath/error.hpp"

namespace oclpath {

std::string_view to_string(Metric metric) {
  return metric == Metric::Jaccard ? "jaccard" : "cosine";
}

Metric parse_metric(std::string_view text) {
  if (text == "jaccard") return Metric::Jaccard;
  if (text == "cosine") return Metric::Cosine;
  throw DataError(fmt::format("unknown metric '{}' (expected jaccard or cosine)", text));
}

PathPropertySet property_set(const UmlModel& model, const SimplePath& path) {
  PathPropertySet out{path, {}};
  for (const std::string& name : path.classes) {
    const UmlClass* cls = model.class_of(name);
    if (!cls) throw DataError(fmt::format("path {} names unknown class '{}'", path.str(), name));
    out.properties.insert(nlp::normalize_term(cls->name));
    for (const UmlAttribute& a : cls->attributes) out.properties.insert(nlp::normalize_term(a.name));
    for (const UmlOperation& op : cls->operations) out.properties.insert(nlp::normalize_term(op.name));
  }
  for (std::size_t i = 0; i + 1 < path.classes.size(); ++i) {
    const std::string& from = path.classes[i];
    const std::string& to = path.classes[i + 1];
    bool linked = false;
    for (const Navigation& nav : model.navigations_of(from)) {
      if (nav.target != to) continue;
      out.properties.insert(nlp::normalize_term(nav.role));
      linked = true;
    }
    if (!linked)
      throw DataError(fmt::format("path {} has no navigable association {} -> {}", path.str(), from, to));
  }
  return out;
}

double jaccard(const nlp::UmlElementSet& elements, const PropertySet& properties) {
  std::size_t common = 0;
  for (const std::string& e : elements) common += properties.count(e);
  std::size_t uni = elements.size() + properties.size() - common;
  return uni == 0 ? 0.0 : static_cast<double>(common) / static_cast<double>(uni);
}

double cosine_score(const nlp::UmlElementSet& elements, const PropertySet& properties,
                    const Embedder& embedder) {
  if (elements.empty() || properties.empty()) {
    spdlog::warn("cosine score requested with an empty {} set; scoring 0",
                 elements.empty() ? "element" : "property");
    return 0.0;
  }
  std::vector<std::vector<double>> pvecs;
  pvecs.reserve(properties.size());
  for (const std::string& p : properties) pvecs.push_back(embedder.embed(p));
  double sum = 0;
  for (const std::string& e : elements) {
    std::vector<double> ev = embedder.embed(e);
    for (const auto& pv : pvecs) sum += cosine(ev, pv);
  }
  return sum / static_cast<double>(elements.size() * properties.size());
}

std::vector<RankedPath> rank_paths(const UmlModel& model, const std::vector<SimplePath>& paths,
                                   const nlp::UmlElementSet& elements, const RankOptions& options) {
  if (paths.empty()) throw DataError("no paths to rank");
  if (options.k == 0) throw DataError("k must be at least 1");
  if (options.metric == Metric::Cosine && !options.embedder)
    throw DataError("cosine ranking requires an embedder");
  if (elements.empty()) spdlog::warn("specification yielded no UML elements; all scores are 0");

  std::vector<SimplePath> unique_paths = paths;
  std::sort(unique_paths.begin(), unique_paths.end(), path_order);
  unique_paths.erase(std::unique(unique_paths.begin(), unique_paths.end()), unique_paths.end());
  const std::vector<SimplePath>& input = unique_paths;

  std::vector<RankedPath> scored(input.size());
  auto score_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      PathPropertySet props = property_set(model, input[i]);
      RankedPath& r = scored[i];
      r.path = input[i];
      r.metric = options.metric;
      r.score = options.metric == Metric::Jaccard
                    ? jaccard(elements, props.properties)
                    : cosine_score(elements, props.properties, *options.embedder);
      r.properties = std::move(props.properties);
    }
  };

  unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || input.size() < 2 * threads) {
    score_range(0, input.size());
  } else {
    std::vector<std::future<void>> jobs;
    std::size_t chunk = (input.size() + threads - 1) / threads;
    for (std::size_t b = 0; b < input.size(); b += chunk)
      jobs.push_back(std::async(std::launch::async, score_range, b, std::min(input.size(), b + chunk)));
    for (auto& j : jobs) j.get();
  }

  std::sort(scored.begin(), scored.end(), [](const RankedPath& a, const RankedPath& b) {
    if (a.score != b.score) return a.score > b.score;
    return path_order(a.path, b.path);
  });
  if (scored.size() > options.k) scored.resize(options.k);
  for (std::size_t i = 0; i < scored.size(); ++i) scored[i].rank = i + 1;
  return scored;
}

}  // namespace oclpath
