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

#include "oclpath/pathgen.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <iterator>
#include <set>
#include <unordered_map>

#include <fmt/format.h>

namespace oclpath {

UmlGraph::UmlGraph(std::vector<std::string> nodes, std::vector<GraphEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::set<std::pair<std::string_view, std::string_view>> seen;
  for (const GraphEdge& e : edges_) {
    if (!has_node(e.from) || !has_node(e.to))
      throw DataError(fmt::format("edge {} -> {} references a missing node", e.from, e.to));
    if (!seen.emplace(e.from, e.to).second)
      throw DataError(fmt::format("duplicate edge {} -> {}", e.from, e.to));
  }
}

bool UmlGraph::has_node(const std::string& name) const {
  return std::find(nodes_.begin(), nodes_.end(), name) != nodes_.end();
}

bool UmlGraph::has_edge(const std::string& from, const std::string& to) const {
  return edge(from, to) != nullptr;
}

const GraphEdge* UmlGraph::edge(const std::string& from, const std::string& to) const {
  auto it = std::find_if(edges_.begin(), edges_.end(),
                         [&](const GraphEdge& e) { return e.from == from && e.to == to; });
  return it == edges_.end() ? nullptr : &*it;
}

std::vector<std::string> UmlGraph::successors(const std::string& node) const {
  std::set<std::string> out;
  for (const GraphEdge& e : edges_)
    if (e.from == node) out.insert(e.to);
  return {out.begin(), out.end()};
}

UmlGraph build_graph(const UmlModel& model) {
  std::vector<std::string> nodes;
  for (const UmlClass& c : model.classes()) nodes.push_back(c.name);
  std::vector<GraphEdge> edges;
  for (const UmlAssociation& a : model.associations()) {
    for (int e = 0; e < 2; ++e) {
      const UmlAssociationEnd& near = a.ends[e];
      const UmlAssociationEnd& far = a.ends[1 - e];
      if (!far.navigable) continue;
      auto it = std::find_if(edges.begin(), edges.end(), [&](const GraphEdge& g) {
        return g.from == near.className && g.to == far.className;
      });
      if (it == edges.end()) {
        edges.push_back({near.className, far.className, {}});
        it = std::prev(edges.end());
      }
      EdgeRole role{far.role, far.multiplicity};
      if (std::find(it->roles.begin(), it->roles.end(), role) == it->roles.end())
        it->roles.push_back(std::move(role));
    }
  }
  return UmlGraph(std::move(nodes), std::move(edges));
}

std::string SimplePath::str() const { return fmt::format("[{}]", fmt::join(classes, ", ")); }

bool path_order(const SimplePath& a, const SimplePath& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.classes < b.classes;
}

PathLimitExceeded::PathLimitExceeded(std::size_t cap)
    : DataError(fmt::format("simple path enumeration exceeded the cap of {} paths; "
                            "lower the maximum path length",
                            cap)),
      cap_(cap) {}

std::optional<std::size_t> default_max_len(const UmlGraph& graph) {
  if (graph.nodes().size() <= 8) return std::nullopt;
  return 5;
}

EnumerationOptions default_options(const UmlGraph& graph) {
  EnumerationOptions opts;
  opts.maxLen = default_max_len(graph);
  return opts;
}

namespace {

struct Enumerator {
  const std::vector<std::vector<std::size_t>>& adjacency;
  std::size_t maxLen;
  std::size_t cap;
  std::atomic<std::size_t>& produced;

  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> path;
  std::vector<bool> visited;

  void run(std::size_t start) {
    visited.assign(adjacency.size(), false);
    extend(start);
  }

  void extend(std::size_t node) {
    path.push_back(node);
    visited[node] = true;
    if (produced.fetch_add(1) + 1 > cap) throw PathLimitExceeded(cap);
    out.push_back(path);
    if (path.size() < maxLen) {
      for (std::size_t next : adjacency[node])
        if (!visited[next]) extend(next);
    }
    visited[node] = false;
    path.pop_back();
  }
};

}  // namespace

std::vector<SimplePath> enumerate_simple_paths(const UmlGraph& graph,
                                               const EnumerationOptions& options) {
  const auto& nodes = graph.nodes();
  if (nodes.empty()) throw DataError("cannot enumerate paths of an empty graph");
  if (options.maxLen && *options.maxLen == 0) throw DataError("maximum path length must be positive");

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], i);
  std::vector<std::vector<std::size_t>> adjacency(nodes.size());
  for (const GraphEdge& e : graph.edges()) {
    adjacency[index.at(e.from)].push_back(index.at(e.to));
  }

  const std::size_t maxLen = options.maxLen.value_or(nodes.size());
  std::atomic<std::size_t> produced{0};
  std::vector<std::vector<std::size_t>> raw;

  auto from_start = [&](std::size_t start) {
    Enumerator en{adjacency, maxLen, options.maxPaths, produced, {}, {}, {}};
    en.run(start);
    return std::move(en.out);
  };

  if (options.parallel && nodes.size() > 1) {
    std::vector<std::future<std::vector<std::vector<std::size_t>>>> jobs;
    for (std::size_t s = 0; s < nodes.size(); ++s)
      jobs.push_back(std::async(std::launch::async, from_start, s));
    std::exception_ptr failure;
    for (auto& job : jobs) {
      try {
        auto part = job.get();
        raw.insert(raw.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
      } catch (...) {
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::size_t s = 0; s < nodes.size(); ++s) {
      auto part = from_start(s);
      raw.insert(raw.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  }

  std::vector<SimplePath> paths;
  paths.reserve(raw.size());
  for (const auto& p : raw) {
    SimplePath sp;
    sp.classes.reserve(p.size());
    for (std::size_t n : p) sp.classes.push_back(nodes[n]);
    paths.push_back(std::move(sp));
  }
  std::sort(paths.begin(), paths.end(), path_order);
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  return paths;
}

}  // namespace oclpath
