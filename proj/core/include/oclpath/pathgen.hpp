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

#ifndef OCLPATH_PATHGEN_HPP
#define OCLPATH_PATHGEN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "oclpath/error.hpp"
#include "oclpath/model.hpp"

namespace oclpath {

struct EdgeRole {
  std::string role;  // role on the target end
  Multiplicity multiplicity;

  friend bool operator==(const EdgeRole&, const EdgeRole&) = default;
};

// One edge per ordered pair. Several associations between the same pair
// contribute several roles to the same edge.
struct GraphEdge {
  std::string from;
  std::string to;
  std::vector<EdgeRole> roles;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

// Directed graph over class names.
class UmlGraph {
 public:
  UmlGraph() = default;
  UmlGraph(std::vector<std::string> nodes, std::vector<GraphEdge> edges);

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }

  bool has_node(const std::string& name) const;
  bool has_edge(const std::string& from, const std::string& to) const;
  const GraphEdge* edge(const std::string& from, const std::string& to) const;
  // Distinct successors of `node`, in sorted order.
  std::vector<std::string> successors(const std::string& node) const;

 private:
  std::vector<std::string> nodes_;
  std::vector<GraphEdge> edges_;
};

UmlGraph build_graph(const UmlModel& model);

struct SimplePath {
  std::vector<std::string> classes;

  std::size_t size() const { return classes.size(); }
  std::string str() const;  // "[A, B, C]"

  friend bool operator==(const SimplePath&, const SimplePath&) = default;
};

// Canonical order: shorter first, then lexicographic on class names.
bool path_order(const SimplePath& a, const SimplePath& b);

class PathLimitExceeded : public DataError {
 public:
  explicit PathLimitExceeded(std::size_t cap);
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

struct EnumerationOptions {
  // Longest path in nodes; nullopt means unbounded.
  std::optional<std::size_t> maxLen;
  std::size_t maxPaths = 100'000;
  // Explore start nodes on worker threads.
  bool parallel = false;
};

// Unbounded for graphs of at most 8 nodes, 5 otherwise.
std::optional<std::size_t> default_max_len(const UmlGraph& graph);
EnumerationOptions default_options(const UmlGraph& graph);

// Every simple path of 2..maxLen nodes plus every singleton, in path_order.
// Throws PathLimitExceeded when more than maxPaths would be produced.
std::vector<SimplePath> enumerate_simple_paths(const UmlGraph& graph, const EnumerationOptions& options);

}  // namespace oclpath

#endif  // OCLPATH_PATHGEN_HPP
