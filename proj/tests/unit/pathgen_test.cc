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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "path_oracle.hpp"
#include "test_support.hpp"

namespace oclpath {
namespace {

using nlohmann::json;
using testing::complete_digraph;
using testing::oracle_paths;
using testing::random_graph;

EnumerationOptions unbounded(bool parallel = false) {
  EnumerationOptions o;
  o.maxLen = std::nullopt;
  o.parallel = parallel;
  return o;
}

TEST(PathOrder, ShorterFirstThenLexicographic) {
  SimplePath a{{"B"}}, b{{"A", "C"}}, c{{"A", "D"}}, d{{"B", "A"}};
  EXPECT_TRUE(path_order(a, b));
  EXPECT_TRUE(path_order(b, c));
  EXPECT_TRUE(path_order(c, d));
  EXPECT_FALSE(path_order(d, c));
  EXPECT_FALSE(path_order(a, a));
  EXPECT_EQ(d.str(), "[B, A]");
}

TEST(Enumerate, MatchesPermutationOracleOnRandomGraphs) {
  std::mt19937 rng(20240521);
  std::uniform_int_distribution<std::size_t> size(1, 7);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    UmlGraph g = random_graph(rng, size(rng), density(rng));
    auto expected = oracle_paths(g);
    EXPECT_EQ(enumerate_simple_paths(g, unbounded()), expected) << "trial " << trial;
    EXPECT_EQ(enumerate_simple_paths(g, unbounded(true)), expected) << "trial " << trial;
  }
}

TEST(Enumerate, CompleteFourNodeDigraphHas64Paths) {
  auto paths = enumerate_simple_paths(complete_digraph({"A", "B", "C", "D"}), unbounded());
  EXPECT_EQ(paths.size(), 64u);
  EXPECT_EQ(std::count_if(paths.begin(), paths.end(), [](const SimplePath& p) { return p.size() == 1; }), 4);
}

TEST(Enumerate, MaxLenBoundsPathLength) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    UmlGraph g = random_graph(rng, 6, 0.5);
    auto all = oracle_paths(g);
    for (std::size_t maxLen : {1u, 2u, 3u, 5u}) {
      EnumerationOptions o;
      o.maxLen = maxLen;
      std::vector<SimplePath> expected;
      std::copy_if(all.begin(), all.end(), std::back_inserter(expected),
                   [&](const SimplePath& p) { return p.size() <= maxLen; });
      EXPECT_EQ(enumerate_simple_paths(g, o), expected);
    }
  }
}

TEST(Enumerate, PathsAreSimpleAndFollowEdges) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    UmlGraph g = random_graph(rng, 8, 0.35);
    auto paths = enumerate_simple_paths(g, default_options(g));
    EXPECT_TRUE(std::is_sorted(paths.begin(), paths.end(), path_order));
    for (const SimplePath& p : paths) {
      std::set<std::string> seen(p.classes.begin(), p.classes.end());
      EXPECT_EQ(seen.size(), p.size());
      for (std::size_t i = 0; i + 1 < p.size(); ++i) EXPECT_TRUE(g.has_edge(p.classes[i], p.classes[i + 1]));
    }
  }
}

TEST(Enumerate, CapThrowsPathLimitExceeded) {
  std::vector<std::string> nodes{"A", "B", "C", "D"};
  std::vector<GraphEdge> edges;
  for (const auto& a : nodes)
    for (const auto& b : nodes)
      if (a != b) edges.push_back({a, b, {}});
  EnumerationOptions o = unbounded();
  o.maxPaths = 63;
  EXPECT_THROW(enumerate_simple_paths(UmlGraph(nodes, edges), o), PathLimitExceeded);
  o.parallel = true;
  EXPECT_THROW(enumerate_simple_paths(UmlGraph(nodes, edges), o), PathLimitExceeded);
  o.maxPaths = 64;
  EXPECT_EQ(enumerate_simple_paths(UmlGraph(nodes, edges), o).size(), 64u);
}

TEST(Enumerate, DefaultMaxLenDependsOnGraphSize) {
  std::mt19937 rng(1);
  EXPECT_EQ(default_max_len(random_graph(rng, 8, 0.2)), std::nullopt);
  EXPECT_EQ(default_max_len(random_graph(rng, 9, 0.2)), std::optional<std::size_t>(5));
}

TEST(Enumerate, EmptyGraphIsRejected) { EXPECT_THROW(enumerate_simple_paths(UmlGraph{}, unbounded()), DataError); }

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(UmlGraph({"A"}, {{"A", "B", {}}}), DataError);
  EXPECT_THROW(UmlGraph({"A", "B"}, {{"A", "B", {}}, {"A", "B", {}}}), DataError);
}

TEST(BuildGraph, AirportEdgesAndListingPaths) {
  UmlGraph g = build_graph(testing::airport());
  EXPECT_EQ(g.nodes().size(), 4u);
  const GraphEdge* af = g.edge("Airport", "Flight");
  ASSERT_NE(af, nullptr);
  std::set<std::string> roles;
  for (const EdgeRole& r : af->roles) roles.insert(r.role);
  EXPECT_EQ(roles, (std::set<std::string>{"departingFlights", "arrivingFlights"}));
  EXPECT_EQ(g.successors("Flight"), (std::vector<std::string>{"Airline", "Airport", "Person"}));

  auto paths = enumerate_simple_paths(g, default_options(g));
  for (std::vector<std::string> want : {std::vector<std::string>{"Airline", "Flight"}, {"Flight", "Airport"},
                                        {"Airport"}, {"Airport", "Flight", "Airline", "Person"}})
    EXPECT_NE(std::find(paths.begin(), paths.end(), SimplePath{want}), paths.end()) << SimplePath{want}.str();
  EXPECT_EQ(paths.size(), 26u);
}

TEST(BuildGraph, SelfAssociationGivesOneSelfLoop) {
  UmlModel m = model_from_json(json::parse(R"({"name": "m", "classes": [{"name": "Person"}], "associations": [
      {"ends": [{"class": "Person", "role": "manager", "multiplicity": "0..1"},
                {"class": "Person", "role": "reports", "multiplicity": "*"}]}]})"));
  UmlGraph g = build_graph(m);
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.edges()[0].from, "Person");
  EXPECT_EQ(g.edges()[0].to, "Person");
  EXPECT_EQ(g.edges()[0].roles.size(), 2u);
  EXPECT_EQ(enumerate_simple_paths(g, default_options(g)), (std::vector<SimplePath>{{{"Person"}}}));
}

TEST(BuildGraph, NonNavigableEndHasNoEdge) {
  UmlModel m = model_from_json(json::parse(R"({"name": "m", "classes": [{"name": "A"}, {"name": "B"}],
      "associations": [{"ends": [{"class": "A", "role": "a", "multiplicity": "1", "navigable": false},
                                 {"class": "B", "role": "bs", "multiplicity": "*"}]}]})"));
  UmlGraph g = build_graph(m);
  EXPECT_TRUE(g.has_edge("A", "B"));
  EXPECT_FALSE(g.has_edge("B", "A"));
}

TEST(BuildGraph, RoyalLoyalUsesBoundedLength) {
  UmlGraph g = build_graph(testing::royal_loyal());
  EXPECT_EQ(g.nodes().size(), 10u);
  auto paths = enumerate_simple_paths(g, default_options(g));
  EXPECT_TRUE(std::all_of(paths.begin(), paths.end(), [](const SimplePath& p) { return p.size() <= 5; }));
  EXPECT_EQ(paths, enumerate_simple_paths(g, [&] {
              auto o = default_options(g);
              o.parallel = true;
              return o;
            }()));
}

}  // namespace
}  // namespace oclpath
