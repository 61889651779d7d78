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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oclpath/pathgen.hpp"
#include "test_support.hpp"

namespace oclpath {
namespace {

using testing::airport;

const nlp::UmlElementSet kAirportElements{"number", "passenger", "flight", "maximum"};

// Multiplies another embedder's vectors by a fixed positive factor.
class ScaledEmbedder final : public Embedder {
 public:
  ScaledEmbedder(const Embedder& inner, double factor) : inner_(inner), factor_(factor) {}
  std::vector<double> embed(std::string_view term) const override {
    auto v = inner_.embed(term);
    for (double& x : v) x *= factor_;
    return v;
  }
  std::string provider() const override { return inner_.provider() + "-scaled"; }

 private:
  const Embedder& inner_;
  double factor_;
};

std::set<std::string> random_terms(std::mt19937& rng, std::size_t maxSize) {
  std::uniform_int_distribution<std::size_t> size(1, maxSize);
  std::uniform_int_distribution<int> len(1, 10);
  std::uniform_int_distribution<int> letter('a', 'z');
  std::set<std::string> out;
  for (std::size_t n = size(rng); out.size() < n;) {
    std::string t;
    for (int i = len(rng); i > 0; --i) t += static_cast<char>(letter(rng));
    out.insert(t);
  }
  return out;
}

TEST(PropertySet, AirlineFlight) {
  auto p = property_set(airport(), {{"Airline", "Flight"}});
  EXPECT_EQ(p.properties, (PropertySet{"airline", "flight", "name", "departtime", "arrivaltime", "duration",
                                       "maxnrpassenger"}));
}

TEST(PropertySet, OnlyTargetEndRolesPerHop) {
  auto p = property_set(airport(), {{"Airline", "Person"}});
  EXPECT_TRUE(p.properties.count("ceo"));
  EXPECT_FALSE(p.properties.count("managedairline"));
  EXPECT_TRUE(property_set(airport(), {{"Flight", "Airline"}}).properties.count("carrier"));
  auto q = property_set(airport(), {{"Airport", "Flight"}});
  EXPECT_TRUE(q.properties.count("departingflight"));
  EXPECT_TRUE(q.properties.count("arrivingflight"));
  EXPECT_FALSE(q.properties.count("origin"));
}

TEST(PropertySet, SingletonHasOnlyItsOwnProperties) {
  EXPECT_EQ(property_set(airport(), {{"Airport"}}).properties, (PropertySet{"airport", "name"}));
}

TEST(PropertySet, IncludesOperations) {
  auto p = property_set(testing::royal_loyal(), {{"LoyaltyAccount"}});
  EXPECT_EQ(p.properties, (PropertySet{"loyaltyaccount", "point", "number", "earn", "burn", "isempty"}));
}

TEST(PropertySet, RejectsDisconnectedPath) {
  EXPECT_THROW(property_set(airport(), {{"Airport", "Person"}}), DataError);
  EXPECT_THROW(property_set(airport(), {{"Plane"}}), DataError);
}

TEST(Jaccard, ExactCases) {
  PropertySet p{"a", "b", "c"};
  EXPECT_EQ(jaccard({"a", "b", "c"}, p), 1.0);
  EXPECT_EQ(jaccard({"x", "y"}, p), 0.0);
  EXPECT_EQ(jaccard({}, {}), 0.0);
  EXPECT_EQ(jaccard(kAirportElements, property_set(airport(), {{"Airline", "Flight"}}).properties), 0.1);
  EXPECT_EQ(jaccard(kAirportElements, property_set(airport(), {{"Flight", "Person"}}).properties), 2.0 / 11.0);
}

TEST(Jaccard, SymmetricAndBounded) {
  std::mt19937 rng(3);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_terms(rng, 6);
    auto b = random_terms(rng, 6);
    double s = jaccard(a, b);
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, 1.0);
    EXPECT_EQ(s, jaccard(b, a));
  }
}

TEST(Cosine, BoundsDeterminismAndScaleInvariance) {
  HashingEmbedder base;
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> factor(0.01, 100.0);
  for (int i = 0; i < 1000; ++i) {
    auto e = random_terms(rng, 5);
    std::vector<PropertySet> candidates;
    for (int c = 0; c < 4; ++c) candidates.push_back(random_terms(rng, 6));
    ScaledEmbedder scaled(base, factor(rng));

    std::vector<double> plain, resized;
    for (const PropertySet& p : candidates) {
      double s = cosine_score(e, p, base);
      EXPECT_GE(s, -1.0 - 1e-9);
      EXPECT_LE(s, 1.0 + 1e-9);
      EXPECT_EQ(s, cosine_score(e, p, base));
      plain.push_back(s);
      resized.push_back(cosine_score(e, p, scaled));
      EXPECT_NEAR(plain.back(), resized.back(), 1e-9);
    }
    auto argmax = [](const std::vector<double>& v) {
      return std::max_element(v.begin(), v.end()) - v.begin();
    };
    // Ties within rounding may flip the argmax; only compare clear winners.
    std::vector<double> sorted = plain;
    std::sort(sorted.rbegin(), sorted.rend());
    if (sorted[0] - sorted[1] > 1e-9) EXPECT_EQ(argmax(plain), argmax(resized));
  }
}

TEST(Cosine, IdenticalSingletonsScoreOne) {
  HashingEmbedder e;
  EXPECT_NEAR(cosine_score({"flight"}, {"flight"}, e), 1.0, 1e-12);
}

TEST(Cosine, EmptySetsScoreZero) {
  HashingEmbedder e;
  EXPECT_EQ(cosine_score({}, {"flight"}, e), 0.0);
  EXPECT_EQ(cosine_score({"flight"}, {}, e), 0.0);
}

class RankAirport : public ::testing::Test {
 protected:
  void SetUp() override {
    UmlGraph g = build_graph(airport());
    paths = enumerate_simple_paths(g, default_options(g));
  }
  std::vector<SimplePath> paths;
};

TEST_F(RankAirport, JaccardTopOneIsFlightPerson) {
  auto ranked = rank_paths(airport(), paths, kAirportElements, {Metric::Jaccard, 3, nullptr, 1});
  ASSERT_EQ(ranked.size(), 3u);
  EXPECT_EQ(ranked[0].path, (SimplePath{{"Flight", "Person"}}));
  EXPECT_EQ(ranked[0].score, 2.0 / 11.0);
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    EXPECT_EQ(ranked[i].rank, i + 1);
    EXPECT_EQ(ranked[i].metric, Metric::Jaccard);
    if (i) EXPECT_GE(ranked[i - 1].score, ranked[i].score);
  }
}

TEST_F(RankAirport, SortedWithPathOrderTieBreak) {
  auto ranked = rank_paths(airport(), paths, kAirportElements, {Metric::Jaccard, 1000, nullptr, 1});
  EXPECT_EQ(ranked.size(), paths.size());
  for (std::size_t i = 1; i < ranked.size(); ++i) {
    EXPECT_GE(ranked[i - 1].score, ranked[i].score);
    if (ranked[i - 1].score == ranked[i].score) EXPECT_TRUE(path_order(ranked[i - 1].path, ranked[i].path));
  }
}

TEST_F(RankAirport, ThreadsDoNotChangeResult) {
  HashingEmbedder e;
  for (Metric m : {Metric::Jaccard, Metric::Cosine}) {
    auto one = rank_paths(airport(), paths, kAirportElements, {m, 10, &e, 1});
    auto four = rank_paths(airport(), paths, kAirportElements, {m, 10, &e, 4});
    ASSERT_EQ(one.size(), four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      EXPECT_EQ(one[i].path, four[i].path);
      EXPECT_EQ(one[i].score, four[i].score);
    }
  }
}

TEST_F(RankAirport, DuplicatePathsAreMerged) {
  auto doubled = paths;
  doubled.insert(doubled.end(), paths.begin(), paths.end());
  auto ranked = rank_paths(airport(), doubled, kAirportElements, {Metric::Jaccard, 1000, nullptr, 1});
  EXPECT_EQ(ranked.size(), paths.size());
}

TEST_F(RankAirport, Errors) {
  EXPECT_THROW(rank_paths(airport(), {}, kAirportElements, {}), DataError);
  EXPECT_THROW(rank_paths(airport(), paths, kAirportElements, {Metric::Jaccard, 0, nullptr, 1}), DataError);
  EXPECT_THROW(rank_paths(airport(), paths, kAirportElements, {Metric::Cosine, 3, nullptr, 1}), DataError);
}

TEST(Metric, Names) {
  EXPECT_EQ(to_string(Metric::Jaccard), "jaccard");
  EXPECT_EQ(parse_metric("cosine"), Metric::Cosine);
  EXPECT_THROW(parse_metric("euclid"), DataError);
}

}  // namespace
}  // namespace oclpath
