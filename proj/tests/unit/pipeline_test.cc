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

#include "oclpath/pipeline.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace oclpath {
namespace {

using testing::airport;
using testing::data_path;
using testing::royal_loyal;

TEST(Specs, Jsonl) {
  auto specs = specs_from_jsonl(
      "{\"id\": \"a\", \"text\": \"one\", \"context_hint\": \"Flight\"}\n\n{\"id\": \"b\", \"text\": \"two\"}\n");
  ASSERT_EQ(specs.size(), 2u);
  EXPECT_EQ(specs[0].contextHint, "Flight");
  EXPECT_FALSE(specs[1].contextHint);
  EXPECT_THROW(specs_from_jsonl("{\"text\": \"x\"}"), DataError);
  EXPECT_THROW(specs_from_jsonl("not json"), DataError);
  EXPECT_THROW(specs_from_jsonl("{\"id\": \"a\", \"text\": \"x\"}\n{\"id\": \"a\", \"text\": \"y\"}"), DataError);
  EXPECT_EQ(load_specs(data_path("airport.specs.jsonl")).size(), 4u);
}

TEST(Prepare, AirportTopOne) {
  PipelineOptions opts;
  opts.k = 3;
  auto paths = model_paths(airport(), opts);
  EXPECT_EQ(paths.size(), 26u);
  SpecPrompts sp = prepare_spec(airport(), paths, load_specs(data_path("airport.specs.jsonl"))[0], opts);
  EXPECT_EQ(sp.elements, (nlp::UmlElementSet{"flight", "maximum", "number", "passenger"}));
  ASSERT_EQ(sp.ranked.size(), 3u);
  ASSERT_EQ(sp.prompts.size(), 3u);
  EXPECT_EQ(sp.ranked[0].path, (SimplePath{{"Flight", "Person"}}));
  EXPECT_DOUBLE_EQ(sp.ranked[0].score, 2.0 / 11.0);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(sp.prompts[i].path, sp.ranked[i].path);
}

TEST(Prepare, UmlAugmentationSinglePrompt) {
  PipelineOptions opts;
  opts.technique = Technique::UmlAugmentation;
  SpecInput spec{"x", "Every customer is an adult.", std::nullopt};
  SpecPrompts sp = prepare_spec(royal_loyal(), model_paths(royal_loyal(), opts), spec, opts);
  EXPECT_TRUE(sp.ranked.empty());
  ASSERT_EQ(sp.prompts.size(), 1u);
  EXPECT_EQ(sp.prompts[0], craft_full_model_prompt(royal_loyal(), spec.text));
}

TEST(Prepare, CosineNeedsEmbedder) {
  PipelineOptions opts;
  opts.metric = Metric::Cosine;
  SpecInput spec{"x", "Flights have passengers.", std::nullopt};
  auto paths = model_paths(airport(), opts);
  EXPECT_THROW(prepare_spec(airport(), paths, spec, opts), DataError);
  HashingEmbedder emb;
  opts.embedder = &emb;
  opts.k = 5;
  EXPECT_EQ(prepare_spec(airport(), paths, spec, opts).prompts.size(), 5u);
}

TEST(Jobs, OnePerSpecAndRank) {
  PipelineOptions opts;
  opts.k = 4;
  auto specs = load_specs(data_path("airport.specs.jsonl"));
  auto jobs = build_jobs(airport(), specs, opts);
  ASSERT_EQ(jobs.size(), 16u);
  EXPECT_EQ(jobs[5].specId, "airport-2");
  EXPECT_EQ(jobs[5].rank, 2u);
  EXPECT_EQ(jobs[5].technique, "pathocl");
  EXPECT_EQ(jobs[5].modelName, "airport");
  opts.threads = 4;
  auto parallel = build_jobs(airport(), specs, opts);
  ASSERT_EQ(parallel.size(), jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) EXPECT_EQ(parallel[i].bundle, jobs[i].bundle);
}

TEST(Run, SyntheticFixtureScores) {
  PipelineOptions opts;
  opts.k = 10;
  auto specs = load_specs(data_path("synthetic/specs.jsonl"));
  ASSERT_EQ(specs.size(), 10u);
  ReplayBackend replay = ReplayBackend::load(data_path("synthetic/replay.json"));
  FanOutOptions fan;
  fan.maxInFlight = 4;
  PipelineResult res = run_pipeline(airport(), specs, opts, replay, fan);
  EXPECT_EQ(res.completions.size(), 100u);
  ASSERT_EQ(res.records.size(), 10u);
  apply_correctness(res.records, load_correctness(data_path("synthetic/verdicts.jsonl")));
  const double validity[] = {20, 50, 60, 70};
  const double correctness[] = {10, 20, 30, 40};
  for (std::size_t i = 0; i < kDefaultKs.size(); ++i) {
    EXPECT_DOUBLE_EQ(score_validity_at_k(res.records, kDefaultKs[i]), validity[i]);
    EXPECT_DOUBLE_EQ(score_correctness_at_k(res.records, kDefaultKs[i]), correctness[i]);
  }

  PipelineResult again = run_pipeline(airport(), specs, opts, replay);
  EXPECT_EQ(again.completions, res.completions);
}

TEST(Run, ReplayMissSurfaces) {
  PipelineOptions opts;
  opts.k = 1;
  ReplayBackend empty;
  auto specs = load_specs(data_path("airport.specs.jsonl"));
  EXPECT_THROW(run_pipeline(airport(), specs, opts, empty), ReplayMiss);
}

}  // namespace
}  // namespace oclpath
