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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <sstream>

#include "test_support.hpp"

namespace oclpath::cli {
namespace {

using oclpath::testing::data_path;
using oclpath::testing::read_text;
using oclpath::testing::TempDir;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  return out;
}

const std::string kAirport = data_path("airport.model.json").string();
const std::string kSpec = "The maximum number of passengers on any flight may not exceed 1000.";

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

TEST(Cli, Version) {
  Result r = run({"--version"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("oclpath 0.1.0"), std::string::npos);
  EXPECT_NE(r.out.find("templates-v1"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"paths"}).code, kExitUsage);
  EXPECT_EQ(run({"paths", "--model", "/nonexistent.json"}).code, kExitUsage);
  EXPECT_EQ(run({"rank", "--model", kAirport, "--spec", kSpec, "--metric", "dice"}).code, kExitUsage);
  EXPECT_EQ(run({"rank", "--model", kAirport}).code, kExitUsage);
  EXPECT_EQ(run({"generate", "--model", kAirport, "--spec", kSpec}).code, kExitUsage);
}

TEST(Cli, DataErrors) {
  TempDir dir;
  write(dir / "bad.json", "{\"name\": \"x\", \"classes\": [");
  Result r = run({"ingest", "--model", (dir / "bad.json").string()});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.err.find("data error"), std::string::npos);
  write(dir / "dup.json", R"({"name": "x", "classes": [{"name": "A"}, {"name": "A"}], "associations": []})");
  EXPECT_EQ(run({"ingest", "--model", (dir / "dup.json").string()}).code, kExitData);
  EXPECT_EQ(run({"paths", "--model", kAirport, "--max-paths", "5"}).code, kExitData);
}

TEST(Cli, BackendErrorOnReplayMiss) {
  TempDir dir;
  write(dir / "empty.json", "{}");
  Result r = run({"generate", "--model", kAirport, "--spec", kSpec, "--k", "1", "--replay", (dir / "empty.json").string()});
  EXPECT_EQ(r.code, kExitBackend);
  EXPECT_NE(r.err.find("backend error"), std::string::npos);
}

TEST(Cli, Paths) {
  Result r = run({"paths", "--model", kAirport});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto lines = json_lines(r.out);
  EXPECT_EQ(lines.size(), 26u);
  auto has = [&](std::vector<std::string> p) {
    for (const auto& l : lines)
      if (l["path"] == nlohmann::json(p)) return true;
    return false;
  };
  EXPECT_TRUE(has({"Airline", "Flight"}));
  EXPECT_TRUE(has({"Flight", "Airport"}));
  EXPECT_TRUE(has({"Airport"}));
}

TEST(Cli, RankTopThree) {
  Result r = run({"rank", "--model", kAirport, "--spec", kSpec, "--metric", "jaccard", "--k", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0]["rank"], 1);
  EXPECT_EQ(lines[0]["path"], nlohmann::json({"Flight", "Person"}));
  EXPECT_DOUBLE_EQ(lines[0]["score"].get<double>(), 2.0 / 11.0);
}

TEST(Cli, ConfigPrecedence) {
  TempDir dir;
  write(dir / "run.toml", "k = 2\nmetric = \"jaccard\"\nreplay = \"unused.json\"\n\n[paths]\nmax-len = 1\n");
  std::string cfg = (dir / "run.toml").string();
  EXPECT_EQ(json_lines(run({"rank", "--model", kAirport, "--spec", kSpec}).out).size(), 10u);
  EXPECT_EQ(json_lines(run({"rank", "--config", cfg, "--model", kAirport, "--spec", kSpec}).out).size(), 2u);
  EXPECT_EQ(json_lines(run({"--config", cfg, "rank", "--model", kAirport, "--spec", kSpec}).out).size(), 2u);
  EXPECT_EQ(json_lines(run({"rank", "--config", cfg, "--model", kAirport, "--spec", kSpec, "--k", "1"}).out).size(), 1u);
  EXPECT_EQ(json_lines(run({"paths", "--config", cfg, "--model", kAirport}).out).size(), 4u);
  write(dir / "bad.toml", "k = 0\n");
  EXPECT_EQ(run({"rank", "--config", (dir / "bad.toml").string(), "--model", kAirport, "--spec", kSpec}).code,
            kExitUsage);
}

TEST(Cli, ValidateConstraint) {
  Result r = run({"validate", "--model", kAirport, "--constraint",
                  "context Flight inv: self.passengers->size() <= 1000"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "{\"valid\":true,\"category\":null,\"message\":\"\",\"span\":[0,0]}\n");
  r = run({"validate", "--model", kAirport, "--constraint", "context Flight inv: self.bogus > 0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(r.out)["category"], "UNDEFINED_OPERATION");
}

TEST(Cli, ExtractElements) {
  Result r = run({"extract", "--spec", kSpec});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = json_lines(r.out).at(0);
  EXPECT_EQ(j["elements"], nlohmann::json({"flight", "maximum", "number", "passenger"}));
}

TEST(Cli, RunWritesArtifactsDeterministically) {
  TempDir a, b;
  auto args = [&](const TempDir& d) {
    return std::vector<std::string>{"run",      "--model", kAirport,
                                    "--specs",  data_path("synthetic/specs.jsonl").string(),
                                    "--k",      "10",
                                    "--replay", data_path("synthetic/replay.json").string(),
                                    "--verdicts", data_path("synthetic/verdicts.jsonl").string(),
                                    "--out",    d.path().string()};
  };
  Result ra = run(args(a));
  ASSERT_EQ(ra.code, kExitOk) << ra.err;
  Result rb = run(args(b));
  ASSERT_EQ(rb.code, kExitOk) << rb.err;
  for (const char* f : {"prompts.jsonl", "run_log.jsonl", "validated.jsonl", "report.json", "report.txt"}) {
    ASSERT_TRUE(std::filesystem::exists(a / f)) << f;
    EXPECT_EQ(read_text(a / f), read_text(b / f)) << f;
  }
  auto report = nlohmann::json::parse(read_text(a / "report.json"));
  EXPECT_EQ(report["validity_at_k"]["10"], 70.0);
  EXPECT_EQ(report["correctness_at_k"]["10"], 40.0);
  EXPECT_EQ(ra.out, rb.out);

  Result cost = run({"cost", "--run-log", (a / "run_log.jsonl").string()});
  ASSERT_EQ(cost.code, kExitOk) << cost.err;
  EXPECT_EQ(nlohmann::json::parse(cost.out)["count"], 100);

  Result eval = run({"evaluate", "--model", kAirport, "--run-log", (a / "run_log.jsonl").string(), "--verdicts",
                     data_path("synthetic/verdicts.jsonl").string(), "--ks", "1,3"});
  ASSERT_EQ(eval.code, kExitOk) << eval.err;
  EXPECT_NE(eval.out.find("20.0"), std::string::npos);
}

}  // namespace
}  // namespace oclpath::cli
