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

#ifndef OCLPATH_EVAL_HPP
#define OCLPATH_EVAL_HPP

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "oclpath/llm.hpp"
#include "oclpath/model.hpp"
#include "oclpath/ocl/checker.hpp"
#include "oclpath/prompt.hpp"

namespace oclpath {

enum class Correctness { Correct, Incorrect, Unjudged };

std::string_view to_string(Correctness c);

struct RankVerdict {
  std::size_t rank = 0;
  ocl::CheckVerdict verdict;
  Correctness correctness = Correctness::Unjudged;
};

struct SpecRecord {
  std::string id;
  std::string modelName;
  std::string text;
  std::vector<RankVerdict> verdicts;  // ascending rank
};

// Throws DataError when a record has no verdicts, repeats a rank, or marks an
// invalid constraint correct.
void check_record(const SpecRecord& record);

// Groups completions by spec (first-appearance order), validates each text
// against `model` and sorts verdicts by rank. Correctness is left unjudged.
std::vector<SpecRecord> records_from_completions(std::span<const Completion> completions, const UmlModel& model,
                                                 const std::map<std::string, std::string>& specTexts = {});

// Correctness verdict file: JSON lines {"spec_id", "rank", "verdict"}.
using CorrectnessVerdicts = std::map<std::pair<std::string, std::size_t>, Correctness>;
CorrectnessVerdicts load_correctness(const std::filesystem::path& path);
CorrectnessVerdicts correctness_from_jsonl(std::string_view text);

// Applies judgments to matching (spec, rank) pairs and re-checks every record.
void apply_correctness(std::vector<SpecRecord>& records, const CorrectnessVerdicts& verdicts);

enum class ScoreMode {
  AnyOfTopK,      // share of specs with a success among ranks 1..k
  PerConstraint,  // share of constraints with rank <= k that succeed
};

enum class UnjudgedPolicy { AsIncorrect, Strict };

struct ScoreOptions {
  ScoreMode mode = ScoreMode::AnyOfTopK;
  UnjudgedPolicy unjudged = UnjudgedPolicy::AsIncorrect;
};

// Percentages in [0, 100]. Throw DataError for k == 0.
double score_validity_at_k(std::span<const SpecRecord> records, std::size_t k, const ScoreOptions& options = {});
double score_correctness_at_k(std::span<const SpecRecord> records, std::size_t k, const ScoreOptions& options = {});

struct PairedOutcome {
  std::string specId;
  bool techniqueA = false;
  bool techniqueB = false;
};

struct McNemarResult {
  double chiSquared = 0;
  double pValue = 1;
  // table[a][b], index 0 = success: [0][1] is B, [1][0] is C.
  std::array<std::array<std::size_t, 2>, 2> table{};
};

// Upper tail of the chi-squared distribution with one degree of freedom.
double chi2_survival_1df(double x);

McNemarResult mcnemar(std::span<const PairedOutcome> outcomes);
McNemarResult mcnemar_from_chi2(double chiSquared);

enum class Outcome { Validity, Correctness };

// Per-spec any-of-top-k success of two techniques over the same specs. Specs
// missing from either side throw.
std::vector<PairedOutcome> paired_outcomes(std::span<const SpecRecord> a, std::span<const SpecRecord> b,
                                           std::size_t k, Outcome outcome, const ScoreOptions& options = {});

// Share of each category among invalid constraints. Empty when every
// constraint is valid; otherwise all four categories are present.
std::map<ocl::ErrorCategory, double> error_breakdown(std::span<const SpecRecord> records);

enum class SizeCategory { Small, Medium, Large };

std::string_view to_string(SizeCategory c);
// Small <= 5 classes, medium 6..9, large >= 10.
SizeCategory size_category(std::size_t classCount);

struct PromptSample {
  std::string modelName;
  Technique technique = Technique::PathOcl;
  std::size_t approxTokens = 0;
};

struct SizeCell {
  SizeCategory category = SizeCategory::Small;
  Technique technique = Technique::PathOcl;
  std::size_t count = 0;
  double meanTokens = 0;
};

// One sample per completion, using the recorded input tokens.
std::vector<PromptSample> prompt_samples(std::span<const Completion> completions);

// Mean prompt tokens per (size category, technique); only populated cells are
// returned, ordered by category then technique. Unknown model names throw.
std::vector<SizeCell> size_scaling(std::span<const UmlModel> models, std::span<const PromptSample> prompts);

struct EvalReport {
  std::string technique;
  std::size_t specCount = 0;
  std::map<std::size_t, double> validityAtK;
  std::map<std::size_t, double> correctnessAtK;
  std::map<ocl::ErrorCategory, double> errorBreakdown;
  std::optional<CostSummary> cost;
  std::vector<SizeCell> sizeScaling;
  // Against a baseline run, at `comparisonK`.
  std::size_t comparisonK = 1;
  std::optional<McNemarResult> mcnemarValidity;
  std::optional<McNemarResult> mcnemarCorrectness;
};

inline constexpr std::array<std::size_t, 4> kDefaultKs = {1, 3, 5, 10};

EvalReport evaluate(std::span<const SpecRecord> records, std::span<const std::size_t> ks,
                    const ScoreOptions& options = {});

nlohmann::ordered_json to_json(const EvalReport& report);
std::string render_table(const EvalReport& report);

}  // namespace oclpath

#endif  // OCLPATH_EVAL_HPP
