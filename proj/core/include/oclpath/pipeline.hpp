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

#ifndef OCLPATH_PIPELINE_HPP
#define OCLPATH_PIPELINE_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oclpath/embedding.hpp"
#include "oclpath/eval.hpp"
#include "oclpath/llm.hpp"
#include "oclpath/model.hpp"
#include "oclpath/nlp.hpp"
#include "oclpath/pathgen.hpp"
#include "oclpath/prompt.hpp"
#include "oclpath/rank.hpp"

namespace oclpath {

// Specification input: JSON lines {"id", "text", "context_hint"}.
struct SpecInput {
  std::string id;
  std::string text;
  std::optional<std::string> contextHint;

  friend bool operator==(const SpecInput&, const SpecInput&) = default;
};

std::vector<SpecInput> specs_from_jsonl(std::string_view text);
std::vector<SpecInput> load_specs(const std::filesystem::path& path);

struct PipelineOptions {
  Metric metric = Metric::Jaccard;
  std::size_t k = 10;
  Technique technique = Technique::PathOcl;
  const Embedder* embedder = nullptr;
  std::optional<EnumerationOptions> enumeration;  // graph defaults when unset
  GenerationConfig generation;
  unsigned threads = 1;
};

// Every prompt crafted for one specification. UML-Augmentation yields a single
// rank-1 prompt and no ranked paths.
struct SpecPrompts {
  SpecInput spec;
  nlp::UmlElementSet elements;
  std::vector<RankedPath> ranked;
  std::vector<PromptBundle> prompts;  // prompts[i] has rank i + 1
};

std::vector<SimplePath> model_paths(const UmlModel& model, const PipelineOptions& options);

SpecPrompts prepare_spec(const UmlModel& model, const std::vector<SimplePath>& paths, const SpecInput& spec,
                         const PipelineOptions& options);

std::vector<GenerationJob> build_jobs(const UmlModel& model, std::span<const SpecInput> specs,
                                      const PipelineOptions& options);

struct PipelineResult {
  std::vector<Completion> completions;
  std::vector<SpecRecord> records;
};

// Crafts prompts, generates with `backend` and validates every completion.
PipelineResult run_pipeline(const UmlModel& model, std::span<const SpecInput> specs, const PipelineOptions& options,
                            const CompletionBackend& backend, const FanOutOptions& fanOut = {});

}  // namespace oclpath

#endif  // OCLPATH_PIPELINE_HPP
