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

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace oclpath {

std::vector<SpecInput> specs_from_jsonl(std::string_view text) {
  std::vector<SpecInput> out;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto j = nlohmann::json::parse(line);
      SpecInput s{j.at("id").get<std::string>(), j.at("text").get<std::string>(), std::nullopt};
      if (auto it = j.find("context_hint"); it != j.end() && !it->is_null()) s.contextHint = it->get<std::string>();
      if (s.id.empty()) throw DataError("empty id");
      if (!seen.insert(s.id).second) throw DataError(fmt::format("duplicate id '{}'", s.id));
      out.push_back(std::move(s));
    } catch (const nlohmann::json::exception& e) {
      throw DataError(fmt::format("specs line {}: {}", lineNo, e.what()));
    } catch (const DataError& e) {
      throw DataError(fmt::format("specs line {}: {}", lineNo, e.what()));
    }
  }
  return out;
}

std::vector<SpecInput> load_specs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(fmt::format("cannot open specs file {}", path.string()));
  std::stringstream buf;
  buf << in.rdbuf();
  return specs_from_jsonl(buf.str());
}

std::vector<SimplePath> model_paths(const UmlModel& model, const PipelineOptions& options) {
  UmlGraph graph = build_graph(model);
  return enumerate_simple_paths(graph, options.enumeration.value_or(default_options(graph)));
}

SpecPrompts prepare_spec(const UmlModel& model, const std::vector<SimplePath>& paths, const SpecInput& spec,
                         const PipelineOptions& options) {
  SpecPrompts out;
  out.spec = spec;
  auto tokens = nlp::preprocess(spec.text);
  out.elements = nlp::extract_uml_elements(tokens);
  if (options.technique == Technique::UmlAugmentation) {
    out.prompts.push_back(craft_full_model_prompt(model, spec.text));
    return out;
  }
  out.ranked = rank_paths(model, paths, out.elements, {options.metric, options.k, options.embedder, options.threads});
  for (const RankedPath& r : out.ranked) out.prompts.push_back(craft_prompt(model, r.path, spec.text));
  return out;
}

std::vector<GenerationJob> build_jobs(const UmlModel& model, std::span<const SpecInput> specs,
                                      const PipelineOptions& options) {
  std::vector<SimplePath> paths;
  if (options.technique == Technique::PathOcl) paths = model_paths(model, options);
  std::vector<GenerationJob> jobs;
  for (const SpecInput& spec : specs) {
    SpecPrompts p = prepare_spec(model, paths, spec, options);
    for (std::size_t i = 0; i < p.prompts.size(); ++i)
      jobs.push_back({spec.id, i + 1, std::string(to_string(options.technique)), model.name(), std::move(p.prompts[i])});
  }
  return jobs;
}

PipelineResult run_pipeline(const UmlModel& model, std::span<const SpecInput> specs, const PipelineOptions& options,
                            const CompletionBackend& backend, const FanOutOptions& fanOut) {
  std::vector<GenerationJob> jobs = build_jobs(model, specs, options);
  PipelineResult result;
  result.completions = generate_all(jobs, options.generation, backend, fanOut);
  std::map<std::string, std::string> texts;
  for (const SpecInput& s : specs) texts[s.id] = s.text;
  result.records = records_from_completions(result.completions, model, texts);
  return result;
}

}  // namespace oclpath
