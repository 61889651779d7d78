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

#ifndef OCLPATH_PROMPT_HPP
#define OCLPATH_PROMPT_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "oclpath/model.hpp"
#include "oclpath/pathgen.hpp"

namespace oclpath {

// Bumped whenever either template text changes; replay fixtures are keyed on
// the rendered prompt, so a bump invalidates them.
inline constexpr std::string_view kTemplateVersion = "templates-v1";

extern const std::string_view kSystemTemplate;

enum class Technique { PathOcl, UmlAugmentation };

std::string_view to_string(Technique technique);
Technique parse_technique(std::string_view text);

struct PromptBundle {
  std::string systemText;
  std::string userText;
  SimplePath path;
  std::string contextJson;
  std::size_t approxTokens = 0;

  friend bool operator==(const PromptBundle&, const PromptBundle&) = default;
};

// ceil(code points / 4).
std::size_t approx_tokens(std::string_view text);

// Compact JSON describing `path`'s classes: attributes, operation signatures
// and the roles of associations whose ends both lie inside the path.
nlohmann::ordered_json class_context(const UmlModel& model, const SimplePath& path);

PromptBundle craft_prompt(const UmlModel& model, const SimplePath& path, std::string_view specText);

// Baseline: the whole model as context.
PromptBundle craft_full_model_prompt(const UmlModel& model, std::string_view specText);

// Prompt dump record: {"spec_id","rank","system","user","approx_tokens"}.
nlohmann::ordered_json prompt_record(std::string_view specId, std::size_t rank, const PromptBundle& bundle);

}  // namespace oclpath

#endif  // OCLPATH_PROMPT_HPP
