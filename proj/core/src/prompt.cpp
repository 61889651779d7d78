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

#include "oclpath/prompt.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "oclpath/error.hpp"

namespace oclpath {

const std::string_view kSystemTemplate =
    "You are an expert in UML modeling and the Object Constraint Language (OCL). "
    "Given an English specification and a set of UML classes, write exactly one OCL "
    "constraint. Output only the OCL constraint.";

namespace {

constexpr std::string_view kUserTemplate =
    "English specification:\n"
    "{spec}\n"
    "\n"
    "UML classes (JSON):\n"
    "{context}\n";

std::string render_user(std::string_view spec, std::string_view context) {
  return fmt::format(fmt::runtime(kUserTemplate), fmt::arg("spec", spec), fmt::arg("context", context));
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

PromptBundle make_bundle(const UmlModel& model, SimplePath path, std::string_view specText) {
  std::string spec = trim(specText);
  if (spec.empty()) throw DataError("specification text is empty");
  PromptBundle b;
  b.systemText = std::string(kSystemTemplate);
  b.contextJson = class_context(model, path).dump();
  b.userText = render_user(spec, b.contextJson);
  b.path = std::move(path);
  b.approxTokens = approx_tokens(b.systemText) + approx_tokens(b.userText);
  return b;
}

}  // namespace

std::string_view to_string(Technique technique) {
  return technique == Technique::PathOcl ? "pathocl" : "uml-augmentation";
}

Technique parse_technique(std::string_view text) {
  if (text == "pathocl") return Technique::PathOcl;
  if (text == "uml-augmentation") return Technique::UmlAugmentation;
  throw DataError(fmt::format("unknown technique '{}' (expected pathocl or uml-augmentation)", text));
}

std::size_t approx_tokens(std::string_view text) {
  std::size_t chars = std::count_if(text.begin(), text.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  });
  return (chars + 3) / 4;
}

nlohmann::ordered_json class_context(const UmlModel& model, const SimplePath& path) {
  using oj = nlohmann::ordered_json;
  std::set<std::string_view> members;
  for (const std::string& name : path.classes) {
    if (!model.class_of(name)) throw DataError(fmt::format("unknown class '{}'", name));
    members.insert(name);
  }

  oj classes = oj::array();
  for (const std::string& name : path.classes) {
    const UmlClass& cls = *model.class_of(name);
    oj c;
    c["name"] = cls.name;
    c["attributes"] = oj::array();
    for (const UmlAttribute& a : cls.attributes) c["attributes"].push_back({{"name", a.name}, {"type", a.type}});
    c["operations"] = oj::array();
    for (const UmlOperation& op : cls.operations) c["operations"].push_back(op.signature());
    c["roles"] = oj::array();
    for (const Navigation& nav : model.navigations_of(cls.name)) {
      if (!members.count(nav.target)) continue;
      c["roles"].push_back(
          {{"role", nav.role}, {"class", nav.target}, {"multiplicity", nav.multiplicity.str()}});
    }
    classes.push_back(std::move(c));
  }
  return oj{{"classes", std::move(classes)}};
}

PromptBundle craft_prompt(const UmlModel& model, const SimplePath& path, std::string_view specText) {
  if (path.classes.empty()) throw DataError("cannot craft a prompt for an empty path");
  return make_bundle(model, path, specText);
}

PromptBundle craft_full_model_prompt(const UmlModel& model, std::string_view specText) {
  SimplePath all;
  for (const UmlClass& c : model.classes()) all.classes.push_back(c.name);
  return make_bundle(model, std::move(all), specText);
}

nlohmann::ordered_json prompt_record(std::string_view specId, std::size_t rank, const PromptBundle& bundle) {
  return {{"spec_id", specId},
          {"rank", rank},
          {"system", bundle.systemText},
          {"user", bundle.userText},
          {"approx_tokens", bundle.approxTokens}};
}

}  // namespace oclpath
