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

#include <gtest/gtest.h>

#include "oclpath/pathgen.hpp"
#include "test_support.hpp"

namespace oclpath {
namespace {

using testing::airport;
using testing::royal_loyal;

const char* kSpec = "The maximum number of passengers on any flight may not exceed 1000.";

TEST(ApproxTokens, CeilingOfCodePointsOverFour) {
  EXPECT_EQ(approx_tokens(""), 0u);
  EXPECT_EQ(approx_tokens("abcd"), 1u);
  EXPECT_EQ(approx_tokens("abcde"), 2u);
  EXPECT_EQ(approx_tokens("üüüü"), 1u);
  EXPECT_EQ(approx_tokens("ü€𝄞x"), 1u);
  EXPECT_EQ(approx_tokens(std::string(2000 * 4, 'x')), 2000u);
}

TEST(ClassContext, FlightPerson) {
  std::string expected =
      R"({"classes":[{"name":"Flight","attributes":[{"name":"departTime","type":"Integer"},)"
      R"({"name":"arrivalTime","type":"Integer"},{"name":"duration","type":"Integer"},)"
      R"({"name":"maxNrPassengers","type":"Integer"}],"operations":[],)"
      R"("roles":[{"role":"passengers","class":"Person","multiplicity":"*"}]},)"
      R"({"name":"Person","attributes":[{"name":"name","type":"String"},{"name":"age","type":"Integer"}],)"
      R"("operations":[],"roles":[{"role":"flights","class":"Flight","multiplicity":"*"}]}]})";
  EXPECT_EQ(class_context(airport(), {{"Flight", "Person"}}).dump(), expected);
}

TEST(ClassContext, SingletonHasNoRoles) {
  auto ctx = class_context(airport(), {{"Airport"}});
  ASSERT_EQ(ctx["classes"].size(), 1u);
  EXPECT_EQ(ctx["classes"][0]["name"], "Airport");
  EXPECT_TRUE(ctx["classes"][0]["roles"].empty());
}

TEST(ClassContext, OperationSignatures) {
  auto ctx = class_context(royal_loyal(), {{"LoyaltyAccount"}});
  EXPECT_EQ(ctx["classes"][0]["operations"],
            nlohmann::ordered_json::parse(R"j(["earn(i: Integer)", "burn(i: Integer)", "isEmpty(): Boolean"])j"));
}

TEST(ClassContext, UnknownClassThrows) { EXPECT_THROW(class_context(airport(), {{"Plane"}}), DataError); }

TEST(CraftPrompt, TemplatesAndInvariants) {
  PromptBundle b = craft_prompt(airport(), {{"Flight", "Person"}}, std::string("  ") + kSpec + "\n");
  EXPECT_EQ(b.systemText,
            "You are an expert in UML modeling and the Object Constraint Language (OCL). Given an English "
            "specification and a set of UML classes, write exactly one OCL constraint. Output only the OCL "
            "constraint.");
  EXPECT_EQ(b.userText, std::string("English specification:\n") + kSpec + "\n\nUML classes (JSON):\n" +
                            b.contextJson + "\n");
  EXPECT_EQ(b.path, (SimplePath{{"Flight", "Person"}}));
  EXPECT_EQ(b.approxTokens, approx_tokens(b.systemText) + approx_tokens(b.userText));
  EXPECT_EQ(b, craft_prompt(airport(), {{"Flight", "Person"}}, std::string("  ") + kSpec + "\n"));
}

TEST(CraftPrompt, ContextHoldsExactlyThePathClasses) {
  UmlGraph g = build_graph(royal_loyal());
  for (const SimplePath& p : enumerate_simple_paths(g, default_options(g))) {
    PromptBundle b = craft_prompt(royal_loyal(), p, "spec");
    auto ctx = nlohmann::json::parse(b.contextJson);
    std::vector<std::string> names;
    for (const auto& c : ctx["classes"]) {
      names.push_back(c["name"]);
      for (const auto& r : c["roles"])
        EXPECT_NE(std::find(p.classes.begin(), p.classes.end(), r["class"].get<std::string>()), p.classes.end());
    }
    EXPECT_EQ(names, p.classes);
    EXPECT_NE(b.userText.find(b.contextJson), std::string::npos);
  }
}

TEST(CraftPrompt, PathContextNeverExceedsWholeModel) {
  for (const UmlModel* m : {&airport(), &royal_loyal()}) {
    PromptBundle whole = craft_full_model_prompt(*m, kSpec);
    UmlGraph g = build_graph(*m);
    for (const SimplePath& p : enumerate_simple_paths(g, default_options(g))) {
      PromptBundle b = craft_prompt(*m, p, kSpec);
      EXPECT_LE(b.contextJson.size(), whole.contextJson.size()) << p.str();
      EXPECT_LE(b.approxTokens, whole.approxTokens) << p.str();
      if (p.size() < m->classes().size()) EXPECT_LT(b.contextJson.size(), whole.contextJson.size()) << p.str();
    }
  }
}

TEST(CraftPrompt, FullLengthPathInModelOrderMatchesWholeModel) {
  PromptBundle whole = craft_full_model_prompt(airport(), kSpec);
  PromptBundle path = craft_prompt(airport(), {{"Airport", "Flight", "Airline", "Person"}}, kSpec);
  EXPECT_EQ(path.contextJson, whole.contextJson);
  EXPECT_EQ(path.approxTokens, whole.approxTokens);
}

TEST(CraftPrompt, Errors) {
  EXPECT_THROW(craft_prompt(airport(), {{"Flight"}}, "  "), DataError);
  EXPECT_THROW(craft_prompt(airport(), {}, kSpec), DataError);
  EXPECT_THROW(craft_prompt(airport(), {{"Plane"}}, kSpec), DataError);
}

TEST(PromptRecord, DumpFormat) {
  PromptBundle b = craft_prompt(airport(), {{"Airport"}}, "spec");
  auto r = prompt_record("a-1", 2, b);
  EXPECT_EQ(r.dump().substr(0, 27), R"({"spec_id":"a-1","rank":2,")");
  EXPECT_EQ(r["approx_tokens"], b.approxTokens);
  EXPECT_EQ(r["user"], b.userText);
}

TEST(Technique, Names) {
  EXPECT_EQ(to_string(Technique::UmlAugmentation), "uml-augmentation");
  EXPECT_EQ(parse_technique("pathocl"), Technique::PathOcl);
  EXPECT_THROW(parse_technique("full"), DataError);
  EXPECT_EQ(kTemplateVersion, "templates-v1");
}

}  // namespace
}  // namespace oclpath
