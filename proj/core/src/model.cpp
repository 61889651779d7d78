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

#include "oclpath/model.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <utility>

#include <fmt/format.h>

namespace oclpath {

namespace {

using nlohmann::json;

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin(), s.end(), [&](char c) { return alpha(c) || digit(c); });
}

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw ModelError(ModelError::Kind::Schema, where, what);
}

[[noreturn]] void invariant_error(const std::string& where, const std::string& what) {
  throw ModelError(ModelError::Kind::Invariant, where, what);
}

const json& require(const json& obj, const std::string& where, const char* key) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, fmt::format("missing field '{}'", key));
  return *it;
}

std::string require_string(const json& obj, const std::string& where, const char* key) {
  const json& v = require(obj, where, key);
  if (!v.is_string()) schema_error(where + "/" + key, "expected a string");
  return v.get<std::string>();
}

std::string require_identifier(const json& obj, const std::string& where, const char* key) {
  std::string s = require_string(obj, where, key);
  if (!is_identifier(s))
    schema_error(where + "/" + key, fmt::format("'{}' is not an identifier", s));
  return s;
}

std::string require_type(const json& obj, const std::string& where, const char* key) {
  std::string s = require_string(obj, where, key);
  if (s.find_first_not_of(" \t") == std::string::npos)
    schema_error(where + "/" + key, "type name is empty");
  return s;
}

// Optional array field; absent means empty.
const json* optional_array(const json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return nullptr;
  if (!it->is_array()) schema_error(where + "/" + key, "expected an array");
  return &*it;
}

UmlClass parse_class(const json& j, const std::string& where) {
  UmlClass cls;
  cls.name = require_identifier(j, where, "name");
  if (const json* attrs = optional_array(j, where, "attributes")) {
    for (std::size_t i = 0; i < attrs->size(); ++i) {
      std::string at = fmt::format("{}/attributes/{}", where, i);
      cls.attributes.push_back(
          {require_identifier((*attrs)[i], at, "name"), require_type((*attrs)[i], at, "type")});
    }
  }
  if (const json* ops = optional_array(j, where, "operations")) {
    for (std::size_t i = 0; i < ops->size(); ++i) {
      std::string at = fmt::format("{}/operations/{}", where, i);
      const json& o = (*ops)[i];
      UmlOperation op;
      op.name = require_identifier(o, at, "name");
      if (const json* params = optional_array(o, at, "params")) {
        for (std::size_t p = 0; p < params->size(); ++p) {
          std::string pat = fmt::format("{}/params/{}", at, p);
          op.params.push_back({require_identifier((*params)[p], pat, "name"),
                               require_type((*params)[p], pat, "type")});
        }
      }
      if (auto r = o.find("returns"); r != o.end() && !r->is_null()) {
        if (!r->is_string() || r->get<std::string>().empty())
          schema_error(at + "/returns", "expected a type name or null");
        op.returns = r->get<std::string>();
      }
      cls.operations.push_back(std::move(op));
    }
  }
  return cls;
}

UmlAssociationEnd parse_end(const json& j, const std::string& where) {
  UmlAssociationEnd end;
  end.className = require_identifier(j, where, "class");
  end.role = require_identifier(j, where, "role");
  std::string mult = require_string(j, where, "multiplicity");
  try {
    end.multiplicity = Multiplicity::parse(mult);
  } catch (const DataError& e) {
    schema_error(where + "/multiplicity", e.what());
  }
  if (auto it = j.find("navigable"); it != j.end()) {
    if (!it->is_boolean()) schema_error(where + "/navigable", "expected a boolean");
    end.navigable = it->get<bool>();
  }
  return end;
}

std::optional<std::uint32_t> parse_bound(std::string_view s) {
  std::uint32_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace

Multiplicity Multiplicity::parse(std::string_view text) {
  auto fail = [&]() -> Multiplicity {
    throw DataError(fmt::format("invalid multiplicity '{}'", text));
  };
  if (text == "*") return {0, std::nullopt};
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    auto n = parse_bound(text);
    if (!n || *n == 0) return fail();
    return {*n, *n};
  }
  auto lo = parse_bound(text.substr(0, dots));
  std::string_view hi_text = text.substr(dots + 2);
  if (!lo) return fail();
  if (hi_text == "*") return {*lo, std::nullopt};
  auto hi = parse_bound(hi_text);
  if (!hi || *hi == 0 || *lo > *hi) return fail();
  return {*lo, *hi};
}

std::string Multiplicity::str() const {
  if (!upper) return lower == 0 ? "*" : fmt::format("{}..*", lower);
  if (lower == *upper) return std::to_string(lower);
  return fmt::format("{}..{}", lower, *upper);
}

std::string UmlOperation::signature() const {
  std::string s = name + "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ", ";
    s += params[i].name + ": " + params[i].type;
  }
  s += ")";
  if (returns) s += ": " + *returns;
  return s;
}

const UmlAttribute* UmlClass::attribute(std::string_view attr) const {
  auto it = std::find_if(attributes.begin(), attributes.end(),
                         [&](const UmlAttribute& a) { return a.name == attr; });
  return it == attributes.end() ? nullptr : &*it;
}

ModelError::ModelError(Kind kind, std::string location, const std::string& message)
    : DataError(location.empty() ? message : fmt::format("{}: {}", location, message)),
      kind_(kind),
      location_(std::move(location)) {}

UmlModel::UmlModel(std::string name, std::vector<UmlClass> classes,
                   std::vector<UmlAssociation> associations)
    : name_(std::move(name)), classes_(std::move(classes)), associations_(std::move(associations)) {
  validate();
}

void UmlModel::validate() const {
  if (classes_.empty()) invariant_error("/classes", "model must contain at least one class");

  std::set<std::string_view> class_names;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const UmlClass& c = classes_[i];
    std::string at = fmt::format("/classes/{}", i);
    if (!class_names.insert(c.name).second)
      invariant_error(at + "/name", fmt::format("duplicate class '{}'", c.name));

    std::set<std::string_view> attrs;
    for (std::size_t a = 0; a < c.attributes.size(); ++a) {
      if (!attrs.insert(c.attributes[a].name).second)
        invariant_error(fmt::format("{}/attributes/{}/name", at, a),
                        fmt::format("duplicate attribute '{}' in class '{}'",
                                    c.attributes[a].name, c.name));
    }
    std::set<std::pair<std::string_view, std::size_t>> ops;
    for (std::size_t o = 0; o < c.operations.size(); ++o) {
      const UmlOperation& op = c.operations[o];
      std::string oat = fmt::format("{}/operations/{}", at, o);
      if (!ops.insert({op.name, op.params.size()}).second)
        invariant_error(oat, fmt::format("duplicate operation '{}' with {} parameter(s) in class '{}'",
                                         op.name, op.params.size(), c.name));
      std::set<std::string_view> params;
      for (std::size_t p = 0; p < op.params.size(); ++p) {
        if (!params.insert(op.params[p].name).second)
          invariant_error(fmt::format("{}/params/{}/name", oat, p),
                          fmt::format("duplicate parameter '{}' in operation '{}'",
                                      op.params[p].name, op.name));
      }
    }
  }

  for (std::size_t i = 0; i < associations_.size(); ++i) {
    const UmlAssociation& assoc = associations_[i];
    for (int e = 0; e < 2; ++e) {
      const UmlAssociationEnd& end = assoc.ends[e];
      std::string at = fmt::format("/associations/{}/ends/{}", i, e);
      if (!class_names.count(end.className))
        invariant_error(at + "/class", fmt::format("unknown class '{}'", end.className));
      if (end.role.empty()) invariant_error(at + "/role", "role must not be empty");
      if (end.multiplicity.upper && end.multiplicity.lower > *end.multiplicity.upper)
        invariant_error(at + "/multiplicity", "lower bound exceeds upper bound");
    }
    for (int e = 0; e < 2; ++e) {
      const UmlAssociationEnd& end = assoc.ends[e];
      const UmlClass* opposite = class_of(assoc.ends[1 - e].className);
      if (opposite->attribute(end.role))
        invariant_error(fmt::format("/associations/{}/ends/{}/role", i, e),
                        fmt::format("role '{}' collides with attribute of class '{}'", end.role,
                                    opposite->name));
    }
  }
}

const UmlClass* UmlModel::class_of(std::string_view name) const {
  auto it = std::find_if(classes_.begin(), classes_.end(),
                         [&](const UmlClass& c) { return c.name == name; });
  return it == classes_.end() ? nullptr : &*it;
}

std::vector<Navigation> UmlModel::navigations_of(std::string_view className) const {
  if (!class_of(className))
    throw DataError(fmt::format("unknown class '{}'", className));
  std::vector<Navigation> out;
  for (const UmlAssociation& assoc : associations_) {
    for (int e = 0; e < 2; ++e) {
      const UmlAssociationEnd& far = assoc.ends[1 - e];
      if (assoc.ends[e].className == className && far.navigable)
        out.push_back({far.role, far.className, far.multiplicity});
    }
  }
  return out;
}

UmlModel model_from_json(const json& doc) {
  if (!doc.is_object()) schema_error("", "model document must be an object");
  std::string name = require_identifier(doc, "", "name");

  const json& classes_json = require(doc, "", "classes");
  if (!classes_json.is_array()) schema_error("/classes", "expected an array");
  std::vector<UmlClass> classes;
  for (std::size_t i = 0; i < classes_json.size(); ++i)
    classes.push_back(parse_class(classes_json[i], fmt::format("/classes/{}", i)));

  std::vector<UmlAssociation> associations;
  if (const json* assocs = optional_array(doc, "", "associations")) {
    for (std::size_t i = 0; i < assocs->size(); ++i) {
      std::string at = fmt::format("/associations/{}", i);
      const json& a = (*assocs)[i];
      UmlAssociation assoc;
      if (auto n = a.find("name"); n != a.end() && !n->is_null()) {
        if (!n->is_string()) schema_error(at + "/name", "expected a string or null");
        assoc.name = n->get<std::string>();
      }
      const json& ends = require(a, at, "ends");
      if (!ends.is_array() || ends.size() != 2)
        schema_error(at + "/ends", "an association has exactly two ends");
      assoc.ends[0] = parse_end(ends[0], at + "/ends/0");
      assoc.ends[1] = parse_end(ends[1], at + "/ends/1");
      associations.push_back(std::move(assoc));
    }
  }
  return UmlModel(std::move(name), std::move(classes), std::move(associations));
}

nlohmann::ordered_json model_to_json(const UmlModel& model) {
  using oj = nlohmann::ordered_json;
  oj doc;
  doc["name"] = model.name();
  doc["classes"] = oj::array();
  for (const UmlClass& c : model.classes()) {
    oj cj;
    cj["name"] = c.name;
    cj["attributes"] = oj::array();
    for (const UmlAttribute& a : c.attributes) cj["attributes"].push_back({{"name", a.name}, {"type", a.type}});
    cj["operations"] = oj::array();
    for (const UmlOperation& op : c.operations) {
      oj oj_op;
      oj_op["name"] = op.name;
      oj_op["params"] = oj::array();
      for (const UmlParameter& p : op.params) oj_op["params"].push_back({{"name", p.name}, {"type", p.type}});
      oj_op["returns"] = op.returns ? oj(*op.returns) : oj(nullptr);
      cj["operations"].push_back(std::move(oj_op));
    }
    doc["classes"].push_back(std::move(cj));
  }
  doc["associations"] = oj::array();
  for (const UmlAssociation& a : model.associations()) {
    oj aj;
    aj["name"] = a.name ? oj(*a.name) : oj(nullptr);
    aj["ends"] = oj::array();
    for (const UmlAssociationEnd& e : a.ends) {
      aj["ends"].push_back({{"class", e.className},
                            {"role", e.role},
                            {"multiplicity", e.multiplicity.str()},
                            {"navigable", e.navigable}});
    }
    doc["associations"].push_back(std::move(aj));
  }
  return doc;
}

UmlModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError(ModelError::Kind::Io, path.string(), "cannot open model file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ModelError(ModelError::Kind::Schema, path.string(),
                     fmt::format("malformed JSON: {}", e.what()));
  }
  return model_from_json(doc);
}

}  // namespace oclpath
