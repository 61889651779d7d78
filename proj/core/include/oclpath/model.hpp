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

#ifndef OCLPATH_MODEL_HPP
#define OCLPATH_MODEL_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "oclpath/error.hpp"

namespace oclpath {

// Lower/upper bound of an association end. An absent upper bound means '*'.
struct Multiplicity {
  std::uint32_t lower = 0;
  std::optional<std::uint32_t> upper;

  static Multiplicity parse(std::string_view text);

  bool unbounded() const { return !upper.has_value(); }
  // True when navigating to this end yields more than one object.
  bool many() const { return !upper || *upper > 1; }
  std::string str() const;

  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
};

struct UmlAttribute {
  std::string name;
  std::string type;

  friend bool operator==(const UmlAttribute&, const UmlAttribute&) = default;
};

struct UmlParameter {
  std::string name;
  std::string type;

  friend bool operator==(const UmlParameter&, const UmlParameter&) = default;
};

struct UmlOperation {
  std::string name;
  std::vector<UmlParameter> params;
  std::optional<std::string> returns;

  // "name(p: T, ...): R"
  std::string signature() const;

  friend bool operator==(const UmlOperation&, const UmlOperation&) = default;
};

struct UmlClass {
  std::string name;
  std::vector<UmlAttribute> attributes;
  std::vector<UmlOperation> operations;

  const UmlAttribute* attribute(std::string_view name) const;

  friend bool operator==(const UmlClass&, const UmlClass&) = default;
};

struct UmlAssociationEnd {
  std::string className;
  std::string role;
  Multiplicity multiplicity;
  bool navigable = true;

  friend bool operator==(const UmlAssociationEnd&, const UmlAssociationEnd&) = default;
};

struct UmlAssociation {
  std::optional<std::string> name;
  UmlAssociationEnd ends[2];

  friend bool operator==(const UmlAssociation& a, const UmlAssociation& b) {
    return a.name == b.name && a.ends[0] == b.ends[0] && a.ends[1] == b.ends[1];
  }
};

// A navigable role seen from one class: `role` leads to `target`.
struct Navigation {
  std::string role;
  std::string target;
  Multiplicity multiplicity;

  friend bool operator==(const Navigation&, const Navigation&) = default;
};

// Raised by load_model / model_from_json. `location` is a JSON-pointer-like
// path into the document ("/classes/2/attributes/0/name").
class ModelError : public DataError {
 public:
  enum class Kind { Io, Schema, Invariant };

  ModelError(Kind kind, std::string location, const std::string& message);

  Kind kind() const { return kind_; }
  const std::string& location() const { return location_; }

 private:
  Kind kind_;
  std::string location_;
};

// Immutable once loaded; every invariant has been checked by the loader.
class UmlModel {
 public:
  UmlModel(std::string name, std::vector<UmlClass> classes,
           std::vector<UmlAssociation> associations);

  const std::string& name() const { return name_; }
  const std::vector<UmlClass>& classes() const { return classes_; }
  const std::vector<UmlAssociation>& associations() const { return associations_; }

  // Case-sensitive exact-name lookup.
  const UmlClass* class_of(std::string_view name) const;

  // Opposite-end (role, target, multiplicity) for every association touching
  // `className` whose opposite end is navigable. A self-association yields
  // one entry per end. Throws DataError for an unknown class.
  std::vector<Navigation> navigations_of(std::string_view className) const;

  friend bool operator==(const UmlModel&, const UmlModel&) = default;

 private:
  void validate() const;

  std::string name_;
  std::vector<UmlClass> classes_;
  std::vector<UmlAssociation> associations_;
};

UmlModel model_from_json(const nlohmann::json& doc);
nlohmann::ordered_json model_to_json(const UmlModel& model);
UmlModel load_model(const std::filesystem::path& path);

}  // namespace oclpath

#endif  // OCLPATH_MODEL_HPP
