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

#ifndef OCLPATH_OCL_TYPES_HPP
#define OCLPATH_OCL_TYPES_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "oclpath/model.hpp"

namespace oclpath::ocl {

enum class CollectionKind { Set, Bag, Sequence };

class OclType {
 public:
  enum class Kind { Class, Integer, Real, Boolean, String, Collection, Unknown };

  static OclType of_class(std::string name);
  static OclType integer() { return OclType(Kind::Integer); }
  static OclType real() { return OclType(Kind::Real); }
  static OclType boolean() { return OclType(Kind::Boolean); }
  static OclType string() { return OclType(Kind::String); }
  static OclType unknown() { return OclType(Kind::Unknown); }
  static OclType collection(CollectionKind kind, OclType element);

  Kind kind() const { return kind_; }
  bool is(Kind k) const { return kind_ == k; }
  bool is_collection() const { return kind_ == Kind::Collection; }
  bool is_numeric() const { return kind_ == Kind::Integer || kind_ == Kind::Real; }
  bool is_unknown() const { return kind_ == Kind::Unknown; }

  const std::string& class_name() const { return className_; }
  CollectionKind collection_kind() const { return collectionKind_; }
  const OclType& element() const { return *element_; }

  // "Integer", "Customer", "Set(Customer)", "OclAny" for unknown.
  std::string name() const;

  friend bool operator==(const OclType& a, const OclType& b);

 private:
  explicit OclType(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::string className_;
  CollectionKind collectionKind_ = CollectionKind::Set;
  std::shared_ptr<const OclType> element_;
};

// Resolves a model type name such as "Integer", "Customer" or "Set(Service)".
// Names that are neither primitives nor model classes are Unknown.
OclType resolve_type_name(const UmlModel& model, std::string_view name);

// Type of `name` read from an instance of `className`: an attribute's type,
// or the navigation type of a navigable role (bare class for upper bound 1,
// Set otherwise). Attributes win over roles. Empty when unresolved.
std::optional<OclType> property_type(const UmlModel& model, std::string_view className, std::string_view name);

}  // namespace oclpath::ocl

#endif  // OCLPATH_OCL_TYPES_HPP
