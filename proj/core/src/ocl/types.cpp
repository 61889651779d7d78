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

#include "oclpath/ocl/types.hpp"

#include <fmt/format.h>

namespace oclpath::ocl {

namespace {

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

OclType OclType::of_class(std::string name) {
  OclType t(Kind::Class);
  t.className_ = std::move(name);
  return t;
}

OclType OclType::collection(CollectionKind kind, OclType element) {
  OclType t(Kind::Collection);
  t.collectionKind_ = kind;
  t.element_ = std::make_shared<const OclType>(std::move(element));
  return t;
}

std::string OclType::name() const {
  switch (kind_) {
    case Kind::Class: return className_;
    case Kind::Integer: return "Integer";
    case Kind::Real: return "Real";
    case Kind::Boolean: return "Boolean";
    case Kind::String: return "String";
    case Kind::Unknown: return "OclAny";
    case Kind::Collection: {
      std::string_view k = collectionKind_ == CollectionKind::Set   ? "Set"
                           : collectionKind_ == CollectionKind::Bag ? "Bag"
                                                                    : "Sequence";
      return fmt::format("{}({})", k, element_->name());
    }
  }
  return "OclAny";
}

bool operator==(const OclType& a, const OclType& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case OclType::Kind::Class: return a.className_ == b.className_;
    case OclType::Kind::Collection: return a.collectionKind_ == b.collectionKind_ && *a.element_ == *b.element_;
    default: return true;
  }
}

OclType resolve_type_name(const UmlModel& model, std::string_view raw) {
  std::string_view name = trim(raw);
  if (name == "Integer") return OclType::integer();
  if (name == "Real") return OclType::real();
  if (name == "Boolean") return OclType::boolean();
  if (name == "String") return OclType::string();
  if (auto open = name.find('('); open != std::string_view::npos && name.back() == ')') {
    std::string_view outer = trim(name.substr(0, open));
    OclType elem = resolve_type_name(model, name.substr(open + 1, name.size() - open - 2));
    if (outer == "Set") return OclType::collection(CollectionKind::Set, elem);
    if (outer == "Bag" || outer == "Collection") return OclType::collection(CollectionKind::Bag, elem);
    if (outer == "Sequence" || outer == "OrderedSet") return OclType::collection(CollectionKind::Sequence, elem);
    return OclType::unknown();
  }
  if (model.class_of(name)) return OclType::of_class(std::string(name));
  return OclType::unknown();
}

std::optional<OclType> property_type(const UmlModel& model, std::string_view className, std::string_view name) {
  const UmlClass* cls = model.class_of(className);
  if (!cls) return std::nullopt;
  if (const UmlAttribute* a = cls->attribute(name)) return resolve_type_name(model, a->type);
  for (const Navigation& nav : model.navigations_of(className)) {
    if (nav.role != name) continue;
    OclType target = OclType::of_class(nav.target);
    if (nav.multiplicity.many()) return OclType::collection(CollectionKind::Set, target);
    return target;
  }
  return std::nullopt;
}

}  // namespace oclpath::ocl
