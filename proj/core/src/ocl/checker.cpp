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

#include "oclpath/ocl/checker.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "oclpath/ocl/parser.hpp"

namespace oclpath::ocl {

namespace {

struct Failure {
  ErrorCategory category;
  std::string message;
  Span span;
};

[[noreturn]] void fail(ErrorCategory category, Span span, std::string message) {
  throw Failure{category, std::move(message), span};
}

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// Drops blanks so "Set( Service )" and "Set(Service)" compare equal.
std::string compact(std::string_view s) {
  std::string out;
  for (char c : trim(s))
    if (c != ' ' && c != '\t') out += c;
  return out;
}

OclType flatten(const OclType& t) { return t.is_collection() ? flatten(t.element()) : t; }

// Kind of the implicit collect over a collection of `source` kind.
CollectionKind collect_kind(CollectionKind source) {
  return source == CollectionKind::Sequence ? CollectionKind::Sequence : CollectionKind::Bag;
}

bool is_bool_or_unknown(const OclType& t) { return t.is(OclType::Kind::Boolean) || t.is_unknown(); }
bool is_numeric_or_unknown(const OclType& t) { return t.is_numeric() || t.is_unknown(); }

class Checker {
 public:
  Checker(const OclConstraint& constraint, const UmlModel& model) : c_(constraint), model_(model) {}

  void run() {
    const UmlClass* cls = model_.class_of(c_.contextClass);
    if (!cls)
      fail(ErrorCategory::UndefinedOperation, c_.contextSpan,
           fmt::format("undefined context class '{}'", c_.contextClass));
    if (c_.operation) bind_operation(*cls);

    OclType body = type_of(*c_.body);
    if (!is_bool_or_unknown(body))
      fail(ErrorCategory::SignatureMismatch, c_.body->span,
           fmt::format("constraint body has type {}; expected Boolean", body.name()));
  }

  OclType type_of(const Expr& e) {
    return std::visit([&](const auto& node) { return visit(node, e.span); }, e.node);
  }

 private:
  struct Binding {
    std::string name;
    OclType type;
  };

  void bind_operation(const UmlClass& cls) {
    const OperationContext& op = *c_.operation;
    std::vector<const UmlOperation*> named;
    for (const UmlOperation& candidate : cls.operations)
      if (candidate.name == op.name) named.push_back(&candidate);
    if (named.empty())
      fail(ErrorCategory::UndefinedOperation, c_.contextSpan,
           fmt::format("class '{}' has no operation '{}'", cls.name, op.name));

    const UmlOperation* match = nullptr;
    for (const UmlOperation* candidate : named) {
      if (candidate->params.size() != op.params.size()) continue;
      bool same = true;
      for (std::size_t i = 0; i < op.params.size(); ++i)
        same = same && compact(candidate->params[i].type) == compact(op.params[i].type.value_or(""));
      if (same) match = candidate;
    }
    if (!match)
      fail(ErrorCategory::SignatureMismatch, c_.contextSpan,
           fmt::format("context signature does not match {}::{}", cls.name, named.front()->signature()));
    if (op.returnType && (!match->returns || compact(*match->returns) != compact(*op.returnType)))
      fail(ErrorCategory::SignatureMismatch, c_.contextSpan,
           fmt::format("declared return type {} does not match {}::{}", *op.returnType, cls.name,
                       match->signature()));

    for (const UmlParameter& p : match->params) scope_.push_back({p.name, resolve_type_name(model_, p.type)});
    if (c_.kind == ConstraintKind::Post && match->returns)
      scope_.push_back({"result", resolve_type_name(model_, *match->returns)});
  }

  OclType self_type() const { return OclType::of_class(c_.contextClass); }

  OclType visit(const SelfRef&, Span) { return self_type(); }
  OclType visit(const IntLit&, Span) { return OclType::integer(); }
  OclType visit(const RealLit&, Span) { return OclType::real(); }
  OclType visit(const BoolLit&, Span) { return OclType::boolean(); }
  OclType visit(const StringLit&, Span) { return OclType::string(); }

  OclType visit(const VarRef& v, Span span) {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->name == v.name) return it->type;
    // Implicit iterators, innermost first, then implicit self.
    for (auto it = implicit_.rbegin(); it != implicit_.rend(); ++it) {
      if (it->is_unknown()) return OclType::unknown();
      if (it->is(OclType::Kind::Class))
        if (auto t = property_type(model_, it->class_name(), v.name)) return *t;
    }
    if (auto t = property_type(model_, c_.contextClass, v.name)) return *t;
    fail(ErrorCategory::UndefinedOperation, span, fmt::format("undefined variable or property '{}'", v.name));
  }

  void check_at_pre(bool atPre, Span span) {
    if (atPre && c_.kind != ConstraintKind::Post)
      fail(ErrorCategory::UndefinedOperation, span, "'@pre' is only defined in postconditions");
  }

  // Property `name` read from a value of type `source`.
  OclType navigate(const OclType& source, const std::string& name, Span span) {
    switch (source.kind()) {
      case OclType::Kind::Unknown: return OclType::unknown();
      case OclType::Kind::Class: {
        if (auto t = property_type(model_, source.class_name(), name)) return *t;
        fail(ErrorCategory::UndefinedOperation, span,
             fmt::format("undefined operation: '{}' is not a property of class '{}'", name, source.class_name()));
      }
      case OclType::Kind::Collection: {
        OclType inner = navigate(source.element(), name, span);
        return OclType::collection(collect_kind(source.collection_kind()), flatten(inner));
      }
      default:
        fail(ErrorCategory::UndefinedOperation, span,
             fmt::format("undefined operation: type {} has no property '{}'", source.name(), name));
    }
  }

  OclType visit(const PropertyCall& p, Span span) {
    check_at_pre(p.atPre, span);
    OclType source = type_of(*p.source);
    return navigate(source, p.name, span);
  }

  std::vector<OclType> arg_types(const std::vector<ExprPtr>& args) {
    std::vector<OclType> out;
    for (const ExprPtr& a : args) out.push_back(type_of(*a));
    return out;
  }

  [[noreturn]] void arity_mismatch(std::string_view name, std::size_t expected, std::size_t got, Span span) {
    fail(ErrorCategory::SignatureMismatch, span,
         fmt::format("'{}' expects {} argument(s) but got {}", name, expected, got));
  }

  OclType call_model_operation(const UmlClass& cls, const std::vector<const UmlOperation*>& named,
                               const std::vector<OclType>& args, Span span) {
    std::vector<const UmlOperation*> by_arity;
    for (const UmlOperation* op : named)
      if (op->params.size() == args.size()) by_arity.push_back(op);
    if (by_arity.empty())
      fail(ErrorCategory::SignatureMismatch, span,
           fmt::format("signature mismatch: {}::{} called with {} argument(s)", cls.name, named.front()->signature(),
                       args.size()));
    for (const UmlOperation* op : by_arity) {
      bool ok = true;
      for (std::size_t i = 0; i < args.size() && ok; ++i) {
        OclType param = resolve_type_name(model_, op->params[i].type);
        if (args[i].is_unknown() || param.is_unknown()) continue;
        ok = compact(args[i].name()) == compact(op->params[i].type);
      }
      if (ok) return op->returns ? resolve_type_name(model_, *op->returns) : OclType::unknown();
    }
    const UmlOperation* op = by_arity.front();
    for (std::size_t i = 0; i < args.size(); ++i) {
      OclType param = resolve_type_name(model_, op->params[i].type);
      if (args[i].is_unknown() || param.is_unknown()) continue;
      if (compact(args[i].name()) != compact(op->params[i].type))
        fail(ErrorCategory::SignatureMismatch, span,
             fmt::format("signature mismatch: argument {} of {}::{} has type {}", i + 1, cls.name, op->signature(),
                         args[i].name()));
    }
    return OclType::unknown();
  }

  // Operations every object and value understands.
  std::optional<OclType> universal_operation(const std::string& name, const std::vector<ExprPtr>& args, Span span) {
    if (name == "oclIsUndefined" || name == "oclIsNew") {
      if (!args.empty()) arity_mismatch(name, 0, args.size(), span);
      if (name == "oclIsNew" && c_.kind != ConstraintKind::Post)
        fail(ErrorCategory::UndefinedOperation, span, "'oclIsNew' is only defined in postconditions");
      return OclType::boolean();
    }
    if (name == "oclIsKindOf" || name == "oclIsTypeOf" || name == "oclAsType") {
      if (args.size() != 1) arity_mismatch(name, 1, args.size(), span);
      const auto* ref = std::get_if<VarRef>(&args[0]->node);
      OclType target = ref ? resolve_type_name(model_, ref->name) : OclType::unknown();
      if (!ref || target.is_unknown())
        fail(ErrorCategory::SignatureMismatch, args[0]->span, fmt::format("'{}' expects a type name", name));
      return name == "oclAsType" ? target : OclType::boolean();
    }
    return std::nullopt;
  }

  OclType primitive_operation(const OclType& source, const std::string& name, const std::vector<OclType>& args,
                              Span span) {
    auto want = [&](std::size_t n) {
      if (args.size() != n) arity_mismatch(name, n, args.size(), span);
    };
    auto want_type = [&](std::size_t i, bool ok, std::string_view expected) {
      if (!ok)
        fail(ErrorCategory::SignatureMismatch, span,
             fmt::format("argument {} of '{}' has type {}; expected {}", i + 1, name, args[i].name(), expected));
    };
    if (source.is(OclType::Kind::String)) {
      if (name == "size") return want(0), OclType::integer();
      if (name == "toUpper" || name == "toLower") return want(0), OclType::string();
      if (name == "concat") {
        want(1);
        want_type(0, args[0].is(OclType::Kind::String) || args[0].is_unknown(), "String");
        return OclType::string();
      }
      if (name == "substring") {
        want(2);
        for (std::size_t i = 0; i < 2; ++i)
          want_type(i, args[i].is(OclType::Kind::Integer) || args[i].is_unknown(), "Integer");
        return OclType::string();
      }
    }
    if (source.is_numeric()) {
      if (name == "abs") return want(0), source;
      if (name == "floor" || name == "round") return want(0), OclType::integer();
      if (name == "max" || name == "min") {
        want(1);
        want_type(0, is_numeric_or_unknown(args[0]), "Integer or Real");
        return source.is(OclType::Kind::Real) || args[0].is(OclType::Kind::Real) ? OclType::real() : source;
      }
    }
    fail(ErrorCategory::UndefinedOperation, span,
         fmt::format("undefined operation '{}' on type {}", name, source.name()));
  }

  OclType call(const OclType& source, const OperationCall& op, const std::vector<OclType>& args, Span span) {
    switch (source.kind()) {
      case OclType::Kind::Unknown: return OclType::unknown();
      case OclType::Kind::Class: {
        const UmlClass* cls = model_.class_of(source.class_name());
        std::vector<const UmlOperation*> named;
        for (const UmlOperation& candidate : cls->operations)
          if (candidate.name == op.name) named.push_back(&candidate);
        if (!named.empty()) return call_model_operation(*cls, named, args, span);
        fail(ErrorCategory::UndefinedOperation, span,
             fmt::format("undefined operation '{}' on class '{}'", op.name, cls->name));
      }
      case OclType::Kind::Collection: {
        OclType inner = call(source.element(), op, args, span);
        return OclType::collection(collect_kind(source.collection_kind()), flatten(inner));
      }
      default: return primitive_operation(source, op.name, args, span);
    }
  }

  OclType visit(const OperationCall& op, Span span) {
    check_at_pre(op.atPre, span);
    OclType source = type_of(*op.source);
    if (auto t = universal_operation(op.name, op.args, span)) return *t;
    std::vector<OclType> args = arg_types(op.args);
    return call(source, op, args, span);
  }

  [[noreturn]] void not_a_collection(const OclType& source, std::string_view name, Span span) {
    fail(ErrorCategory::IterExpInvalidSource, span,
         fmt::format("'->{}' applied to a single object of type {} instead of a collection", name, source.name()));
  }

  OclType visit(const ArrowCall& a, Span span) {
    OclType source = type_of(*a.source);
    std::vector<OclType> args = arg_types(a.args);
    if (source.is_unknown()) return OclType::unknown();
    if (!source.is_collection()) not_a_collection(source, a.name, span);
    const OclType& elem = source.element();

    auto want = [&](std::size_t n) {
      if (args.size() != n) arity_mismatch(a.name, n, args.size(), span);
    };
    if (a.name == "size") return want(0), OclType::integer();
    if (a.name == "isEmpty" || a.name == "notEmpty") return want(0), OclType::boolean();
    if (a.name == "includes" || a.name == "excludes") return want(1), OclType::boolean();
    if (a.name == "includesAll" || a.name == "excludesAll") {
      want(1);
      if (!args[0].is_collection() && !args[0].is_unknown())
        fail(ErrorCategory::SignatureMismatch, a.args[0]->span,
             fmt::format("'{}' expects a collection argument but got {}", a.name, args[0].name()));
      return OclType::boolean();
    }
    if (a.name == "sum") {
      want(0);
      if (!is_numeric_or_unknown(elem))
        fail(ErrorCategory::UndefinedOperation, span, fmt::format("undefined operation 'sum' on {}", source.name()));
      return elem;
    }
    if (a.name == "asSet") return want(0), OclType::collection(CollectionKind::Set, elem);
    if (a.name == "asBag") return want(0), OclType::collection(CollectionKind::Bag, elem);
    if (a.name == "asSequence") return want(0), OclType::collection(CollectionKind::Sequence, elem);
    if (a.name == "first" || a.name == "last") return want(0), elem;
    fail(ErrorCategory::UndefinedOperation, span,
         fmt::format("undefined collection operation '{}' on {}", a.name, source.name()));
  }

  OclType visit(const IteratorExp& it, Span span) {
    OclType source = type_of(*it.source);
    if (!source.is_collection() && !source.is_unknown()) not_a_collection(source, it.iterator, span);
    OclType elem = source.is_unknown() ? OclType::unknown() : source.element();

    std::size_t scope_mark = scope_.size();
    bool implicit = it.vars.empty();
    if (implicit) {
      implicit_.push_back(elem);
    } else {
      for (const IteratorVar& v : it.vars) {
        OclType t = elem;
        if (v.type) {
          t = resolve_type_name(model_, *v.type);
          if (t.is_unknown())
            fail(ErrorCategory::UndefinedOperation, span, fmt::format("undefined type '{}'", *v.type));
        }
        scope_.push_back({v.name, t});
      }
    }
    OclType body = type_of(*it.body);
    scope_.erase(scope_.begin() + static_cast<std::ptrdiff_t>(scope_mark), scope_.end());
    if (implicit) implicit_.pop_back();

    if (it.iterator == "collect") {
      CollectionKind kind = source.is_collection() ? collect_kind(source.collection_kind()) : CollectionKind::Bag;
      return OclType::collection(kind, flatten(body));
    }
    if (it.iterator == "isUnique") return OclType::boolean();
    if (!is_bool_or_unknown(body))
      fail(ErrorCategory::SignatureMismatch, it.body->span,
           fmt::format("body of '{}' has type {}; expected Boolean", it.iterator, body.name()));
    if (it.iterator == "select" || it.iterator == "reject") return source;
    if (it.iterator == "any") return elem;
    return OclType::boolean();  // forAll, exists, one
  }

  OclType visit(const AllInstances& a, Span span) {
    if (!model_.class_of(a.typeName))
      fail(ErrorCategory::UndefinedOperation, span, fmt::format("undefined class '{}'", a.typeName));
    return OclType::collection(CollectionKind::Set, OclType::of_class(a.typeName));
  }

  OclType visit(const IfExpr& e, Span) {
    OclType cond = type_of(*e.cond);
    if (!is_bool_or_unknown(cond))
      fail(ErrorCategory::SignatureMismatch, e.cond->span,
           fmt::format("if condition has type {}; expected Boolean", cond.name()));
    OclType a = type_of(*e.thenExpr);
    OclType b = type_of(*e.elseExpr);
    if (a == b) return a;
    if (a.is_numeric() && b.is_numeric()) return OclType::real();
    if (a.is_unknown()) return b;
    if (b.is_unknown()) return a;
    return OclType::unknown();
  }

  [[noreturn]] void undefined_operator(std::string_view op, const OclType& a, const OclType& b, Span span) {
    fail(ErrorCategory::UndefinedOperation, span,
         fmt::format("undefined operation '{}' for arguments ({}, {})", op, a.name(), b.name()));
  }

  OclType visit(const Binary& b, Span span) {
    OclType lhs = type_of(*b.lhs);
    OclType rhs = type_of(*b.rhs);
    switch (b.op) {
      case BinaryOp::Implies:
      case BinaryOp::Or:
      case BinaryOp::Xor:
      case BinaryOp::And:
        if (!is_bool_or_unknown(lhs) || !is_bool_or_unknown(rhs)) undefined_operator(to_string(b.op), lhs, rhs, span);
        return OclType::boolean();
      case BinaryOp::Eq:
      case BinaryOp::Ne: return OclType::boolean();
      case BinaryOp::Lt:
      case BinaryOp::Gt:
      case BinaryOp::Le:
      case BinaryOp::Ge: {
        bool numeric = is_numeric_or_unknown(lhs) && is_numeric_or_unknown(rhs);
        bool strings = (lhs.is(OclType::Kind::String) || lhs.is_unknown()) &&
                       (rhs.is(OclType::Kind::String) || rhs.is_unknown());
        if (!numeric && !strings) undefined_operator(to_string(b.op), lhs, rhs, span);
        return OclType::boolean();
      }
      case BinaryOp::Add:
      case BinaryOp::Sub:
      case BinaryOp::Mul:
      case BinaryOp::Div:
        if (!is_numeric_or_unknown(lhs) || !is_numeric_or_unknown(rhs))
          undefined_operator(to_string(b.op), lhs, rhs, span);
        if (lhs.is_unknown() || rhs.is_unknown()) return OclType::unknown();
        if (b.op == BinaryOp::Div || lhs.is(OclType::Kind::Real) || rhs.is(OclType::Kind::Real)) return OclType::real();
        return OclType::integer();
    }
    return OclType::unknown();
  }

  OclType visit(const Unary& u, Span span) {
    OclType t = type_of(*u.operand);
    if (u.op == UnaryOp::Not) {
      if (!is_bool_or_unknown(t))
        fail(ErrorCategory::UndefinedOperation, span, fmt::format("undefined operation 'not' for {}", t.name()));
      return OclType::boolean();
    }
    if (!is_numeric_or_unknown(t))
      fail(ErrorCategory::UndefinedOperation, span, fmt::format("undefined operation '-' for {}", t.name()));
    return t;
  }

  const OclConstraint& c_;
  const UmlModel& model_;
  std::vector<Binding> scope_;
  std::vector<OclType> implicit_;
};

}  // namespace

std::string_view to_string(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::ParsingError: return "PARSING_ERROR";
    case ErrorCategory::UndefinedOperation: return "UNDEFINED_OPERATION";
    case ErrorCategory::IterExpInvalidSource: return "ITEREXP_INVALID_SOURCE";
    case ErrorCategory::SignatureMismatch: return "SIGNATURE_MISMATCH";
  }
  return "PARSING_ERROR";
}

ErrorCategory parse_category(std::string_view text) {
  for (ErrorCategory c : kAllCategories)
    if (to_string(c) == text) return c;
  throw DataError(fmt::format("unknown error category '{}'", text));
}

nlohmann::ordered_json to_json(const CheckVerdict& v) {
  nlohmann::ordered_json j;
  j["valid"] = v.valid;
  if (v.error) {
    j["category"] = to_string(v.error->category);
    j["message"] = v.error->message;
    j["span"] = {v.error->span.begin, v.error->span.end};
  } else {
    j["category"] = nullptr;
    j["message"] = "";
    j["span"] = {0, 0};
  }
  return j;
}

CheckVerdict verdict_from_json(const nlohmann::json& j) {
  try {
    CheckVerdict v;
    v.valid = j.at("valid").get<bool>();
    if (!v.valid) {
      const auto& span = j.at("span");
      v.error = CheckError{parse_category(j.at("category").get<std::string>()), j.value("message", std::string()),
                           {span.at(0).get<std::size_t>(), span.at(1).get<std::size_t>()}};
    }
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(fmt::format("malformed verdict: {}", e.what()));
  }
}

CheckVerdict check(const OclConstraint& constraint, const UmlModel& model) {
  try {
    Checker(constraint, model).run();
    return CheckVerdict::ok();
  } catch (const Failure& f) {
    return CheckVerdict::fail(f.category, f.message, f.span);
  }
}

CheckVerdict validate(std::string_view text, const UmlModel& model) {
  try {
    OclConstraint c = parse(text);
    return check(c, model);
  } catch (const ParseError& e) {
    return CheckVerdict::fail(ErrorCategory::ParsingError, e.what(), e.span());
  } catch (const std::exception& e) {
    return CheckVerdict::fail(ErrorCategory::ParsingError, e.what(), {0, text.size()});
  }
}

}  // namespace oclpath::ocl
