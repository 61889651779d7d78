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

#include "oclpath/ocl/ast.hpp"

#include <fmt/format.h>

namespace oclpath::ocl {

namespace {

bool same(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return *a == *b;
}

bool same(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same(a[i], b[i])) return false;
  return true;
}

struct EqualVisitor {
  const Expr::Node& other;

  template <typename T>
  const T& as() const { return std::get<T>(other); }

  bool operator()(const SelfRef&) const { return true; }
  bool operator()(const VarRef& n) const { return n.name == as<VarRef>().name; }
  bool operator()(const IntLit& n) const { return n.value == as<IntLit>().value; }
  bool operator()(const RealLit& n) const { return n.value == as<RealLit>().value; }
  bool operator()(const BoolLit& n) const { return n.value == as<BoolLit>().value; }
  bool operator()(const StringLit& n) const { return n.value == as<StringLit>().value; }
  bool operator()(const PropertyCall& n) const {
    const auto& o = as<PropertyCall>();
    return n.name == o.name && n.atPre == o.atPre && same(n.source, o.source);
  }
  bool operator()(const OperationCall& n) const {
    const auto& o = as<OperationCall>();
    return n.name == o.name && n.atPre == o.atPre && same(n.source, o.source) && same(n.args, o.args);
  }
  bool operator()(const ArrowCall& n) const {
    const auto& o = as<ArrowCall>();
    return n.name == o.name && same(n.source, o.source) && same(n.args, o.args);
  }
  bool operator()(const IteratorExp& n) const {
    const auto& o = as<IteratorExp>();
    return n.iterator == o.iterator && n.vars == o.vars && same(n.source, o.source) && same(n.body, o.body);
  }
  bool operator()(const AllInstances& n) const { return n.typeName == as<AllInstances>().typeName; }
  bool operator()(const IfExpr& n) const {
    const auto& o = as<IfExpr>();
    return same(n.cond, o.cond) && same(n.thenExpr, o.thenExpr) && same(n.elseExpr, o.elseExpr);
  }
  bool operator()(const Binary& n) const {
    const auto& o = as<Binary>();
    return n.op == o.op && same(n.lhs, o.lhs) && same(n.rhs, o.rhs);
  }
  bool operator()(const Unary& n) const {
    const auto& o = as<Unary>();
    return n.op == o.op && same(n.operand, o.operand);
  }
};

constexpr int kNotPrecedence = 4;
constexpr int kNegPrecedence = 8;
constexpr int kPrimaryPrecedence = 9;

int precedence_of(const Expr& e) {
  if (const auto* b = std::get_if<Binary>(&e.node)) return precedence(b->op);
  if (const auto* u = std::get_if<Unary>(&e.node))
    return u->op == UnaryOp::Not ? kNotPrecedence : kNegPrecedence;
  return kPrimaryPrecedence;
}

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    switch (c) {
      case '\'': out += "\\'"; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out + "'";
}

std::string real_text(double v) {
  std::string s = fmt::format("{}", v);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

std::string wrap(const Expr& e, bool parens) {
  std::string s = print(e);
  return parens ? "(" + s + ")" : s;
}

std::string join_args(const std::vector<ExprPtr>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += print(*args[i]);
  }
  return out;
}

std::string source_text(const ExprPtr& source) {
  return wrap(*source, precedence_of(*source) < kPrimaryPrecedence);
}

struct PrintVisitor {
  std::string operator()(const SelfRef&) const { return "self"; }
  std::string operator()(const VarRef& n) const { return n.name; }
  std::string operator()(const IntLit& n) const { return std::to_string(n.value); }
  std::string operator()(const RealLit& n) const { return real_text(n.value); }
  std::string operator()(const BoolLit& n) const { return n.value ? "true" : "false"; }
  std::string operator()(const StringLit& n) const { return quote(n.value); }
  std::string operator()(const PropertyCall& n) const {
    return source_text(n.source) + "." + n.name + (n.atPre ? "@pre" : "");
  }
  std::string operator()(const OperationCall& n) const {
    return fmt::format("{}.{}{}({})", source_text(n.source), n.name, n.atPre ? "@pre" : "", join_args(n.args));
  }
  std::string operator()(const ArrowCall& n) const {
    return fmt::format("{}->{}({})", source_text(n.source), n.name, join_args(n.args));
  }
  std::string operator()(const IteratorExp& n) const {
    std::string vars;
    for (std::size_t i = 0; i < n.vars.size(); ++i) {
      if (i) vars += ", ";
      vars += n.vars[i].name;
      if (n.vars[i].type) vars += " : " + *n.vars[i].type;
    }
    if (!vars.empty()) vars += " | ";
    return fmt::format("{}->{}({}{})", source_text(n.source), n.iterator, vars, print(*n.body));
  }
  std::string operator()(const AllInstances& n) const { return n.typeName + ".allInstances()"; }
  std::string operator()(const IfExpr& n) const {
    return fmt::format("if {} then {} else {} endif", print(*n.cond), print(*n.thenExpr), print(*n.elseExpr));
  }
  std::string operator()(const Binary& n) const {
    int p = precedence(n.op);
    return fmt::format("{} {} {}", wrap(*n.lhs, precedence_of(*n.lhs) < p), to_string(n.op),
                       wrap(*n.rhs, precedence_of(*n.rhs) <= p));
  }
  std::string operator()(const Unary& n) const {
    if (n.op == UnaryOp::Not) return "not " + wrap(*n.operand, precedence_of(*n.operand) < kNotPrecedence);
    // "--" would open a comment.
    bool parens = precedence_of(*n.operand) < kNegPrecedence || std::holds_alternative<Unary>(n.operand->node);
    return "-" + wrap(*n.operand, parens);
  }
};

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(EqualVisitor{b.node}, a.node);
}

bool operator==(const OclConstraint& a, const OclConstraint& b) {
  return a.contextClass == b.contextClass && a.kind == b.kind && a.operation == b.operation &&
         a.name == b.name && same(a.body, b.body);
}

std::string_view to_string(BinaryOp op) {
  switch (op) {
    case BinaryOp::Implies: return "implies";
    case BinaryOp::Or: return "or";
    case BinaryOp::Xor: return "xor";
    case BinaryOp::And: return "and";
    case BinaryOp::Eq: return "=";
    case BinaryOp::Ne: return "<>";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
  }
  return "?";
}

int precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::Implies: return 1;
    case BinaryOp::Or:
    case BinaryOp::Xor: return 2;
    case BinaryOp::And: return 3;
    case BinaryOp::Eq:
    case BinaryOp::Ne:
    case BinaryOp::Lt:
    case BinaryOp::Gt:
    case BinaryOp::Le:
    case BinaryOp::Ge: return 5;
    case BinaryOp::Add:
    case BinaryOp::Sub: return 6;
    case BinaryOp::Mul:
    case BinaryOp::Div: return 7;
  }
  return 0;
}

std::string_view to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::Inv: return "inv";
    case ConstraintKind::Pre: return "pre";
    case ConstraintKind::Post: return "post";
  }
  return "inv";
}

std::string print(const Expr& expr) { return std::visit(PrintVisitor{}, expr.node); }

std::string print(const OclConstraint& c) {
  std::string head = "context " + c.contextClass;
  if (c.operation) {
    head += "::" + c.operation->name + "(";
    for (std::size_t i = 0; i < c.operation->params.size(); ++i) {
      if (i) head += ", ";
      head += c.operation->params[i].name + " : " + c.operation->params[i].type.value_or("");
    }
    head += ")";
    if (c.operation->returnType) head += " : " + *c.operation->returnType;
  }
  head += fmt::format(" {}", to_string(c.kind));
  if (c.name) head += " " + *c.name;
  return head + ": " + print(*c.body);
}

}  // namespace oclpath::ocl
