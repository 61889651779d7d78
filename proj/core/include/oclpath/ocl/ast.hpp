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

#ifndef OCLPATH_OCL_AST_HPP
#define OCLPATH_OCL_AST_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace oclpath::ocl {

// Half-open byte range into the constraint text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct SelfRef {};
struct VarRef {
  std::string name;
};
struct IntLit {
  long long value = 0;
};
struct RealLit {
  double value = 0;
};
struct BoolLit {
  bool value = false;
};
struct StringLit {
  std::string value;
};

// source.name, also covers role navigation.
struct PropertyCall {
  ExprPtr source;
  std::string name;
  bool atPre = false;
};

// source.name(args)
struct OperationCall {
  ExprPtr source;
  std::string name;
  std::vector<ExprPtr> args;
  bool atPre = false;
};

// source->name(args) for non-iterating collection operations.
struct ArrowCall {
  ExprPtr source;
  std::string name;
  std::vector<ExprPtr> args;
};

struct IteratorVar {
  std::string name;
  std::optional<std::string> type;

  friend bool operator==(const IteratorVar&, const IteratorVar&) = default;
};

// source->iterator(v1, v2 | body). `vars` is empty for the implicit form
// `source->select(valid)`.
struct IteratorExp {
  ExprPtr source;
  std::string iterator;
  std::vector<IteratorVar> vars;
  ExprPtr body;
};

struct AllInstances {
  std::string typeName;
};

struct IfExpr {
  ExprPtr cond;
  ExprPtr thenExpr;
  ExprPtr elseExpr;
};

enum class BinaryOp { Implies, Or, Xor, And, Eq, Ne, Lt, Gt, Le, Ge, Add, Sub, Mul, Div };
enum class UnaryOp { Not, Neg };

struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Unary {
  UnaryOp op;
  ExprPtr operand;
};

struct Expr {
  using Node = std::variant<SelfRef, VarRef, IntLit, RealLit, BoolLit, StringLit, PropertyCall,
                            OperationCall, ArrowCall, IteratorExp, AllInstances, IfExpr, Binary, Unary>;
  Span span;
  Node node;

  // Structural equality; spans are ignored.
  friend bool operator==(const Expr& a, const Expr& b);
};

template <typename T>
ExprPtr make_expr(Span span, T node) {
  return std::make_unique<Expr>(Expr{span, Expr::Node(std::move(node))});
}

std::string_view to_string(BinaryOp op);
// Binding strength; larger binds tighter.
int precedence(BinaryOp op);

enum class ConstraintKind { Inv, Pre, Post };

std::string_view to_string(ConstraintKind kind);

struct OperationContext {
  std::string name;
  std::vector<IteratorVar> params;  // type always set
  std::optional<std::string> returnType;

  friend bool operator==(const OperationContext&, const OperationContext&) = default;
};

struct OclConstraint {
  std::string contextClass;
  Span contextSpan;
  ConstraintKind kind = ConstraintKind::Inv;
  std::optional<OperationContext> operation;  // set iff kind is Pre or Post
  std::optional<std::string> name;
  ExprPtr body;

  friend bool operator==(const OclConstraint& a, const OclConstraint& b);
};

// Canonical single-line rendering with the minimum parentheses needed to
// re-parse to the same tree.
std::string print(const Expr& expr);
std::string print(const OclConstraint& constraint);

}  // namespace oclpath::ocl

#endif  // OCLPATH_OCL_AST_HPP
