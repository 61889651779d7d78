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

#include "oclpath/ocl/parser.hpp"

#include <gtest/gtest.h>

#include <random>

namespace oclpath::ocl {
namespace {

std::string reprint(std::string_view text) { return print(*parse_expression(text)); }

TEST(Parser, AirportConstraint) {
  OclConstraint c = parse("context Flight inv: self.passengers->size() <= self.maxNrPassengers");
  EXPECT_EQ(c.contextClass, "Flight");
  EXPECT_EQ(c.kind, ConstraintKind::Inv);
  EXPECT_FALSE(c.operation);
  const auto& cmp = std::get<Binary>(c.body->node);
  EXPECT_EQ(cmp.op, BinaryOp::Le);
  const auto& size = std::get<ArrowCall>(cmp.lhs->node);
  EXPECT_EQ(size.name, "size");
  EXPECT_EQ(std::get<PropertyCall>(size.source->node).name, "passengers");
  EXPECT_EQ(c.contextSpan, (Span{8, 14}));
}

TEST(Parser, OperationContexts) {
  OclConstraint pre = parse("context LoyaltyAccount::earn(i : Integer) pre positive: i > 0");
  EXPECT_EQ(pre.kind, ConstraintKind::Pre);
  ASSERT_TRUE(pre.operation);
  EXPECT_EQ(pre.operation->name, "earn");
  EXPECT_EQ(pre.operation->params, (std::vector<IteratorVar>{{"i", "Integer"}}));
  EXPECT_FALSE(pre.operation->returnType);
  EXPECT_EQ(pre.name, "positive");

  OclConstraint post = parse(
      "context LoyaltyProgram::getServices() : Set(Service)\n"
      "post: result = self.partners.deliveredServices->asSet()");
  EXPECT_EQ(post.kind, ConstraintKind::Post);
  EXPECT_EQ(post.operation->returnType, "Set(Service)");

  OclConstraint at = parse("context LoyaltyAccount::burn(i : Integer) post: points = points@pre - i");
  EXPECT_EQ(print(at), "context LoyaltyAccount::burn(i : Integer) post: points = self.points@pre - i");
}

TEST(Parser, Precedence) {
  EXPECT_EQ(reprint("a or b and c"), "a or b and c");
  auto e = parse_expression("a or b and c");
  EXPECT_EQ(std::get<Binary>(e->node).op, BinaryOp::Or);
  EXPECT_EQ(std::get<Binary>(parse_expression("a implies b or c")->node).op, BinaryOp::Implies);
  EXPECT_EQ(std::get<Binary>(parse_expression("a + b * c = d")->node).op, BinaryOp::Eq);
  EXPECT_EQ(std::get<Unary>(parse_expression("not a = b")->node).op, UnaryOp::Not);
  EXPECT_EQ(std::get<Binary>(parse_expression("not a and b")->node).op, BinaryOp::And);
  EXPECT_EQ(std::get<Binary>(parse_expression("-a * b")->node).op, BinaryOp::Mul);
  // Left associative.
  const auto& sub = std::get<Binary>(parse_expression("a - b - c")->node);
  EXPECT_EQ(print(*sub.lhs), "a - b");
}

TEST(Parser, MinimalParentheses) {
  EXPECT_EQ(reprint("((a + b)) * c"), "(a + b) * c");
  EXPECT_EQ(reprint("a - (b - c)"), "a - (b - c)");
  EXPECT_EQ(reprint("(a - b) - c"), "a - b - c");
  EXPECT_EQ(reprint("(a and b) or c"), "a and b or c");
  EXPECT_EQ(reprint("not (a and b)"), "not (a and b)");
  EXPECT_EQ(reprint("(not a) = b"), "(not a) = b");
  EXPECT_EQ(reprint("- (- x)"), "-(-x)");
  EXPECT_EQ(reprint("(self.items)->size()"), "self.items->size()");
  EXPECT_EQ(reprint("(a + b).abs()"), "(a + b).abs()");
}

TEST(Parser, IteratorsAndLiterals) {
  EXPECT_EQ(reprint("self.cards->forAll(c1, c2 | c1 <> c2 implies c1.number <> c2.number)"),
            "self.cards->forAll(c1, c2 | c1 <> c2 implies c1.number <> c2.number)");
  EXPECT_EQ(reprint("self.cards->select(valid)"), "self.cards->select(valid)");
  EXPECT_EQ(reprint("self.cards->select(c:CustomerCard|c.valid)"), "self.cards->select(c : CustomerCard | c.valid)");
  EXPECT_EQ(reprint("Customer.allInstances()->isUnique(name)"), "Customer.allInstances()->isUnique(name)");
  EXPECT_EQ(reprint("'it\\'s'"), "'it\\'s'");
  EXPECT_EQ(reprint("2.50 + 3"), "2.5 + 3");
  EXPECT_EQ(reprint("1e3"), "1000.0");
  EXPECT_EQ(reprint("if a then 1 else 2 endif"), "if a then 1 else 2 endif");
  EXPECT_EQ(reprint("x -- trailing comment\n + 1"), "x + 1");
}

void expect_parse_error(std::string_view text, Span span) {
  try {
    parse(text);
    ADD_FAILURE() << "parsed: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.span(), span) << text << ": " << e.what();
  }
}

TEST(Parser, ErrorsCarrySpans) {
  expect_parse_error("context Flight inv: self.x >", {28, 28});
  expect_parse_error("context Flight inv self.x", {19, 23});
  expect_parse_error("Flight inv: true", {0, 6});
  expect_parse_error("context Flight inv: self.x # 2", {27, 28});
  expect_parse_error("context Flight inv: self->select(a, b | a)", {26, 32});
  expect_parse_error("context Flight inv: let x = 1 in x", {20, 23});
  expect_parse_error("context Flight inv: 12abc > 1", {20, 25});
  expect_parse_error("context Flight inv: 'open", {20, 25});
  expect_parse_error("context Flight inv: true true", {25, 29});
}

TEST(Parser, IteratorNames) {
  for (const char* n : {"select", "reject", "collect", "forAll", "exists", "one", "any", "isUnique"})
    EXPECT_TRUE(is_iterator_name(n)) << n;
  EXPECT_FALSE(is_iterator_name("size"));
  EXPECT_FALSE(is_iterator_name("includes"));
}

// Random trees for the print/parse round trip.
class ExprGen {
 public:
  explicit ExprGen(unsigned seed) : rng_(seed) {}

  ExprPtr expr(int depth) {
    if (depth <= 0) return leaf();
    switch (pick(10)) {
      case 0:
        return make_expr({}, Binary{static_cast<BinaryOp>(pick(14)), expr(depth - 1), expr(depth - 1)});
      case 1:
        return make_expr({}, Unary{pick(2) ? UnaryOp::Not : UnaryOp::Neg, expr(depth - 1)});
      case 2:
        return make_expr({}, PropertyCall{expr(depth - 1), ident(), pick(4) == 0});
      case 3:
        return make_expr({}, OperationCall{expr(depth - 1), ident(), args(depth - 1), pick(5) == 0});
      case 4:
        return make_expr({}, ArrowCall{expr(depth - 1), kArrows[pick(kArrows.size())], args(depth - 1)});
      case 5: {
        std::string it = kIters[pick(kIters.size())];
        std::vector<IteratorVar> vars;
        std::size_t n = (it == "forAll" || it == "exists") ? pick(3) : pick(2);
        for (std::size_t i = 0; i < n; ++i)
          vars.push_back({ident(), pick(2) ? std::optional<std::string>(type()) : std::nullopt});
        return make_expr({}, IteratorExp{expr(depth - 1), it, vars, expr(depth - 1)});
      }
      case 6:
        return make_expr({}, IfExpr{expr(depth - 1), expr(depth - 1), expr(depth - 1)});
      case 7:
        return make_expr({}, Binary{pick(2) ? BinaryOp::Add : BinaryOp::Mul, expr(depth - 1), leaf()});
      default:
        return leaf();
    }
  }

  ExprPtr leaf() {
    switch (pick(7)) {
      case 0: return make_expr({}, SelfRef{});
      case 1: return make_expr({}, IntLit{static_cast<long long>(pick(100000))});
      case 2: return make_expr({}, RealLit{static_cast<double>(pick(80000)) / 8.0});
      case 3: return make_expr({}, BoolLit{pick(2) == 1});
      case 4: return make_expr({}, StringLit{string()});
      case 5: return make_expr({}, AllInstances{class_name()});
      default: return make_expr({}, VarRef{ident()});
    }
  }

 private:
  static constexpr std::array<const char*, 6> kArrows = {"size", "includes", "notEmpty", "sum", "asSet", "first"};
  static constexpr std::array<const char*, 8> kIters = {"select", "reject", "collect", "forAll",
                                                        "exists", "one",    "any",     "isUnique"};

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  std::vector<ExprPtr> args(int depth) {
    std::vector<ExprPtr> out;
    for (std::size_t i = pick(3); i > 0; --i) out.push_back(expr(depth));
    return out;
  }

  std::string ident() {
    static const std::array<const char*, 8> names = {"a", "points", "x1", "card_no", "validFrom", "n", "age", "y"};
    return names[pick(names.size())];
  }

  std::string type() {
    static const std::array<const char*, 5> types = {"Customer", "Integer", "Set(Service)", "Date", "Bag(String)"};
    return types[pick(types.size())];
  }

  std::string class_name() {
    static const std::array<const char*, 3> names = {"Customer", "Date", "LoyaltyAccount"};
    return names[pick(names.size())];
  }

  std::string string() {
    static const std::string alphabet = "ab '\\\n\tZ9";
    std::string s;
    for (std::size_t i = pick(6); i > 0; --i) s += alphabet[pick(alphabet.size())];
    return s;
  }

  std::mt19937 rng_;
};

TEST(Parser, RandomTreesRoundTrip) {
  ExprGen gen(20240611);
  for (int i = 0; i < 3000; ++i) {
    ExprPtr e = gen.expr(1 + i % 5);
    std::string text = print(*e);
    ExprPtr back;
    try {
      back = parse_expression(text);
    } catch (const ParseError& err) {
      FAIL() << text << "\n" << err.what();
    }
    ASSERT_TRUE(*back == *e) << text << "\nreprinted: " << print(*back);
    EXPECT_EQ(print(*back), text);
  }
}

TEST(Parser, RandomConstraintsRoundTrip) {
  ExprGen gen(7);
  for (int i = 0; i < 300; ++i) {
    OclConstraint c;
    c.contextClass = "Customer";
    c.kind = static_cast<ConstraintKind>(i % 3);
    if (c.kind != ConstraintKind::Inv) {
      c.operation = OperationContext{"op", {}, std::nullopt};
      if (i % 2) c.operation->params.push_back({"p", "Integer"});
      if (i % 4 == 1) c.operation->returnType = "Set(Service)";
    }
    if (i % 5 == 0) c.name = "named";
    c.body = gen.expr(3);
    std::string text = print(c);
    OclConstraint back = parse(text);
    EXPECT_TRUE(back == c) << text;
    EXPECT_EQ(print(back), text);
  }
}

}  // namespace
}  // namespace oclpath::ocl
