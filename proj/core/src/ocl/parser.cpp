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

#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <unordered_set>
#include <vector>

#include <fmt/format.h>

namespace oclpath::ocl {

namespace {

enum class Tok {
  End, Ident, Keyword, Int, Real, String,
  Dot, Arrow, ColonColon, Colon, LParen, RParen, Comma, Bar, At,
  Eq, Ne, Lt, Gt, Le, Ge, Plus, Minus, Star, Slash
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Span span;
};

const std::unordered_set<std::string_view> kKeywords = {
    "context", "inv", "pre", "post", "body", "def", "derive", "init", "let", "in", "if",
    "then", "else", "endif", "and", "or", "xor", "implies", "not", "true", "false", "self",
    "package", "endpackage"};

constexpr std::array<std::string_view, 8> kIterators = {"select", "reject", "collect", "forAll",
                                                        "exists", "one", "any", "isUnique"};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::String: return fmt::format("string '{}'", t.text);
    default: return fmt::format("'{}'", t.text);
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", {text_.size(), text_.size()}});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void skip_trivia() {
    for (;;) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (peek() == '-' && peek(1) == '-') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      if (peek() == '/' && peek(1) == '*') {
        std::size_t start = pos_;
        auto close = text_.find("*/", pos_ + 2);
        if (close == std::string_view::npos)
          throw ParseError({start, text_.size()}, "unterminated block comment");
        pos_ = close + 2;
        continue;
      }
      return;
    }
  }

  Token make(Tok kind, std::size_t start) {
    return {kind, std::string(text_.substr(start, pos_ - start)), {start, pos_}};
  }

  Token next() {
    std::size_t start = pos_;
    char c = peek();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      Token t = make(Tok::Ident, start);
      if (kKeywords.count(t.text)) t.kind = Tok::Keyword;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number(start);
    if (c == '\'') return string(start);

    auto two = [&](char a, char b) { return peek() == a && peek(1) == b; };
    auto emit = [&](Tok kind, std::size_t len) {
      pos_ += len;
      return make(kind, start);
    };
    if (two('-', '>')) return emit(Tok::Arrow, 2);
    if (two(':', ':')) return emit(Tok::ColonColon, 2);
    if (two('<', '>')) return emit(Tok::Ne, 2);
    if (two('<', '=')) return emit(Tok::Le, 2);
    if (two('>', '=')) return emit(Tok::Ge, 2);
    switch (c) {
      case '.': return emit(Tok::Dot, 1);
      case ':': return emit(Tok::Colon, 1);
      case '(': return emit(Tok::LParen, 1);
      case ')': return emit(Tok::RParen, 1);
      case ',': return emit(Tok::Comma, 1);
      case '|': return emit(Tok::Bar, 1);
      case '@': return emit(Tok::At, 1);
      case '=': return emit(Tok::Eq, 1);
      case '<': return emit(Tok::Lt, 1);
      case '>': return emit(Tok::Gt, 1);
      case '+': return emit(Tok::Plus, 1);
      case '-': return emit(Tok::Minus, 1);
      case '*': return emit(Tok::Star, 1);
      case '/': return emit(Tok::Slash, 1);
      default: break;
    }
    // Consume one UTF-8 sequence so the span covers the whole character.
    ++pos_;
    while (pos_ < text_.size() && (static_cast<unsigned char>(text_[pos_]) & 0xC0) == 0x80) ++pos_;
    throw ParseError({start, pos_}, fmt::format("unexpected character '{}'", text_.substr(start, pos_ - start)));
  }

  Token number(std::size_t start) {
    bool real = false;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      real = true;
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (peek() == 'e' || peek() == 'E') {
      std::size_t save = pos_;
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        real = true;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      } else {
        pos_ = save;
      }
    }
    if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      throw ParseError({start, pos_}, fmt::format("malformed number '{}'", text_.substr(start, pos_ - start)));
    }
    return make(real ? Tok::Real : Tok::Int, start);
  }

  Token string(std::size_t start) {
    ++pos_;
    std::string value;
    for (;;) {
      if (pos_ >= text_.size()) throw ParseError({start, pos_}, "unterminated string literal");
      char c = text_[pos_++];
      if (c == '\'') break;
      if (c == '\\') {
        if (pos_ >= text_.size()) throw ParseError({start, pos_}, "unterminated string literal");
        char e = text_[pos_++];
        switch (e) {
          case 'n': value += '\n'; break;
          case 't': value += '\t'; break;
          case 'r': value += '\r'; break;
          case '\\': value += '\\'; break;
          case '\'': value += '\''; break;
          default: throw ParseError({pos_ - 2, pos_}, fmt::format("unknown escape '\\{}'", e));
        }
        continue;
      }
      value += c;
    }
    Token t{Tok::String, std::move(value), {start, pos_}};
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

  OclConstraint constraint() {
    OclConstraint c;
    expect_keyword("context");
    Token cls = expect(Tok::Ident, "a class name after 'context'");
    c.contextClass = cls.text;
    c.contextSpan = cls.span;

    if (at(Tok::ColonColon)) {
      advance();
      OperationContext op;
      op.name = expect(Tok::Ident, "an operation name after '::'").text;
      expect(Tok::LParen, "'(' after the operation name");
      if (!at(Tok::RParen)) {
        do {
          IteratorVar p;
          p.name = expect(Tok::Ident, "a parameter name").text;
          expect(Tok::Colon, "':' after the parameter name");
          p.type = type_name();
          op.params.push_back(std::move(p));
        } while (accept(Tok::Comma));
      }
      expect(Tok::RParen, "')' after the parameters");
      if (accept(Tok::Colon)) op.returnType = type_name();
      c.operation = std::move(op);
    }

    const Token& kw = peek();
    if (is_keyword(kw, "inv")) {
      if (c.operation)
        throw ParseError(kw.span, "'inv' cannot follow an operation context; expected 'pre' or 'post'");
      c.kind = ConstraintKind::Inv;
    } else if (is_keyword(kw, "pre") || is_keyword(kw, "post")) {
      if (!c.operation)
        throw ParseError(kw.span, fmt::format("'{}' requires an operation context (Class::op(...))", kw.text));
      c.kind = kw.text == "pre" ? ConstraintKind::Pre : ConstraintKind::Post;
    } else if (is_keyword(kw, "body") || is_keyword(kw, "def") || is_keyword(kw, "derive") ||
               is_keyword(kw, "init")) {
      throw ParseError(kw.span, fmt::format("'{}' constraints are not supported", kw.text));
    } else {
      throw ParseError(kw.span, fmt::format("expected 'inv', 'pre' or 'post' but found {}", describe(kw)));
    }
    advance();
    if (at(Tok::Ident)) c.name = advance().text;
    expect(Tok::Colon, "':' before the constraint body");
    c.body = expression();
    if (!at(Tok::End)) throw ParseError(peek().span, fmt::format("unexpected {} after the constraint body", describe(peek())));
    return c;
  }

  ExprPtr standalone_expression() {
    ExprPtr e = expression();
    if (!at(Tok::End)) throw ParseError(peek().span, fmt::format("unexpected {}", describe(peek())));
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  static bool is_keyword(const Token& t, std::string_view kw) { return t.kind == Tok::Keyword && t.text == kw; }
  bool at_keyword(std::string_view kw) const { return is_keyword(peek(), kw); }

  const Token& advance() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  bool accept(Tok kind) {
    if (!at(kind)) return false;
    advance();
    return true;
  }

  Token expect(Tok kind, std::string_view what) {
    if (!at(kind)) throw ParseError(peek().span, fmt::format("expected {} but found {}", what, describe(peek())));
    return advance();
  }

  void expect_keyword(std::string_view kw) {
    if (!at_keyword(kw))
      throw ParseError(peek().span, fmt::format("expected '{}' but found {}", kw, describe(peek())));
    advance();
  }

  std::string type_name() {
    std::string name = expect(Tok::Ident, "a type name").text;
    if (accept(Tok::LParen)) {
      name += "(" + type_name() + ")";
      expect(Tok::RParen, "')' closing the type argument");
    }
    return name;
  }

  static Span join(const Span& a, const Span& b) { return {a.begin, b.end}; }

  ExprPtr expression() { return implies(); }

  ExprPtr binary_level(ExprPtr (Parser::*next)(), std::initializer_list<std::pair<Tok, BinaryOp>> ops,
                       std::initializer_list<std::pair<std::string_view, BinaryOp>> kws) {
    ExprPtr lhs = (this->*next)();
    for (;;) {
      std::optional<BinaryOp> op;
      for (auto [tok, bop] : ops)
        if (at(tok)) op = bop;
      for (auto [kw, bop] : kws)
        if (at_keyword(kw)) op = bop;
      if (!op) return lhs;
      advance();
      ExprPtr rhs = (this->*next)();
      Span span = join(lhs->span, rhs->span);
      lhs = make_expr(span, Binary{*op, std::move(lhs), std::move(rhs)});
    }
  }

  ExprPtr implies() { return binary_level(&Parser::or_xor, {}, {{"implies", BinaryOp::Implies}}); }
  ExprPtr or_xor() {
    return binary_level(&Parser::and_, {}, {{"or", BinaryOp::Or}, {"xor", BinaryOp::Xor}});
  }
  ExprPtr and_() { return binary_level(&Parser::not_, {}, {{"and", BinaryOp::And}}); }

  ExprPtr not_() {
    if (at_keyword("not")) {
      Span start = advance().span;
      ExprPtr operand = not_();
      Span span = join(start, operand->span);
      return make_expr(span, Unary{UnaryOp::Not, std::move(operand)});
    }
    return comparison();
  }

  ExprPtr comparison() {
    return binary_level(&Parser::additive,
                        {{Tok::Eq, BinaryOp::Eq}, {Tok::Ne, BinaryOp::Ne}, {Tok::Lt, BinaryOp::Lt},
                         {Tok::Gt, BinaryOp::Gt}, {Tok::Le, BinaryOp::Le}, {Tok::Ge, BinaryOp::Ge}},
                        {});
  }
  ExprPtr additive() {
    return binary_level(&Parser::multiplicative, {{Tok::Plus, BinaryOp::Add}, {Tok::Minus, BinaryOp::Sub}}, {});
  }
  ExprPtr multiplicative() {
    return binary_level(&Parser::unary, {{Tok::Star, BinaryOp::Mul}, {Tok::Slash, BinaryOp::Div}}, {});
  }

  ExprPtr unary() {
    if (at(Tok::Minus)) {
      Span start = advance().span;
      ExprPtr operand = unary();
      Span span = join(start, operand->span);
      return make_expr(span, Unary{UnaryOp::Neg, std::move(operand)});
    }
    return postfix();
  }

  std::vector<ExprPtr> arguments() {
    std::vector<ExprPtr> args;
    if (!at(Tok::RParen)) {
      do {
        args.push_back(expression());
      } while (accept(Tok::Comma));
    }
    return args;
  }

  bool accept_at_pre() {
    if (!at(Tok::At)) return false;
    if (!is_keyword(peek(1), "pre")) throw ParseError(peek(1).span, "expected 'pre' after '@'");
    advance();
    advance();
    return true;
  }

  // Looks ahead for "v1 [: T] {, vN [: T]} |" without consuming.
  bool iterator_declarations_ahead() const {
    std::size_t i = 0;
    for (;;) {
      if (peek(i).kind != Tok::Ident) return false;
      ++i;
      if (peek(i).kind == Tok::Colon) {
        ++i;
        if (peek(i).kind != Tok::Ident) return false;
        ++i;
        if (peek(i).kind == Tok::LParen) {
          int depth = 0;
          while (peek(i).kind != Tok::End) {
            if (peek(i).kind == Tok::LParen) ++depth;
            if (peek(i).kind == Tok::RParen && --depth == 0) break;
            ++i;
          }
          ++i;
        }
      }
      if (peek(i).kind == Tok::Bar) return true;
      if (peek(i).kind != Tok::Comma) return false;
      ++i;
    }
  }

  ExprPtr postfix() {
    ExprPtr e = primary();
    for (;;) {
      if (at(Tok::Dot)) {
        advance();
        Token name = expect(Tok::Ident, "a property or operation name after '.'");
        bool at_pre = accept_at_pre();
        if (at(Tok::LParen)) {
          advance();
          std::vector<ExprPtr> args = arguments();
          Token close = expect(Tok::RParen, "')' closing the argument list");
          if (name.text == "allInstances" && !at_pre) {
            if (const auto* v = std::get_if<VarRef>(&e->node); v && args.empty()) {
              e = make_expr(join(e->span, close.span), AllInstances{v->name});
              continue;
            }
          }
          Span span = join(e->span, close.span);
          e = make_expr(span, OperationCall{std::move(e), name.text, std::move(args), at_pre});
        } else {
          Span span = join(e->span, name.span);
          e = make_expr(span, PropertyCall{std::move(e), name.text, at_pre});
        }
      } else if (at(Tok::Arrow)) {
        advance();
        Token name = expect(Tok::Ident, "a collection operation after '->'");
        expect(Tok::LParen, "'(' after the collection operation");
        if (is_iterator_name(name.text)) {
          std::vector<IteratorVar> vars;
          if (iterator_declarations_ahead()) {
            do {
              IteratorVar v;
              v.name = expect(Tok::Ident, "an iterator variable").text;
              if (accept(Tok::Colon)) v.type = type_name();
              vars.push_back(std::move(v));
            } while (accept(Tok::Comma));
            expect(Tok::Bar, "'|' after the iterator variables");
            if (vars.size() > 1 && name.text != "forAll" && name.text != "exists")
              throw ParseError(name.span, fmt::format("'{}' takes a single iterator variable", name.text));
          }
          if (at(Tok::RParen)) throw ParseError(peek().span, fmt::format("'{}' needs a body expression", name.text));
          ExprPtr body = expression();
          Token close = expect(Tok::RParen, "')' closing the iterator");
          Span span = join(e->span, close.span);
          e = make_expr(span, IteratorExp{std::move(e), name.text, std::move(vars), std::move(body)});
        } else {
          std::vector<ExprPtr> args = arguments();
          Token close = expect(Tok::RParen, "')' closing the argument list");
          Span span = join(e->span, close.span);
          e = make_expr(span, ArrowCall{std::move(e), name.text, std::move(args)});
        }
      } else {
        return e;
      }
    }
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        long long v = 0;
        auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc()) throw ParseError(t.span, fmt::format("integer literal {} out of range", t.text));
        Span s = advance().span;
        return make_expr(s, IntLit{v});
      }
      case Tok::Real: {
        double v = std::strtod(t.text.c_str(), nullptr);
        Span s = advance().span;
        return make_expr(s, RealLit{v});
      }
      case Tok::String: {
        std::string v = t.text;
        Span s = advance().span;
        return make_expr(s, StringLit{std::move(v)});
      }
      case Tok::Ident: {
        std::string name = t.text;
        Span s = advance().span;
        // Bare "name@pre" is an implicit self property.
        if (at(Tok::At)) {
          accept_at_pre();
          return make_expr(s, PropertyCall{make_expr(Span{s.begin, s.begin}, SelfRef{}), std::move(name), true});
        }
        return make_expr(s, VarRef{std::move(name)});
      }
      case Tok::LParen: {
        Span open = advance().span;
        ExprPtr inner = expression();
        Token close = expect(Tok::RParen, "')'");
        inner->span = join(open, close.span);
        return inner;
      }
      case Tok::Keyword: {
        if (t.text == "self") return make_expr(advance().span, SelfRef{});
        if (t.text == "true" || t.text == "false") {
          bool v = t.text == "true";
          return make_expr(advance().span, BoolLit{v});
        }
        if (t.text == "if") {
          Span start = advance().span;
          ExprPtr cond = expression();
          expect_keyword("then");
          ExprPtr then_e = expression();
          expect_keyword("else");
          ExprPtr else_e = expression();
          Span end = peek().span;
          expect_keyword("endif");
          return make_expr(join(start, end), IfExpr{std::move(cond), std::move(then_e), std::move(else_e)});
        }
        if (t.text == "let") throw ParseError(t.span, "'let' expressions are not supported");
        break;
      }
      default: break;
    }
    throw ParseError(t.span, fmt::format("expected an expression but found {}", describe(t)));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

bool is_iterator_name(std::string_view name) {
  for (std::string_view it : kIterators)
    if (it == name) return true;
  return false;
}

OclConstraint parse(std::string_view text) { return Parser(text).constraint(); }

ExprPtr parse_expression(std::string_view text) { return Parser(text).standalone_expression(); }

}  // namespace oclpath::ocl
