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

#ifndef OCLPATH_OCL_PARSER_HPP
#define OCLPATH_OCL_PARSER_HPP

#include <string>
#include <string_view>

#include "oclpath/error.hpp"
#include "oclpath/ocl/ast.hpp"

namespace oclpath::ocl {

class ParseError : public DataError {
 public:
  ParseError(Span span, const std::string& message) : DataError(message), span_(span) {}
  Span span() const { return span_; }

 private:
  Span span_;
};

// Grammar:
//   constraint := "context" Ident [ "::" Ident "(" params ")" [":" Type] ]
//                 ("inv" | "pre" | "post") [Ident] ":" expr
//   expr       := implies;  implies < or/xor < and < not < comparison
//                 < additive < multiplicative < unary minus < postfix
// Throws ParseError carrying the offending span.
OclConstraint parse(std::string_view text);

// Expression only, for tests and tooling.
ExprPtr parse_expression(std::string_view text);

bool is_iterator_name(std::string_view name);

}  // namespace oclpath::ocl

#endif  // OCLPATH_OCL_PARSER_HPP
