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

#ifndef OCLPATH_OCL_CHECKER_HPP
#define OCLPATH_OCL_CHECKER_HPP

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "oclpath/model.hpp"
#include "oclpath/ocl/ast.hpp"
#include "oclpath/ocl/types.hpp"

namespace oclpath::ocl {

// The four error classes reported by the compiler this checker stands in for.
enum class ErrorCategory { ParsingError, UndefinedOperation, IterExpInvalidSource, SignatureMismatch };

inline constexpr ErrorCategory kAllCategories[] = {
    ErrorCategory::UndefinedOperation, ErrorCategory::ParsingError, ErrorCategory::IterExpInvalidSource,
    ErrorCategory::SignatureMismatch};

std::string_view to_string(ErrorCategory category);
ErrorCategory parse_category(std::string_view text);

struct CheckError {
  ErrorCategory category;
  std::string message;
  Span span;
};

struct CheckVerdict {
  bool valid = true;
  std::optional<CheckError> error;

  static CheckVerdict ok() { return {}; }
  static CheckVerdict fail(ErrorCategory category, std::string message, Span span) {
    return {false, CheckError{category, std::move(message), span}};
  }
};

// {"valid", "category", "message", "span"}
nlohmann::ordered_json to_json(const CheckVerdict& verdict);
CheckVerdict verdict_from_json(const nlohmann::json& j);

// Type-checks the constraint body with self bound to the context class. The
// first failure in evaluation order wins:
//   unresolved property, operation, variable or operator -> UndefinedOperation
//   arrow call or iterator on a non-collection           -> IterExpInvalidSource
//   operation arity/parameter mismatch, non-Boolean
//   constraint/iterator/if bodies                        -> SignatureMismatch
CheckVerdict check(const OclConstraint& constraint, const UmlModel& model);

// parse + check. Never throws.
CheckVerdict validate(std::string_view text, const UmlModel& model);

}  // namespace oclpath::ocl

#endif  // OCLPATH_OCL_CHECKER_HPP
