#pragma once

#include <stdexcept>
#include <string>

namespace sn {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ContractViolation : Error { using Error::Error; };
struct FieldError : Error { using Error::Error; };
struct IdempotentViolation : Error { using Error::Error; };
struct NotSemisimple : Error { using Error::Error; };
struct NotSplit : Error { using Error::Error; };
struct UnknownLabel : Error { using Error::Error; };
struct MalformedDiagram : Error { using Error::Error; };
struct BoundaryMismatch : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct AlgebraMismatch : Error { using Error::Error; };
struct MalformedDecoration : Error { using Error::Error; };
struct CategoryMismatch : Error { using Error::Error; };
struct CompanionUnavailable : Error { using Error::Error; };
struct ParseError : Error {
  int line = 0, column = 0;
  ParseError(const std::string& msg, int l, int c)
      : Error(msg), line(l), column(c) {}
};

}  // namespace sn
