#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leibkit {

/// Base class of every error thrown by the toolkit.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Vector length / ambient space / cross-algebra mismatch.
struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotAnIdeal : Error {
  using Error::Error;
};

struct NotASubalgebra : Error {
  using Error::Error;
};

struct NotLeibniz : Error {
  using Error::Error;
};

struct NotLeftLeibniz : Error {
  using Error::Error;
};

struct NotSymmetric : Error {
  using Error::Error;
};

struct NotLie : Error {
  using Error::Error;
};

struct NotModule : Error {
  using Error::Error;
};

struct NotBimodule : Error {
  using Error::Error;
};

struct NotNilpotent : Error {
  using Error::Error;
};

struct NotSolvable : Error {
  using Error::Error;
};

struct LambdaNotNilpotent : Error {
  using Error::Error;
};

struct ZeroModule : Error {
  using Error::Error;
};

struct NotACocycle : Error {
  using Error::Error;
};

struct WrongDimension : Error {
  using Error::Error;
};

/// A cochain space exceeded the configured size budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

/// Syntax error in an input document, with 1-based position.
struct ParseError : Error {
  std::size_t line;
  std::size_t column;
  ParseError(std::string msg, std::size_t line_, std::size_t column_)
      : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(column_) + ": " + std::move(msg)),
        line(line_),
        column(column_) {}
};

/// Well-formed syntax with an invalid meaning (unknown label, duplicate rule, ...).
struct SemanticError : Error {
  std::size_t line;
  SemanticError(std::string msg, std::size_t line_)
      : Error("error at line " + std::to_string(line_) + ": " + std::move(msg)), line(line_) {}
};

}  // namespace leibkit
