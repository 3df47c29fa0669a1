#pragma once

#include <stdexcept>
#include <string>

namespace seraph {

/// Base class for all engine errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected input text. Carries a 1-based line/column into the original text.
class ParseError : public Error {
 public:
  ParseError(const std::string &msg, int line, int column)
      : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A construct that exists in Cypher/Seraph but is outside the supported subset.
class UnsupportedFeatureError : public ParseError {
 public:
  UnsupportedFeatureError(const std::string &feature, int line, int column)
      : ParseError("unsupported feature: " + feature, line, column), feature_(feature) {}

  const std::string &feature() const { return feature_; }

 private:
  std::string feature_;
};

/// Table field-set mismatch between bag operands.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Query evaluation failure (unbound variable, strict-mode type error, ...).
class EvalError : public Error {
 public:
  using Error::Error;
};

/// Malformed or invariant-violating data (JSON-PG decode, stream ordering, ...).
class DataError : public Error {
 public:
  using Error::Error;
};

/// Source/sink failure.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Illegal query lifecycle transition.
class StateError : public Error {
 public:
  using Error::Error;
};

}  // namespace seraph
