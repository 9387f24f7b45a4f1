#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace matevo {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Constitutive-law text could not be parsed. Carries the offending
/// position (0-based byte offset plus 1-based line/column).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t pos, int line, int col)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(col) + ")"),
        pos_(pos),
        line_(line),
        col_(col) {}

  std::size_t pos() const { return pos_; }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  std::size_t pos_;
  int line_;
  int col_;
};

/// Runtime evaluation failure: division by zero, sqrt/log domain error.
class EvalError : public Error {
 public:
  using Error::Error;
};

/// Invalid grid or sampling configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed interchange file (groupoid JSON, model file).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure: non-finite values where finite ones are required.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Subspace dimensions disagree where equal dimensions are required.
/// Signals a symmetry-dimension jump to callers aligning frames.
class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace matevo
