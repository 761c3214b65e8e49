#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ecdetect {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or expression text. `column` is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : Error(what + " at column " + std::to_string(column)), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Invalid problem file. Line and column are 1-based; 0 when unknown.
class ProblemFileError : public Error {
 public:
  ProblemFileError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) +
                             ": " + what
                       : what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A caller-side contract was violated (bad index, wrong ring, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The base point does not lie on the variety within tolerance.
class NotOnVarietyError : public Error {
 public:
  NotOnVarietyError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// A loop with a degree or sample budget ran out before it could decide.
/// Distinct from a negative answer.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

/// Staircase computation hit max_degree before the stop criterion fired.
class IncompleteStaircaseError : public InconclusiveError {
 public:
  IncompleteStaircaseError(const std::string& what,
                           std::vector<std::vector<int>> partial)
      : InconclusiveError(what), partial_(std::move(partial)) {}
  const std::vector<std::vector<int>>& partial_corners() const { return partial_; }

 private:
  std::vector<std::vector<int>> partial_;
};

/// Sampling on a component failed (Newton did not converge, pole, ...).
class SamplingError : public Error {
 public:
  using Error::Error;
};

}  // namespace ecdetect
