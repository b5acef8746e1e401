#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rdematel {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Matrix dimensions disagree, or a matrix that must be square is not.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Input has no information to work with (all-zero matrix, zero weight sum).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix(const std::string& what, long pivot_index)
      : Error(what), pivot_index_(pivot_index) {}
  long pivot_index() const { return pivot_index_; }

 private:
  long pivot_index_;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// An interval operation produced lower > upper.
class IntervalOrder : public Error {
 public:
  using Error::Error;
};

class InsufficientExperts : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// One problem found while validating input. `location` is a human-readable
/// pointer into the document, e.g. "matrices.R3[2][4]" or "row 3, column 5".
struct Diagnostic {
  std::string location;
  std::string message;

  std::string to_string() const {
    return location.empty() ? message : location + ": " + message;
  }
};

/// Validation failure carrying every problem found, not only the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Diagnostic> diagnostics)
      : Error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  static std::string summarize(const std::vector<Diagnostic>& diags) {
    std::string out = std::to_string(diags.size()) + " validation error(s)";
    if (!diags.empty()) out += "; first: " + diags.front().to_string();
    return out;
  }

  std::vector<Diagnostic> diagnostics_;
};

}  // namespace rdematel
