#pragma once

#include <stdexcept>
#include <string>

namespace logder {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in polynomial rings (or free modules) of different shape.
class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Input violates a homogeneity requirement; such input is rejected, never truncated.
class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

class ArrangementError : public Error {
 public:
  using Error::Error;
};

/// A theorem was invoked outside its hypotheses (e.g. FST on a non-free deletion).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A statement that is proven in the literature failed on concrete data.
/// These are never swallowed; the CLI turns them into exit code 3.
class FalsificationError : public Error {
 public:
  FalsificationError(std::string check, std::string detail)
      : Error(check + ": " + detail), check_(std::move(check)), detail_(std::move(detail)) {}

  const std::string& check() const { return check_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string check_;
  std::string detail_;
};

class LatticeTooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace logder
