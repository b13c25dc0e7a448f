#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twistcert {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class InvalidRule : public Error {
 public:
  using Error::Error;
};

class PatternMismatch : public Error {
 public:
  PatternMismatch(std::size_t position, std::string expected, std::string found)
      : Error("pattern mismatch at position " + std::to_string(position) +
              ": expected '" + expected + "', found '" + found + "'"),
        position_(position),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t position_;
  std::string expected_;
  std::string found_;
};

class ArithmeticOverflow : public Error {
 public:
  ArithmeticOverflow() : Error("integer overflow in exact matrix arithmetic") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class MissingGenerator : public Error {
 public:
  explicit MissingGenerator(const std::string& name)
      : Error("no matrix assigned to generator '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class NonInvertibleAssignment : public Error {
 public:
  explicit NonInvertibleAssignment(const std::string& name)
      : Error("matrix assigned to '" + name + "' is not invertible over Z"),
        name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class UndefinedDet : public Error {
 public:
  explicit UndefinedDet(const std::string& name)
      : Error("no determinant value is defined for generator '" + name + "'"),
        name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// The (surface, curve) data describes no actual pair.
class Unrealizable : public Error {
 public:
  using Error::Error;
};

// The case is one of the conjectural families the construction does not reach.
class OutOfScope : public Error {
 public:
  using Error::Error;
};

// The pair is realizable but fails the genus/topology hypotheses of the
// requested construction.
class NotCovered : public Error {
 public:
  using Error::Error;
};

}  // namespace twistcert
