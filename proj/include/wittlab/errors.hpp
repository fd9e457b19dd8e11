#pragma once

#include <stdexcept>
#include <string>

namespace wittlab {

/// Bad input: malformed descriptor, tower mismatch, violated precondition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax error in a field descriptor or form expression.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& message, int line, int column)
      : ValidationError(message + " at line " + std::to_string(line) + ", column " +
                        std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A search or enumeration hit its configured budget. Never a wrong answer.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A witness guaranteed by theory was not found. Carries a serialized
/// instance so the failure can be replayed.
class InvariantViolation : public std::logic_error {
 public:
  InvariantViolation(const std::string& message, std::string instance)
      : std::logic_error(message + " [instance: " + instance + "]"),
        instance_(std::move(instance)) {}

  const std::string& instance() const { return instance_; }

 private:
  std::string instance_;
};

}  // namespace wittlab
