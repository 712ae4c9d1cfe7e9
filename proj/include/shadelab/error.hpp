#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

namespace shadelab {

/// Caller supplied arguments that are malformed or exceed a size cap.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text input that does not match its grammar.
class ParseError : public UsageError {
 public:
  ParseError(int line, const std::string& what)
      : UsageError("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// A theorem hypothesis (shade map, quasi-closure, ...) does not hold for the
/// input. The diagnostics that established this travel with the error.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, nlohmann::json diagnostics = {})
      : std::runtime_error(what), diagnostics_(std::move(diagnostics)) {}

  const nlohmann::json& diagnostics() const { return diagnostics_; }

 private:
  nlohmann::json diagnostics_;
};

/// A table or family is internally inconsistent, e.g. a matching that maps a
/// face outside its own family.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Always a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace shadelab
