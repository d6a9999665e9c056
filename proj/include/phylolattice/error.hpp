#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace phylolattice {

// Raised when an input violates a structural invariant (asymmetric matrix,
// non-monotone gram, ...). `diagnostics` lists every offending item found.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what, std::vector<std::string> diagnostics = {})
      : std::invalid_argument(what), diagnostics_(std::move(diagnostics)) {}

  const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

// Text input that could not be parsed. Line and column are 1-based.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : ValidationError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace phylolattice
