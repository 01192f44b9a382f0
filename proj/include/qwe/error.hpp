#pragma once

#include <stdexcept>
#include <string>

namespace qwe {

// Input text that does not match a grammar.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input that violates a semantic contract (non-commuting
// generators, non-orthonormal codewords, ...).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Mixed operand sizes (qubit counts, basis indices, vector lengths).
struct DimensionError : std::runtime_error {
  explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

// Exact integer arithmetic left the representable range. Never wraps.
struct ArithmeticError : std::runtime_error {
  explicit ArithmeticError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was invoked outside its stated hypotheses.
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qwe
