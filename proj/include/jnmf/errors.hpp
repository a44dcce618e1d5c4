#pragma once

#include <stdexcept>
#include <string>

namespace jnmf {

// Matrix or partition dimensions disagree.
class ShapeError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Invalid configuration value (nonpositive weight, c > n, empty range, ...).
class ParameterError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Adjacency violates the signed-graph invariants (asymmetric, self-loop, non-finite).
class StructureError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Malformed input file. Carries the 1-based line number when known (0 otherwise).
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

// A benchmark generator could not realize the requested configuration.
class GenerationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Non-finite values appeared during optimization.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace jnmf
