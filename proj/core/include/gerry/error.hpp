#pragma once

#include <stdexcept>
#include <string>

namespace gerry {

/// An enumeration or numeric limit was exceeded. Distinct from bad input.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The instance is well formed but outside the class a solver handles
/// (not a tree, wrong number of colors, wrong diameter).
class UnsupportedInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed instance or partition text. `line()` is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gerry
