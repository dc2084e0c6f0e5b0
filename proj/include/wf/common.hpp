#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wf {

// Raised by the expression parsers; pos is the 0-based offset of the first
// offending token.
struct parse_error : std::runtime_error {
  std::size_t pos;
  parse_error(std::size_t p, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

// Raised when a search hits a caller-supplied bound (e.g. |S| in the
// truncation factorization).
struct limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wf
