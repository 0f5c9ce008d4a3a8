#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

// Bad user input: malformed text, violated preconditions on CLI arguments.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Broken internal invariant. Seeing this means a bug, not bad input.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace schubert
