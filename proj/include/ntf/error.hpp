#pragma once

#include <stdexcept>
#include <string>

namespace ntf {

// Raised for malformed or out-of-contract input (bad indices, mismatched
// ambient rings, non-square-free arguments where square-free is required...).
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when text or JSON cannot be parsed; carries the byte offset.
class parse_error : public input_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : input_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ntf
