#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace transknot {

// Syntax error in one of the text formats; position is a byte offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace transknot
