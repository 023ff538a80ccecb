#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpbraid {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A computation would exceed a configured size or node budget.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The conjugation moves stalled without reaching a reduced case.
class NotReducedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qpbraid
