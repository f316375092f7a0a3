#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lotusfrieze {

/// A mathematical precondition was violated: a sequence that is not the
/// quiddity of a triangulation, a pair that is not a petal, an absent
/// diagonal, and so on. The message names the violated invariant.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual input. `position()` is the byte offset into the source.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lotusfrieze
