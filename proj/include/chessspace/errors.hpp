#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chessspace {

/// Malformed textual input (piece sets, placements). Maps to a usage error.
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Well-formed input that the requested operation cannot accept
/// (chess validation, enumeration budget, non-square symmetry group).
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace chessspace
