#pragma once

#include <stdexcept>
#include <string>

namespace t2sum {

/// Raised on any violated precondition: bad vertex indices, shape mismatches,
/// malformed input text, non-member graphs passed to member-only operations.
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string &what) : std::invalid_argument(what) {}
};

/// Raised when a search or enumeration would exceed its desk-scale contract.
class ScaleError : public std::length_error {
public:
  explicit ScaleError(const std::string &what) : std::length_error(what) {}
};

} // namespace t2sum
