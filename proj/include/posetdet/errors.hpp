#pragma once

#include <stdexcept>
#include <string>

namespace posetdet {

/// Raised for malformed or out-of-contract caller input.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a pair of elements has no unique greatest lower bound.
class NotAMeetError : public InputError {
 public:
  explicit NotAMeetError(const std::string& what) : InputError(what) {}
};

/// Raised when a library invariant breaks (e.g. an inexact Bareiss division).
/// Seeing one of these means a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace posetdet
