#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pistruct {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is a 0-based character offset for
/// cycle notation and a 1-based line number for group spec files.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An enumeration or search cap was exceeded. Callers abstain on this error;
/// it is never evidence for or against a statement.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Arguments violate an operation's precondition (degree mismatch, a
/// subgroup that is not normal, a pair of subgroups that is not a product...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace pistruct
