#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kintree {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text. position() is the zero-based offset of the offending character.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Well-formed text or data that violates a structural constraint.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Operation applied outside its domain (a sentinel, the root, an empty interval, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A configured size bound would be exceeded.
class ResourceError : public Error {
public:
  using Error::Error;
};

}  // namespace kintree
