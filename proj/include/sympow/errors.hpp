#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sympow {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated an operation's precondition (ring mismatch, bad argument).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Polynomial or ring text could not be parsed. `position()` is a byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A configurable resource cap was hit; `cap()` names it.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string cap, const std::string& detail)
      : Error("capped computation: " + cap + " exceeded (" + detail + ")"), cap_(std::move(cap)) {}
  const std::string& cap() const { return cap_; }

 private:
  std::string cap_;
};

/// The ideal contains 1 where a proper ideal is required.
class NotProper : public Error {
 public:
  using Error::Error;
};

/// Two computation routes disagreed, or a guaranteed-terminating loop did not.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sympow
