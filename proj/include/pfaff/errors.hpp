#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pfaff {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operands belong to different rings (or carry different term orders).
class RingMismatchError : public Error {
  public:
    explicit RingMismatchError(const std::string& what) : Error(what) {}
};

// Text input rejected; `position` is a 0-based byte offset into the input.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at offset " + std::to_string(position) + ")"), position(position) {}

    std::size_t position;
};

// A monomial exponent crossed the ring's hard ceiling.
class DegreeLimitError : public Error {
  public:
    explicit DegreeLimitError(const std::string& what) : Error(what) {}
};

// A configurable resource ceiling (basis size, pair count, degree, ...) was hit.
class ResourceLimitError : public Error {
  public:
    explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

// Violated internal invariant; indicates a bug, not bad input.
class InternalError : public Error {
  public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

} // namespace pfaff
