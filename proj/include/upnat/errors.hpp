#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace upnat {

/// Base class for the library's own failure modes. Malformed arguments use
/// std::invalid_argument / std::domain_error directly.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A literal could not be parsed; `position` is a 0-based byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Lattice generation exceeded the configured member cap.
class CapacityError : public Error {
 public:
  CapacityError(std::size_t cap)
      : Error("lattice exceeds member cap of " + std::to_string(cap)),
        cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// The operation is not defined for this kind of function (e.g. tables).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// The requested set has no lattice expression over the given seed.
class ExpressibilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace upnat
