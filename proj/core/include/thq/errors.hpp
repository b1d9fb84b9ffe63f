#pragma once

#include <stdexcept>
#include <string>

namespace thq {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed API usage: dimension mismatches, out-of-range indices, bad sizes.
struct UsageError : Error {
  using Error::Error;
};

// Input document could not be parsed (bad JSON, wrong keys, non-integers).
struct ParseError : Error {
  using Error::Error;
};

// An enumeration exceeded its safety cap. The cap is an abort valve, not a
// tuning knob: hitting it means the instance is out of the supported range.
struct CapExceededError : Error {
  CapExceededError(const std::string& what, int cap_) : Error(what), cap(cap_) {}
  int cap;
};

// A support pattern admits no point on the zero locus of the moment map.
struct UnrealizablePatternError : Error {
  using Error::Error;
};

// A pattern handed to a fiber-restricted query cannot occur on that fiber.
struct InconsistentPatternError : Error {
  using Error::Error;
};

}  // namespace thq
