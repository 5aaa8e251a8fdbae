#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sl2coh {

// Base class for every error raised by the library. The CLI maps these to
// exit code 2 (bad input) unless noted otherwise.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPrime : public Error {
 public:
  explicit NotPrime(std::int64_t n)
      : Error(std::to_string(n) + " is not prime"), value(n) {}
  std::int64_t value;
};

class UnsupportedPrime : public Error {
 public:
  UnsupportedPrime(std::int64_t p, std::string const& why)
      : Error("unsupported prime p = " + std::to_string(p) + ": " + why),
        value(p) {}
  std::int64_t value;
};

class BoundExceeded : public Error {
 public:
  BoundExceeded(std::int64_t p, std::int64_t bound)
      : Error("p = " + std::to_string(p) + " exceeds the enumeration bound " +
              std::to_string(bound)),
        value(p),
        bound(bound) {}
  std::int64_t value;
  std::int64_t bound;
};

class DegenerateGenerators : public Error {
 public:
  using Error::Error;
};

class InvalidOrder : public Error {
 public:
  explicit InvalidOrder(std::int64_t d)
      : Error("cyclic order must be >= 2, got " + std::to_string(d)) {}
};

class OverflowDetected : public Error {
 public:
  using Error::Error;
};

}  // namespace sl2coh
