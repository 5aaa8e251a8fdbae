#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>

#include "sl2coh/errors.hpp"

namespace sl2coh {

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw OverflowDetected("integer overflow in " + std::to_string(x) + " * " +
                           std::to_string(y));
  }
  return r;
}

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(x, y, &r)) {
    throw OverflowDetected("integer overflow in " + std::to_string(x) + " + " +
                           std::to_string(y));
  }
  return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(x, y, &r)) {
    throw OverflowDetected("integer overflow in " + std::to_string(x) + " - " +
                           std::to_string(y));
  }
  return r;
}

inline std::int64_t checked_neg(std::int64_t x) { return checked_sub(0, x); }

/// Euclid on magnitudes; result is nonnegative.
inline std::int64_t gcd(std::int64_t x, std::int64_t y) {
  if (x == std::numeric_limits<std::int64_t>::min() ||
      y == std::numeric_limits<std::int64_t>::min()) {
    throw OverflowDetected("gcd of INT64_MIN");
  }
  x = x < 0 ? -x : x;
  y = y < 0 ? -y : y;
  while (y != 0) {
    auto t = x % y;
    x = y;
    y = t;
  }
  return x;
}

/// A positive integer stored as its prime factorization, so that orders
/// like 2^N(p) * 144 stay exact for large p.
class FactoredInt {
 public:
  FactoredInt() = default;

  /// n >= 1
  explicit FactoredInt(std::int64_t n) {
    if (n < 1) {
      throw Error("FactoredInt needs a positive value, got " + std::to_string(n));
    }
    for (std::int64_t q = 2; q <= n / q; ++q) {
      while (n % q == 0) {
        ++exponents_[q];
        n /= q;
      }
    }
    if (n > 1) ++exponents_[n];
  }

  static FactoredInt prime_power(std::int64_t q, std::int64_t e) {
    FactoredInt r;
    if (e > 0) r.exponents_[q] = e;
    return r;
  }

  FactoredInt& operator*=(FactoredInt const& o) {
    for (auto const& [q, e] : o.exponents_) exponents_[q] += e;
    return *this;
  }

  friend FactoredInt operator*(FactoredInt x, FactoredInt const& y) {
    x *= y;
    return x;
  }

  friend bool operator==(FactoredInt const&, FactoredInt const&) = default;

  std::map<std::int64_t, std::int64_t> const& exponents() const noexcept {
    return exponents_;
  }

  /// Decimal when the value fits in 64 bits, otherwise "2^85 * 3^2".
  std::string to_string() const {
    unsigned __int128 v = 1;
    bool fits = true;
    for (auto const& [q, e] : exponents_) {
      for (std::int64_t i = 0; i < e && fits; ++i) {
        v *= static_cast<unsigned __int128>(q);
        if (v > std::numeric_limits<std::uint64_t>::max()) fits = false;
      }
    }
    if (fits) return std::to_string(static_cast<std::uint64_t>(v));
    std::string s;
    for (auto const& [q, e] : exponents_) {
      if (!s.empty()) s += " * ";
      s += std::to_string(q);
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  std::map<std::int64_t, std::int64_t> exponents_;
};

}  // namespace sl2coh
