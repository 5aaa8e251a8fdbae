#pragma once

#include <cstdint>
#include <string>

#include "sl2coh/checked.hpp"

namespace sl2coh {

/// Exact rational num/den with den > 0 and gcd(num, den) = 1.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw Error("zero denominator");
    normalize();
  }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  friend Rational operator+(Rational const& x, Rational const& y) {
    auto const g = gcd(x.den_, y.den_);
    auto const l = checked_mul(x.den_ / g, y.den_);
    return Rational(checked_add(checked_mul(x.num_, l / x.den_),
                                checked_mul(y.num_, l / y.den_)),
                    l);
  }
  friend Rational operator-(Rational const& x) { return Rational(checked_neg(x.num_), x.den_); }
  friend Rational operator-(Rational const& x, Rational const& y) { return x + (-y); }
  Rational& operator+=(Rational const& o) { return *this = *this + o; }
  Rational& operator-=(Rational const& o) { return *this = *this - o; }

  friend bool operator==(Rational const&, Rational const&) = default;

  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = checked_neg(num_);
      den_ = checked_neg(den_);
    }
    auto const g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace sl2coh
