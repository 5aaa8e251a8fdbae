#pragma once

// Arithmetic in F_p and enumeration of SL2(F_p) together with the Borel
// subgroup B (lower-left entry zero) and the cyclic subgroups C2, C4, C6.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sl2coh/errors.hpp"

namespace sl2coh {

/// Default cap on p for anything that enumerates SL2(F_p). |G| is about
/// 1.03e6 at p = 101.
inline constexpr std::int64_t kDefaultBound = 101;

/// Upper limit for closed-form evaluation; keeps N(p) and friends well
/// inside 64-bit arithmetic.
inline constexpr std::int64_t kMaxPrime = std::int64_t{1} << 62;

class Prime {
 public:
  /// Validates by trial division; throws NotPrime.
  static Prime make(std::int64_t n) {
    if (n < 2 || n > kMaxPrime) {
      throw NotPrime(n);
    }
    for (std::int64_t q = 2; q <= n / q; ++q) {
      if (n % q == 0) {
        throw NotPrime(n);
      }
    }
    return Prime(n);
  }

  constexpr std::int64_t value() const noexcept { return value_; }
  constexpr operator std::int64_t() const noexcept { return value_; }

  friend constexpr bool operator==(Prime, Prime) = default;

 private:
  constexpr explicit Prime(std::int64_t p) : value_(p) {}
  std::int64_t value_;
};

inline Prime make_prime(std::int64_t n) { return Prime::make(n); }

/// Throws BoundExceeded when p is too large to enumerate.
inline void require_within_bound(Prime p, std::int64_t bound) {
  if (p.value() > bound) {
    throw BoundExceeded(p.value(), bound);
  }
}

inline void require_above_three(Prime p, char const* what) {
  if (p.value() <= 3) {
    throw UnsupportedPrime(p.value(), what);
  }
}

namespace fp {

using residue = std::uint32_t;

inline constexpr residue reduce(std::int64_t x, std::int64_t p) noexcept {
  auto r = x % p;
  return static_cast<residue>(r < 0 ? r + p : r);
}

inline constexpr residue mul(residue x, residue y, residue p) noexcept {
  return static_cast<residue>(std::uint64_t{x} * y % p);
}

inline constexpr residue add(residue x, residue y, residue p) noexcept {
  return static_cast<residue>((std::uint64_t{x} + y) % p);
}

inline constexpr residue neg(residue x, residue p) noexcept {
  return x == 0 ? 0 : p - x;
}

/// Inverse of a nonzero residue via the extended Euclidean algorithm.
inline constexpr residue inv(residue x, residue p) noexcept {
  std::int64_t r0 = p, r1 = x, s0 = 0, s1 = 1;
  while (r1 != 0) {
    auto q = r0 / r1;
    auto t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return reduce(s0, p);
}

inline constexpr residue pow(residue x, std::uint64_t e, residue p) noexcept {
  residue acc = 1 % p;
  while (e != 0) {
    if (e & 1U) acc = mul(acc, x, p);
    x = mul(x, x, p);
    e >>= 1U;
  }
  return acc;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= n / q; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Least generator of F_p^*.
inline residue least_primitive_root(residue p) {
  if (p == 2) return 1;
  auto const factors = prime_factors(p - 1);
  for (residue g = 2; g < p; ++g) {
    bool ok = std::all_of(factors.begin(), factors.end(), [&](auto q) {
      return pow(g, (p - 1) / q, p) != 1;
    });
    if (ok) return g;
  }
  return 1;  // unreachable for prime p
}

}  // namespace fp

/// 2x2 matrix over F_p with determinant 1. Entries are kept as least
/// nonnegative residues; comparison is lexicographic on (a, b, c, d).
struct FpMat {
  fp::residue a = 1, b = 0, c = 0, d = 1;
  fp::residue p = 2;

  static constexpr FpMat identity(fp::residue p) noexcept {
    return FpMat{1, 0, 0, 1 % p, p};
  }

  /// Reduces the entries and checks ad - bc = 1.
  static FpMat make(std::int64_t a, std::int64_t b, std::int64_t c,
                    std::int64_t d, Prime p) {
    if (p.value() > std::int64_t{0xFFFFFFFF}) {
      throw UnsupportedPrime(p.value(), "matrix arithmetic needs p < 2^32");
    }
    auto const q = p.value();
    FpMat m{fp::reduce(a, q), fp::reduce(b, q), fp::reduce(c, q),
            fp::reduce(d, q), static_cast<fp::residue>(q)};
    if (m.det() != 1 % m.p) {
      throw Error("matrix does not have determinant 1 mod " +
                  std::to_string(q));
    }
    return m;
  }

  constexpr fp::residue det() const noexcept {
    return fp::add(fp::mul(a, d, p), fp::neg(fp::mul(b, c, p), p), p);
  }

  constexpr FpMat inverse() const noexcept {
    return FpMat{d, fp::neg(b, p), fp::neg(c, p), a, p};
  }

  constexpr bool is_identity() const noexcept {
    return a == 1 % p && b == 0 && c == 0 && d == 1 % p;
  }

  /// Injective key, monotone in the lexicographic order.
  constexpr std::uint64_t key() const noexcept {
    std::uint64_t const q = p;
    return ((std::uint64_t{a} * q + b) * q + c) * q + d;
  }

  friend constexpr FpMat operator*(FpMat const& x, FpMat const& y) noexcept {
    auto const p = x.p;
    return FpMat{fp::add(fp::mul(x.a, y.a, p), fp::mul(x.b, y.c, p), p),
                 fp::add(fp::mul(x.a, y.b, p), fp::mul(x.b, y.d, p), p),
                 fp::add(fp::mul(x.c, y.a, p), fp::mul(x.d, y.c, p), p),
                 fp::add(fp::mul(x.c, y.b, p), fp::mul(x.d, y.d, p), p), p};
  }

  friend constexpr bool operator==(FpMat const&, FpMat const&) = default;
  friend constexpr auto operator<=>(FpMat const&, FpMat const&) = default;

  std::string to_string() const {
    return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
           std::to_string(c) + "," + std::to_string(d) + "]]";
  }
};

/// Order of m by repeated multiplication.
inline std::uint64_t element_order(FpMat const& m) {
  std::uint64_t n = 1;
  for (FpMat x = m; !x.is_identity(); x = x * m) ++n;
  return n;
}

/// Lower unitriangular [[1,0],[x,1]].
inline FpMat lower_unipotent(fp::residue x, fp::residue p) {
  return FpMat{1 % p, 0, x % p, 1 % p, p};
}

struct StandardGenerators {
  FpMat a2;
  FpMat a4;
  FpMat a6;
};

/// a2 = -I, a4 = [[0,-1],[1,0]], a6 = [[0,-1],[1,1]]. Throws
/// DegenerateGenerators when the element orders are not 2, 4, 6 (p = 2).
inline StandardGenerators standard_generators(Prime p) {
  StandardGenerators g{FpMat::make(-1, 0, 0, -1, p), FpMat::make(0, -1, 1, 0, p),
                       FpMat::make(0, -1, 1, 1, p)};
  auto const o2 = element_order(g.a2);
  auto const o4 = element_order(g.a4);
  auto const o6 = element_order(g.a6);
  if (o2 != 2 || o4 != 4 || o6 != 6) {
    throw DegenerateGenerators(
        "standard generators have orders (" + std::to_string(o2) + ", " +
        std::to_string(o4) + ", " + std::to_string(o6) + ") at p = " +
        std::to_string(p.value()) + ", expected (2, 4, 6)");
  }
  return g;
}

enum class GroupTag { G, B, C2, C4, C6 };

inline char const* to_string(GroupTag t) {
  switch (t) {
    case GroupTag::G: return "G";
    case GroupTag::B: return "B";
    case GroupTag::C2: return "C2";
    case GroupTag::C4: return "C4";
    case GroupTag::C6: return "C6";
  }
  return "?";
}

struct SubgroupSpec {
  GroupTag tag;
  std::vector<FpMat> generators;
};

/// Generators used throughout: B = <[[1,1],[0,1]], diag(g, 1/g)> with g the
/// least primitive root; Ck = <ak>.
inline SubgroupSpec subgroup_spec(Prime p, GroupTag tag) {
  auto const q = static_cast<fp::residue>(p.value());
  switch (tag) {
    case GroupTag::B: {
      auto const g = fp::least_primitive_root(q);
      return {tag, {FpMat{1, 1 % q, 0, 1, q}, FpMat{g, 0, 0, fp::inv(g, q), q}}};
    }
    case GroupTag::C2:
      return {tag, {FpMat::make(-1, 0, 0, -1, p)}};
    case GroupTag::C4:
      return {tag, {FpMat::make(0, -1, 1, 0, p)}};
    case GroupTag::C6:
      return {tag, {FpMat::make(0, -1, 1, 1, p)}};
    case GroupTag::G:
      break;
  }
  throw Error("G has no subgroup spec");
}

inline std::uint64_t group_order(Prime p) {
  auto const q = static_cast<std::uint64_t>(p.value());
  return q * (q * q - 1);
}

inline std::uint64_t borel_order(Prime p) {
  auto const q = static_cast<std::uint64_t>(p.value());
  return q * (q - 1);
}

/// Calls f(m) for every element of SL2(F_p) in lexicographic order.
template <typename F>
void for_each_element(Prime p, F&& f) {
  auto const q = static_cast<fp::residue>(p.value());
  for (fp::residue a = 0; a < q; ++a) {
    if (a == 0) {
      // -bc = 1 forces b != 0, c = -1/b, d free
      for (fp::residue b = 1; b < q; ++b) {
        auto const c = fp::neg(fp::inv(b, q), q);
        for (fp::residue d = 0; d < q; ++d) f(FpMat{0, b, c, d, q});
      }
      continue;
    }
    auto const ainv = fp::inv(a, q);
    for (fp::residue b = 0; b < q; ++b) {
      for (fp::residue c = 0; c < q; ++c) {
        auto const d = fp::mul(fp::add(1, fp::mul(b, c, q), q), ainv, q);
        f(FpMat{a, b, c, d, q});
      }
    }
  }
}

/// Cyclic closure of a single element, sorted.
inline std::vector<FpMat> cyclic_closure(FpMat const& g) {
  std::vector<FpMat> out{FpMat::identity(g.p)};
  for (FpMat x = g; !x.is_identity(); x = x * g) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

/// All elements of the requested group, each exactly once, sorted.
inline std::vector<FpMat> enumerate_group(Prime p, GroupTag tag,
                                          std::int64_t bound = kDefaultBound) {
  require_within_bound(p, bound);
  auto const q = static_cast<fp::residue>(p.value());
  std::vector<FpMat> out;
  switch (tag) {
    case GroupTag::G:
      out.reserve(group_order(p));
      for_each_element(p, [&](FpMat const& m) { out.push_back(m); });
      break;
    case GroupTag::B:
      out.reserve(borel_order(p));
      for (fp::residue a = 1; a < q; ++a) {
        auto const d = fp::inv(a, q);
        for (fp::residue b = 0; b < q; ++b) out.push_back(FpMat{a, b, 0, d, q});
      }
      break;
    default:
      out = cyclic_closure(subgroup_spec(p, tag).generators.front());
      break;
  }
  return out;
}

enum class Poly { TSquaredPlusOne, TSquaredMinusTPlusOne };

inline char const* to_string(Poly f) {
  return f == Poly::TSquaredPlusOne ? "T^2+1" : "T^2-T+1";
}

inline std::uint64_t evaluate(Poly f, std::uint64_t t, std::uint64_t p) {
  auto const t2 = t * t % p;
  return f == Poly::TSquaredPlusOne ? (t2 + 1) % p : (t2 + p - t + 1) % p;
}

/// All roots in F_p, ascending, by exhaustive scan. Requires p > 3.
inline std::vector<fp::residue> roots_mod_p(Poly f, Prime p) {
  require_above_three(p, "root conditions are stated for p > 3");
  auto const q = static_cast<std::uint64_t>(p.value());
  std::vector<fp::residue> out;
  for (std::uint64_t t = 0; t < q; ++t) {
    if (evaluate(f, t, q) == 0) out.push_back(static_cast<fp::residue>(t));
  }
  return out;
}

}  // namespace sl2coh
