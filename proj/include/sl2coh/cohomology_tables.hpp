#pragma once

// Closed-form integral cohomology of SL2(Z), Gamma0(p), PGamma0(p) and
// SL2(Z[1/p]), the constants N(p), Q(p), A(p), and the orbit-counting
// oracles that reproduce N(p) and the PGamma0(p) table from SL2(F_p).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sl2coh/abelian.hpp"
#include "sl2coh/coset_engine.hpp"
#include "sl2coh/errors.hpp"
#include "sl2coh/fp_core.hpp"

namespace sl2coh {

/// p mod 12 for p > 3, with separate tags for 2 and 3.
enum class ResidueClass { One, Five, Seven, Eleven, Two, Three };

inline ResidueClass residue_class(Prime p) {
  switch (p.value()) {
    case 2: return ResidueClass::Two;
    case 3: return ResidueClass::Three;
    default: break;
  }
  switch (p.value() % 12) {
    case 1: return ResidueClass::One;
    case 5: return ResidueClass::Five;
    case 7: return ResidueClass::Seven;
    default: return ResidueClass::Eleven;
  }
}

inline char const* to_string(ResidueClass r) {
  switch (r) {
    case ResidueClass::One: return "1 mod 12";
    case ResidueClass::Five: return "5 mod 12";
    case ResidueClass::Seven: return "7 mod 12";
    case ResidueClass::Eleven: return "11 mod 12";
    case ResidueClass::Two: return "p = 2";
    case ResidueClass::Three: return "p = 3";
  }
  return "?";
}

enum class Family { SL2Z, Gamma0, PGamma0, SL2Zp };

inline char const* to_string(Family f) {
  switch (f) {
    case Family::SL2Z: return "sl2z";
    case Family::Gamma0: return "gamma0";
    case Family::PGamma0: return "pgamma0";
    case Family::SL2Zp: return "sl2zp";
  }
  return "?";
}

/// Human-readable group name, e.g. "SL2(Z[1/13])".
inline std::string display_name(Family f, std::optional<Prime> p) {
  auto const ps = p ? std::to_string(p->value()) : std::string("p");
  switch (f) {
    case Family::SL2Z: return "SL2(Z)";
    case Family::Gamma0: return "Gamma0(" + ps + ")";
    case Family::PGamma0: return "PGamma0(" + ps + ")";
    case Family::SL2Zp: return "SL2(Z[1/" + ps + "])";
  }
  return "?";
}

/// H^d(group; Z) for d = 0..max_degree. Entries at d and d + 2 agree for
/// every d > periodic_above.
struct CohomologyTable {
  Family group;
  std::optional<Prime> p;
  std::vector<FinAbGroup> entries;
  int periodic_above = 0;

  int max_degree() const noexcept { return static_cast<int>(entries.size()) - 1; }
  FinAbGroup const& at(int degree) const { return entries.at(static_cast<std::size_t>(degree)); }

  bool respects_period() const {
    for (int d = periodic_above + 1; d + 2 <= max_degree(); ++d) {
      if (at(d) != at(d + 2)) return false;
    }
    return true;
  }
};

/// Largest elementary abelian summand a table will materialize.
inline constexpr std::int64_t kMaxTableRank = std::int64_t{1} << 20;

namespace detail {

inline FinAbGroup z_mod(std::int64_t n) { return FinAbGroup::cyclic(n); }

inline FinAbGroup elementary(std::int64_t q, std::int64_t rank) {
  if (rank > kMaxTableRank) {
    throw Error("table entry would hold " + std::to_string(rank) +
                " cyclic summands, more than the 2^20 limit");
  }
  return canonicalize(0, std::vector<std::int64_t>(static_cast<std::size_t>(rank), q));
}

inline void require_degree(int degree) {
  if (degree < 0) throw Error("negative degree " + std::to_string(degree));
}

template <typename Entry>
CohomologyTable tabulate(Family f, std::optional<Prime> p, int max_degree,
                         int periodic_above, Entry&& entry) {
  require_degree(max_degree);
  CohomologyTable t{f, p, {}, periodic_above};
  t.entries.reserve(static_cast<std::size_t>(max_degree) + 1);
  for (int d = 0; d <= max_degree; ++d) t.entries.push_back(entry(d));
  return t;
}

}  // namespace detail

/// Rank of H^1(Gamma0(p); Z), p > 3.
inline std::int64_t n_of_p(Prime p) {
  require_above_three(p, "N(p) is defined for p > 3");
  auto const q = p.value();
  switch (residue_class(p)) {
    case ResidueClass::One: return (q - 7) / 6;
    case ResidueClass::Five: return (q + 1) / 6;
    case ResidueClass::Seven: return (q - 1) / 6;
    default: return (q + 7) / 6;
  }
}

/// N(p) = n2 - n4 - n6 + 1: invariants of C^1 minus invariants of C^0, plus
/// the H^0 term.
inline std::int64_t n_of_p_oracle(OrbitCounts const& c) {
  return static_cast<std::int64_t>(c.n2) - static_cast<std::int64_t>(c.n4) -
         static_cast<std::int64_t>(c.n6) + 1;
}

inline std::int64_t n_of_p_oracle(Prime p, std::int64_t bound = kDefaultBound) {
  return n_of_p_oracle(orbit_counts(p, bound));
}

/// Every vertex orbit with stabilizer of order s contributes Z/(s/2).
inline FinAbGroup pgamma0_even_oracle(OrbitDecomposition const& on_c4,
                                      OrbitDecomposition const& on_c6) {
  std::vector<std::int64_t> orders;
  for (auto const* dec : {&on_c4, &on_c6}) {
    for (auto const& o : dec->orbits) {
      auto const s = static_cast<std::int64_t>(o.stabilizer_order) / 2;
      if (s > 1) orders.push_back(s);
    }
  }
  return canonicalize(0, orders);
}

inline FinAbGroup pgamma0_even_oracle(Prime p, std::int64_t bound = kDefaultBound) {
  require_above_three(p, "the vertex orbits are built for p > 3");
  return pgamma0_even_oracle(decompose_under_B(p, 4, bound), decompose_under_B(p, 6, bound));
}

/// H^d(SL2(Z); Z): Z, then Z/12 in even and 0 in odd degrees.
inline FinAbGroup sl2z_entry(int degree) {
  detail::require_degree(degree);
  if (degree == 0) return FinAbGroup::free(1);
  return degree % 2 == 0 ? detail::z_mod(12) : FinAbGroup{};
}

inline CohomologyTable sl2z_table(int max_degree) {
  return detail::tabulate(Family::SL2Z, std::nullopt, max_degree, 0, sl2z_entry);
}

/// H^d(PGamma0(p); Z) for p > 3 and for p = 2. p = 3 throws.
inline FinAbGroup pgamma0_entry(Prime p, int degree) {
  if (p.value() == 3) throw UnsupportedPrime(3, "no PGamma0(3) table");
  detail::require_degree(degree);
  if (degree == 0) return FinAbGroup::free(1);
  if (p.value() == 2) {
    if (degree == 1) return FinAbGroup::free(1);
    return degree % 2 == 0 ? detail::z_mod(2) : FinAbGroup{};
  }
  if (degree == 1) return FinAbGroup::free(n_of_p(p));
  if (degree % 2 == 1) return {};
  switch (residue_class(p)) {
    case ResidueClass::One: return canonicalize(0, {6, 6});
    case ResidueClass::Five: return canonicalize(0, {2, 2});
    case ResidueClass::Seven: return canonicalize(0, {3, 3});
    default: return {};
  }
}

inline CohomologyTable pgamma0_table(Prime p, int max_degree) {
  return detail::tabulate(Family::PGamma0, p, max_degree, 1,
                          [p](int d) { return pgamma0_entry(p, d); });
}

/// H^d(Gamma0(p); Z) for every prime p.
inline FinAbGroup gamma0_entry(Prime p, int degree) {
  detail::require_degree(degree);
  if (degree == 0) return FinAbGroup::free(1);
  switch (residue_class(p)) {
    case ResidueClass::Two:
      if (degree == 1) return FinAbGroup::free(1);
      return degree % 2 == 0 ? detail::z_mod(4) : detail::z_mod(2);
    case ResidueClass::Three:
      if (degree == 1) return FinAbGroup::free(1);
      return degree % 2 == 0 ? detail::z_mod(6) : detail::z_mod(2);
    default:
      break;
  }
  auto const n = n_of_p(p);
  if (degree == 1) return FinAbGroup::free(n);
  if (degree % 2 == 1) return detail::elementary(2, n);
  switch (residue_class(p)) {
    case ResidueClass::One: return canonicalize(0, {12, 6});
    case ResidueClass::Five: return canonicalize(0, {4, 2});
    case ResidueClass::Seven: return canonicalize(0, {3, 6});
    default: return detail::z_mod(2);
  }
}

inline CohomologyTable gamma0_table(Prime p, int max_degree) {
  return detail::tabulate(Family::Gamma0, p, max_degree, 1,
                          [p](int d) { return gamma0_entry(p, d); });
}

/// H_1(SL2(Z[1/p]); Z). A homology group, kept out of every table.
inline FinAbGroup h1_sl2zp(Prime p) {
  switch (p.value()) {
    case 2: return detail::z_mod(3);
    case 3: return detail::z_mod(4);
    default: return detail::z_mod(12);
  }
}

struct DerivedConstants {
  std::int64_t n = 0;  // N(p)
  std::int64_t q = 0;  // |Q(p)|, the largest cyclic subgroup of H^2(Gamma0(p))
  std::int64_t a = 0;  // A(p) = 12 / |Q(p)|
};

inline DerivedConstants q_and_a(Prime p) {
  require_above_three(p, "Q(p) and A(p) are defined for p > 3");
  std::int64_t q = 0;
  switch (residue_class(p)) {
    case ResidueClass::One: q = 12; break;
    case ResidueClass::Five: q = 4; break;
    case ResidueClass::Seven: q = 6; break;
    default: q = 2; break;
  }
  return {n_of_p(p), q, 12 / q};
}

/// H^d(SL2(Z[1/p]); Z) for every prime p.
inline FinAbGroup sl2zp_entry(Prime p, int degree) {
  detail::require_degree(degree);
  if (degree == 0) return FinAbGroup::free(1);
  if (degree == 1) return {};
  auto const q = p.value();
  switch (residue_class(p)) {
    case ResidueClass::Two:
      if (degree % 2 == 1) return {};
      return degree == 2 ? canonicalize(1, {3}) : canonicalize(0, {24, 3});
    case ResidueClass::Three:
      if (degree % 2 == 1) return {};
      return degree == 2 ? canonicalize(1, {4}) : canonicalize(0, {12, 4});
    default:
      break;
  }
  if (degree == 2) return FinAbGroup::free(n_of_p(p)) + detail::z_mod(12);
  if (degree % 2 == 1) {
    switch (residue_class(p)) {
      case ResidueClass::One: return detail::z_mod(6);
      case ResidueClass::Five: return detail::z_mod(2);
      case ResidueClass::Seven: return detail::z_mod(3);
      default: return {};
    }
  }
  switch (residue_class(p)) {
    case ResidueClass::One:
      return detail::elementary(2, (q - 7) / 6) + detail::z_mod(12);
    case ResidueClass::Five:
      return detail::elementary(2, (q + 1) / 6) + canonicalize(0, {12, 3});
    case ResidueClass::Seven:
      return detail::elementary(2, (q - 7) / 6) + canonicalize(0, {12, 4});
    default:
      return detail::elementary(2, (q + 1) / 6) + canonicalize(0, {12, 12});
  }
}

inline CohomologyTable sl2zp_table(Prime p, int max_degree) {
  return detail::tabulate(Family::SL2Zp, p, max_degree, 2,
                          [p](int d) { return sl2zp_entry(p, d); });
}

/// Dispatch by family; p is ignored for SL2(Z) and required otherwise.
inline CohomologyTable cohomology_table(Family f, std::optional<Prime> p, int max_degree) {
  if (f == Family::SL2Z) return sl2z_table(max_degree);
  if (!p) throw Error(std::string(to_string(f)) + " needs a prime");
  switch (f) {
    case Family::Gamma0: return gamma0_table(*p, max_degree);
    case Family::PGamma0: return pgamma0_table(*p, max_degree);
    default: return sl2zp_table(*p, max_degree);
  }
}

struct MvOrderReport {
  bool pass = false;
  int degree = 0;
  FactoredInt lhs;  // |H^2i(SL2(Z[1/p]))| * |H^2i(Gamma0(p))|
  FactoredInt rhs;  // 2^N(p) * 144 * |H^2i+1(SL2(Z[1/p]))|
  FinAbGroup quotient;   // H^2i(Gamma0(p)) / Q(p)
  FinAbGroup odd_entry;  // H^2i+1(SL2(Z[1/p]))

  std::string detail() const {
    return "degree " + std::to_string(degree) + ": " + lhs.to_string() +
           (lhs == rhs ? " = " : " != ") + rhs.to_string() + "; H^" +
           std::to_string(degree) + "(Gamma0)/Q = " + quotient.to_string() + " vs H^" +
           std::to_string(degree + 1) + " = " + odd_entry.to_string();
  }
};

/// Alternating-order identity of the five-term sequence
///   0 -> (Z/2)^N -> H^2i(SL2(Z[1/p])) -> Z/12 + Z/12 -> H^2i(Gamma0(p))
///     -> H^2i+1(SL2(Z[1/p])) -> 0
/// and the quotient identity H^2i+1(SL2(Z[1/p])) = H^2i(Gamma0(p)) / Q(p).
/// degree is the even degree 2i >= 4.
inline MvOrderReport mv_order_check(Prime p, int degree) {
  require_above_three(p, "the Mayer-Vietoris check is stated for p > 3");
  if (degree < 4 || degree % 2 != 0) {
    throw Error("mv_order_check needs an even degree >= 4, got " + std::to_string(degree));
  }
  auto const k = q_and_a(p);
  auto const even_sl = sl2zp_entry(p, degree);
  auto const even_g0 = gamma0_entry(p, degree);

  MvOrderReport r;
  r.degree = degree;
  r.odd_entry = sl2zp_entry(p, degree + 1);
  r.lhs = *factored_order(even_sl) * *factored_order(even_g0);
  r.rhs = FactoredInt::prime_power(2, k.n) * FactoredInt(144) * *factored_order(r.odd_entry);
  r.quotient = quotient_by_largest_cyclic(even_g0, k.q);
  r.pass = r.lhs == r.rhs && r.quotient == r.odd_entry;
  return r;
}

}  // namespace sl2coh
