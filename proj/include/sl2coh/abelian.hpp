#pragma once

// Finitely generated abelian groups in invariant-factor form, and Smith
// normal form over the integers.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "sl2coh/checked.hpp"
#include "sl2coh/errors.hpp"

namespace sl2coh {

/// Z^r + Z/d1 + ... + Z/dm with d1 | d2 | ... | dm and every di >= 2. The
/// representation is unique, so == is isomorphism.
class FinAbGroup {
 public:
  FinAbGroup() = default;

  static FinAbGroup free(std::int64_t rank);
  static FinAbGroup cyclic(std::int64_t n);

  std::int64_t free_rank() const noexcept { return free_rank_; }
  std::vector<std::int64_t> const& invariant_factors() const noexcept {
    return factors_;
  }

  bool is_trivial() const noexcept { return free_rank_ == 0 && factors_.empty(); }
  bool is_finite() const noexcept { return free_rank_ == 0; }

  friend bool operator==(FinAbGroup const&, FinAbGroup const&) = default;

  /// "0", "Z", "Z^3 + Z/2 + Z/12"
  std::string to_string() const;

 private:
  friend FinAbGroup canonicalize(std::int64_t, std::vector<std::int64_t> const&);
  std::int64_t free_rank_ = 0;
  std::vector<std::int64_t> factors_;
};

namespace detail {

inline std::vector<std::pair<std::int64_t, std::int64_t>> factor(std::int64_t n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t q = 2; q <= n / q; ++q) {
    if (n % q != 0) continue;
    std::int64_t e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    out.emplace_back(q, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::int64_t ipow(std::int64_t q, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) r = checked_mul(r, q);
  return r;
}

}  // namespace detail

/// Splits each order into prime powers and regroups them into the
/// invariant-factor chain. Throws InvalidOrder for orders below 2.
inline FinAbGroup canonicalize(std::int64_t free_rank,
                               std::vector<std::int64_t> const& cyclic_orders) {
  if (free_rank < 0) {
    throw Error("free rank must be nonnegative, got " + std::to_string(free_rank));
  }
  // prime -> exponents of its prime-power summands
  std::map<std::int64_t, std::vector<std::int64_t>> primary;
  for (auto d : cyclic_orders) {
    if (d < 2) throw InvalidOrder(d);
    for (auto [q, e] : detail::factor(d)) primary[q].push_back(e);
  }
  std::size_t length = 0;
  for (auto& [q, exps] : primary) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    length = std::max(length, exps.size());
  }
  // factors_[length - 1 - j] collects the j-th largest power of every prime
  std::vector<std::int64_t> factors(length, 1);
  for (auto const& [q, exps] : primary) {
    for (std::size_t j = 0; j < exps.size(); ++j) {
      auto& slot = factors[length - 1 - j];
      slot = checked_mul(slot, detail::ipow(q, exps[j]));
    }
  }
  FinAbGroup g;
  g.free_rank_ = free_rank;
  g.factors_ = std::move(factors);
  return g;
}

inline FinAbGroup FinAbGroup::free(std::int64_t rank) { return canonicalize(rank, {}); }

inline FinAbGroup FinAbGroup::cyclic(std::int64_t n) {
  if (n == 1) return FinAbGroup{};
  return canonicalize(0, {n});
}

inline std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string s;
  if (free_rank_ == 1) {
    s = "Z";
  } else if (free_rank_ > 1) {
    s = "Z^" + std::to_string(free_rank_);
  }
  for (auto d : factors_) {
    if (!s.empty()) s += " + ";
    s += "Z/" + std::to_string(d);
  }
  return s;
}

inline FinAbGroup direct_sum(FinAbGroup const& a, FinAbGroup const& b) {
  std::vector<std::int64_t> orders = a.invariant_factors();
  orders.insert(orders.end(), b.invariant_factors().begin(),
                b.invariant_factors().end());
  return canonicalize(checked_add(a.free_rank(), b.free_rank()), orders);
}

inline FinAbGroup operator+(FinAbGroup const& a, FinAbGroup const& b) {
  return direct_sum(a, b);
}

/// g^n = g + ... + g (n copies); g^0 is trivial.
inline FinAbGroup direct_power(FinAbGroup const& g, std::int64_t n) {
  std::vector<std::int64_t> orders;
  for (std::int64_t i = 0; i < n; ++i) {
    orders.insert(orders.end(), g.invariant_factors().begin(), g.invariant_factors().end());
  }
  return canonicalize(checked_mul(g.free_rank(), n), orders);
}

inline FinAbGroup torsion(FinAbGroup const& g) {
  return canonicalize(0, g.invariant_factors());
}

/// The q-primary part of the torsion subgroup.
inline FinAbGroup primary_part(FinAbGroup const& g, std::int64_t q) {
  std::vector<std::int64_t> parts;
  for (auto d : g.invariant_factors()) {
    std::int64_t qpart = 1;
    while (d % q == 0) {
      d /= q;
      qpart *= q;
    }
    if (qpart > 1) parts.push_back(qpart);
  }
  return canonicalize(0, parts);
}

/// |g|, or nullopt when g is infinite. Throws OverflowDetected past 2^63.
inline std::optional<std::int64_t> order(FinAbGroup const& g) {
  if (!g.is_finite()) return std::nullopt;
  std::int64_t n = 1;
  for (auto d : g.invariant_factors()) n = checked_mul(n, d);
  return n;
}

/// |g| as a factorization; nullopt when g is infinite. Never overflows.
inline std::optional<FactoredInt> factored_order(FinAbGroup const& g) {
  if (!g.is_finite()) return std::nullopt;
  FactoredInt n;
  for (auto d : g.invariant_factors()) n *= FactoredInt(d);
  return n;
}

/// Dimension of g (x) Z/q over F_q, q prime.
inline std::int64_t rank_mod(FinAbGroup const& g, std::int64_t q) {
  auto const& f = g.invariant_factors();
  return g.free_rank() +
         std::count_if(f.begin(), f.end(), [q](auto d) { return d % q == 0; });
}

/// Largest invariant factor (1 for a group with none).
inline std::int64_t exponent_of_torsion(FinAbGroup const& g) {
  auto const& f = g.invariant_factors();
  return f.empty() ? 1 : f.back();
}

/// Quotient by a cyclic subgroup of order n sitting inside the largest
/// invariant factor: Z/d_m is replaced by Z/(d_m / n).
inline FinAbGroup quotient_by_largest_cyclic(FinAbGroup const& g, std::int64_t n) {
  auto factors = g.invariant_factors();
  if (factors.empty() || factors.back() % n != 0) {
    throw Error("Z/" + std::to_string(n) +
                " does not embed in the largest invariant factor of " +
                g.to_string());
  }
  factors.back() /= n;
  if (factors.back() == 1) factors.pop_back();
  return canonicalize(g.free_rank(), factors);
}

template <typename BasicJson>
void to_json(BasicJson& j, FinAbGroup const& g) {
  j = BasicJson{{"free_rank", g.free_rank()}, {"invariant_factors", g.invariant_factors()}};
}

/// Rejects input that is not already in canonical form.
template <typename BasicJson>
void from_json(BasicJson const& j, FinAbGroup& g) {
  auto const rank = j.at("free_rank").template get<std::int64_t>();
  auto const factors = j.at("invariant_factors").template get<std::vector<std::int64_t>>();
  auto c = canonicalize(rank, factors);
  if (c.invariant_factors() != factors) {
    throw Error("invariant factors are not a divisibility chain: " + j.dump());
  }
  g = std::move(c);
}

/// Dense integer matrix. Rows are relations, columns are generators.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (rows == 0 || cols == 0) throw Error("IntMatrix dimensions must be positive");
  }

  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
      : IntMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
    std::size_t i = 0;
    for (auto const& row : rows) {
      if (row.size() != cols_) throw Error("ragged IntMatrix initializer");
      std::copy(row.begin(), row.end(), data_.begin() + i * cols_);
      ++i;
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  void swap_rows(std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
  }
  /// row[target] += factor * row[source]
  void add_row(std::size_t target, std::size_t source, std::int64_t factor) {
    for (std::size_t j = 0; j < cols_; ++j) {
      (*this)(target, j) =
          checked_add((*this)(target, j), checked_mul(factor, (*this)(source, j)));
    }
  }
  /// col[target] += factor * col[source]
  void add_col(std::size_t target, std::size_t source, std::int64_t factor) {
    for (std::size_t i = 0; i < rows_; ++i) {
      (*this)(i, target) =
          checked_add((*this)(i, target), checked_mul(factor, (*this)(i, source)));
    }
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> data_;
};

/// Diagonal of the Smith normal form: min(rows, cols) nonnegative entries
/// d1 | d2 | ... with zeros last. Elementary integer row and column
/// operations only; throws OverflowDetected instead of wrapping.
inline std::vector<std::int64_t> smith_normal_form(IntMatrix m) {
  auto const rows = m.rows();
  auto const cols = m.cols();
  auto const n = std::min(rows, cols);
  auto abs64 = [](std::int64_t x) { return x < 0 ? checked_neg(x) : x; };

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // pivot: smallest nonzero magnitude in the trailing block
      std::size_t pi = t, pj = t;
      std::int64_t best = 0;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          auto v = abs64(m(i, j));
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      }
      if (best == 0) {
        std::vector<std::int64_t> diag(n, 0);
        for (std::size_t k = 0; k < t; ++k) diag[k] = m(k, k);
        return diag;
      }
      m.swap_rows(t, pi);
      m.swap_cols(t, pj);
      if (m(t, t) < 0) m.add_row(t, t, -2);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        auto q = m(i, t) / m(t, t);
        if (q != 0) m.add_row(i, t, checked_neg(q));
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        auto q = m(t, j) / m(t, t);
        if (q != 0) m.add_col(j, t, checked_neg(q));
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // the pivot must divide the whole trailing block
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m(i, j) % m(t, t) != 0) {
            m.add_row(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
  }
  std::vector<std::int64_t> diag(n);
  for (std::size_t k = 0; k < n; ++k) diag[k] = m(k, k);
  return diag;
}

/// Z^cols modulo the row span of m.
inline FinAbGroup cokernel(IntMatrix const& m) {
  auto const diag = smith_normal_form(m);
  std::int64_t rank = 0;
  std::vector<std::int64_t> torsion_orders;
  for (auto d : diag) {
    if (d != 0) ++rank;
    if (d > 1) torsion_orders.push_back(d);
  }
  return canonicalize(static_cast<std::int64_t>(m.cols()) - rank, torsion_orders);
}

}  // namespace sl2coh
