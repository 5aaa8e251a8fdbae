#pragma once

// Coset spaces G/Ck (k = 2, 4, 6) of G = SL2(F_p), the left action of the
// Borel subgroup B on them, and the finite quotient graph with vertex set
// G/C4 + G/C6 and edge set G/C2.
//
// B-orbits on G/Ck are the double cosets B g Ck. Orbit sizes come from a
// breadth-first search over B's two generators; stabilizer orders follow
// from orbit-stabilizer.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sl2coh/errors.hpp"
#include "sl2coh/fp_core.hpp"
#include "sl2coh/rational.hpp"

namespace sl2coh {

inline GroupTag cyclic_tag(int k) {
  switch (k) {
    case 2: return GroupTag::C2;
    case 4: return GroupTag::C4;
    case 6: return GroupTag::C6;
    default: break;
  }
  throw Error("k must be one of 2, 4, 6; got " + std::to_string(k));
}

/// Left cosets g*Ck, each named by its lexicographically least element.
class CosetSpace {
 public:
  CosetSpace(Prime p, int k, std::vector<FpMat> subgroup, std::vector<FpMat> reps)
      : p_(p), k_(k), subgroup_(std::move(subgroup)), reps_(std::move(reps)) {
    keys_.reserve(reps_.size());
    for (auto const& r : reps_) keys_.push_back(r.key());
  }

  Prime prime() const noexcept { return p_; }
  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return reps_.size(); }
  std::vector<FpMat> const& reps() const noexcept { return reps_; }
  std::vector<FpMat> const& subgroup() const noexcept { return subgroup_; }
  FpMat const& rep(std::size_t i) const { return reps_[i]; }

  FpMat canonical(FpMat const& g) const {
    FpMat best = g * subgroup_.front();
    for (std::size_t i = 1; i < subgroup_.size(); ++i) {
      best = std::min(best, g * subgroup_[i]);
    }
    return best;
  }

  /// Position of the coset g*Ck in reps().
  std::size_t index_of(FpMat const& g) const {
    auto const key = canonical(g).key();
    auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
    return static_cast<std::size_t>(it - keys_.begin());
  }

 private:
  Prime p_;
  int k_;
  std::vector<FpMat> subgroup_;
  std::vector<FpMat> reps_;
  std::vector<std::uint64_t> keys_;
};

/// Representatives are produced in lexicographic order: g is kept exactly
/// when it is the least element of g*Ck.
inline CosetSpace build_coset_space(Prime p, int k, std::int64_t bound = kDefaultBound) {
  auto const tag = cyclic_tag(k);
  if (k == 2 ? p.value() <= 2 : p.value() <= 3) {
    throw UnsupportedPrime(p.value(), "coset spaces G/C" + std::to_string(k) +
                                          " need p > " + (k == 2 ? "2" : "3"));
  }
  require_within_bound(p, bound);
  auto subgroup = enumerate_group(p, tag, bound);
  std::vector<FpMat> reps;
  reps.reserve(group_order(p) / static_cast<std::uint64_t>(k));
  for_each_element(p, [&](FpMat const& g) {
    for (auto const& c : subgroup) {
      if (g * c < g) return;
    }
    reps.push_back(g);
  });
  return CosetSpace(p, k, std::move(subgroup), std::move(reps));
}

/// Right cosets B*g named by their least element. Brute force over B for
/// every element, O(p^5); meant for small p.
inline std::vector<FpMat> borel_coset_reps(Prime p, std::int64_t bound = kDefaultBound) {
  require_within_bound(p, bound);
  auto const borel = enumerate_group(p, GroupTag::B, bound);
  std::vector<FpMat> reps;
  for_each_element(p, [&](FpMat const& g) {
    for (auto const& b : borel) {
      if (b * g < g) return;
    }
    reps.push_back(g);
  });
  return reps;
}

struct Orbit {
  FpMat representative;
  std::uint64_t size = 0;
  std::uint64_t stabilizer_order = 0;
  /// Root x of T^2+1 (k = 4) or T^2-T+1 (k = 6) with [[1,0],[x,1]]*Ck in
  /// the orbit; set only when the stabilizer is larger than the centre.
  std::optional<fp::residue> fixed_root;
  /// k = 6 only: the orbit through the identity coset, B*C6.
  bool singular = false;

  friend bool operator==(Orbit const&, Orbit const&) = default;
};

struct OrbitDecomposition {
  Prime p;
  int k;
  std::vector<Orbit> orbits;

  /// Stabilizer orders, descending.
  std::vector<std::uint64_t> stabilizer_orders() const {
    std::vector<std::uint64_t> out;
    out.reserve(orbits.size());
    for (auto const& o : orbits) out.push_back(o.stabilizer_order);
    return out;
  }
};

/// Number of b in B with b*g*Ck = g*Ck, by enumerating B.
inline std::uint64_t stabilizer_order_slow(CosetSpace const& space, FpMat const& g,
                                           std::int64_t bound = kDefaultBound) {
  auto const home = space.index_of(g);
  std::uint64_t n = 0;
  for (auto const& b : enumerate_group(space.prime(), GroupTag::B, bound)) {
    if (space.index_of(b * g) == home) ++n;
  }
  return n;
}

struct DecomposeOptions {
  /// Recompute each stabilizer by enumerating B and throw on disagreement.
  bool cross_check_stabilizers = false;
  std::int64_t bound = kDefaultBound;
};

inline OrbitDecomposition decompose_under_B(CosetSpace const& space,
                                            DecomposeOptions const& opts = {}) {
  auto const p = space.prime();
  auto const q = static_cast<fp::residue>(p.value());
  auto const borel = borel_order(p);
  auto const gens = subgroup_spec(p, GroupTag::B).generators;

  constexpr auto kUnvisited = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> orbit_of(space.size(), kUnvisited);
  std::vector<std::size_t> queue;
  queue.reserve(space.size());

  struct Raw {
    std::size_t first;  // least coset index, hence least representative
    std::uint64_t size;
  };
  std::vector<Raw> raw;

  for (std::size_t start = 0; start < space.size(); ++start) {
    if (orbit_of[start] != kUnvisited) continue;
    auto const id = static_cast<std::uint32_t>(raw.size());
    queue.clear();
    queue.push_back(start);
    orbit_of[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto const& g = space.rep(queue[head]);
      for (auto const& s : gens) {
        auto const j = space.index_of(s * g);
        if (orbit_of[j] == kUnvisited) {
          orbit_of[j] = id;
          queue.push_back(j);
        }
      }
    }
    raw.push_back({start, queue.size()});
  }

  std::vector<Orbit> orbits;
  orbits.reserve(raw.size());
  for (auto const& r : raw) {
    Orbit o;
    o.representative = space.rep(r.first);
    o.size = r.size;
    o.stabilizer_order = borel / r.size;
    orbits.push_back(o);
  }

  if (space.k() != 2) {
    auto const poly = space.k() == 4 ? Poly::TSquaredPlusOne : Poly::TSquaredMinusTPlusOne;
    for (fp::residue x = 0; x < q; ++x) {
      auto const lx = lower_unipotent(x, q);
      auto& o = orbits[orbit_of[space.index_of(lx)]];
      if (o.stabilizer_order > 2 && !o.fixed_root && evaluate(poly, x, q) == 0) {
        o.fixed_root = x;
        o.representative = space.canonical(lx);
      }
    }
  }
  if (space.k() == 6) {
    orbits[orbit_of[space.index_of(FpMat::identity(q))]].singular = true;
  }

  if (opts.cross_check_stabilizers) {
    for (auto const& o : orbits) {
      auto const slow = stabilizer_order_slow(space, o.representative, opts.bound);
      if (slow != o.stabilizer_order) {
        throw Error("stabilizer of " + o.representative.to_string() + " has order " +
                    std::to_string(slow) + ", orbit-stabilizer gave " +
                    std::to_string(o.stabilizer_order));
      }
    }
  }

  std::sort(orbits.begin(), orbits.end(), [](Orbit const& a, Orbit const& b) {
    if (a.stabilizer_order != b.stabilizer_order) {
      return a.stabilizer_order > b.stabilizer_order;
    }
    return a.representative < b.representative;
  });
  return OrbitDecomposition{p, space.k(), std::move(orbits)};
}

inline OrbitDecomposition decompose_under_B(Prime p, int k,
                                            std::int64_t bound = kDefaultBound) {
  return decompose_under_B(build_coset_space(p, k, bound), DecomposeOptions{false, bound});
}

/// Stabilizer-order multiset predicted by the closed forms, descending.
inline std::vector<std::uint64_t> expected_stabilizer_orders(Prime p, int k) {
  require_above_three(p, "the double coset formulas assume p > 3");
  auto const q = static_cast<std::uint64_t>(p.value());
  std::vector<std::uint64_t> out;
  switch (k) {
    case 2:
      out.assign(q + 1, 2);
      break;
    case 4:
      if (q % 4 == 1) {
        out = {4, 4};
        out.insert(out.end(), (q - 1) / 2, 2);
      } else {
        out.assign((q + 1) / 2, 2);
      }
      break;
    case 6:
      if (q % 3 == 1) {
        out = {6, 6};
        out.insert(out.end(), (q - 1) / 3, 2);
      } else {
        out.assign((q + 1) / 3, 2);
      }
      break;
    default:
      cyclic_tag(k);
  }
  return out;
}

struct DecompositionReport {
  bool pass = false;
  std::vector<std::uint64_t> expected;
  std::vector<std::uint64_t> observed;
  std::vector<fp::residue> expected_roots;
  std::vector<fp::residue> observed_roots;

  std::string diff() const {
    auto join = [](auto const& v) {
      std::ostringstream os;
      os << "{";
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
      os << "}";
      return os.str();
    };
    return "stabilizers expected " + join(expected) + " observed " + join(observed) +
           "; roots expected " + join(expected_roots) + " observed " +
           join(observed_roots);
  }
};

/// Compares a decomposition against the closed forms for p mod 4 / p mod 3,
/// including the roots carried by the fixed orbits.
inline DecompositionReport verify_decomposition(OrbitDecomposition const& dec) {
  DecompositionReport r;
  r.expected = expected_stabilizer_orders(dec.p, dec.k);
  r.observed = dec.stabilizer_orders();
  std::sort(r.observed.begin(), r.observed.end(), std::greater<>());
  if (dec.k != 2) {
    r.expected_roots = roots_mod_p(
        dec.k == 4 ? Poly::TSquaredPlusOne : Poly::TSquaredMinusTPlusOne, dec.p);
  }
  bool roots_placed = true;
  for (auto const& o : dec.orbits) {
    if (o.fixed_root) r.observed_roots.push_back(*o.fixed_root);
    if ((o.stabilizer_order > 2) != o.fixed_root.has_value()) roots_placed = false;
  }
  std::sort(r.observed_roots.begin(), r.observed_roots.end());
  r.pass = roots_placed && r.expected == r.observed && r.expected_roots == r.observed_roots;
  return r;
}

struct OrbitCounts {
  std::uint64_t n2 = 0;
  std::uint64_t n4 = 0;
  std::uint64_t n6 = 0;
  friend bool operator==(OrbitCounts const&, OrbitCounts const&) = default;
};

/// Number of B-orbits on G/C2, G/C4, G/C6.
inline OrbitCounts orbit_counts(Prime p, std::int64_t bound = kDefaultBound) {
  require_above_three(p, "orbit counts are defined for p > 3");
  return {decompose_under_B(p, 2, bound).orbits.size(),
          decompose_under_B(p, 4, bound).orbits.size(),
          decompose_under_B(p, 6, bound).orbits.size()};
}

/// Sum over vertex orbits of 1/|stab| minus the same sum over edge orbits.
inline Rational equivariant_euler_characteristic(Prime p,
                                                 std::int64_t bound = kDefaultBound) {
  require_above_three(p, "the quotient graph is built for p > 3");
  Rational chi;
  auto accumulate = [&](int k, int sign) {
    for (auto const& o : decompose_under_B(p, k, bound).orbits) {
      Rational term(1, static_cast<std::int64_t>(o.stabilizer_order));
      chi += sign > 0 ? term : -term;
    }
  };
  accumulate(4, +1);
  accumulate(6, +1);
  accumulate(2, -1);
  return chi;
}

/// The finite graph T/Gamma(p): vertices G/C4 followed by G/C6, one edge
/// g*C2 -> (g*C4, g*C6) per coset of C2.
struct QuotientGraph {
  Prime p;
  std::size_t c4_vertices = 0;
  std::size_t c6_vertices = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  bool connected = false;

  std::size_t vertex_count() const noexcept { return c4_vertices + c6_vertices; }
  std::size_t edge_count() const noexcept { return edges.size(); }
  std::int64_t euler_characteristic() const noexcept {
    return static_cast<std::int64_t>(vertex_count()) -
           static_cast<std::int64_t>(edge_count());
  }
  /// Rank of the free group Gamma(p) when connected.
  std::int64_t first_betti_number() const noexcept { return 1 - euler_characteristic(); }
};

namespace detail {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::uint32_t{0});
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[y] = x;
    return true;
  }
  std::vector<std::uint32_t> parent;
};

}  // namespace detail

inline QuotientGraph build_quotient_graph(Prime p, std::int64_t bound = kDefaultBound) {
  require_above_three(p, "the quotient graph is built for p > 3");
  auto const s2 = build_coset_space(p, 2, bound);
  auto const s4 = build_coset_space(p, 4, bound);
  auto const s6 = build_coset_space(p, 6, bound);

  QuotientGraph g{p, s4.size(), s6.size(), {}, false};
  g.edges.reserve(s2.size());
  detail::DisjointSets sets(g.vertex_count());
  std::size_t components = g.vertex_count();
  for (auto const& r : s2.reps()) {
    auto const u = static_cast<std::uint32_t>(s4.index_of(r));
    auto const v = static_cast<std::uint32_t>(s4.size() + s6.index_of(r));
    g.edges.emplace_back(u, v);
    if (sets.unite(u, v)) --components;
  }
  g.connected = components == 1;
  return g;
}

}  // namespace sl2coh
