#pragma once

// Test-only reference computations. Nothing here goes through CosetSpace,
// the orbit BFS or the Smith normal form code; they rebuild the same
// quantities from first principles so the library can be checked against
// them.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "sl2coh/fp_core.hpp"

namespace sl2coh::oracle {

/// Stabilizer orders (descending) of the B-orbits on G/Ck, found by
/// building every double coset B g Ck as an explicit set of matrices. The
/// orbit of g*Ck has |BgCk| / k cosets, so its stabilizer has order
/// |B| * k / |BgCk|. Cost O(|G| * |B| * k); keep p small.
inline std::vector<std::uint64_t> double_coset_stabilizers(Prime p, int k) {
  auto const tag = k == 2 ? GroupTag::C2 : k == 4 ? GroupTag::C4 : GroupTag::C6;
  auto const group = enumerate_group(p, GroupTag::G);
  auto const borel = enumerate_group(p, GroupTag::B);
  auto const cyclic = enumerate_group(p, tag);
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> stabs;
  for (auto const& g : group) {
    if (seen.count(g.key()) != 0) continue;
    std::unordered_set<std::uint64_t> dc;
    for (auto const& b : borel) {
      for (auto const& c : cyclic) dc.insert((b * g * c).key());
    }
    seen.insert(dc.begin(), dc.end());
    stabs.push_back(borel.size() * cyclic.size() / dc.size());
  }
  std::sort(stabs.begin(), stabs.end(), std::greater<>());
  return stabs;
}

/// Burnside: #orbits of B on G/Ck = (1/|B|) sum_b #{cosets fixed by b}.
/// b fixes g*Ck iff g^-1 b g lies in Ck.
inline std::uint64_t burnside_orbit_count(Prime p, int k) {
  auto const tag = k == 2 ? GroupTag::C2 : k == 4 ? GroupTag::C4 : GroupTag::C6;
  auto const group = enumerate_group(p, GroupTag::G);
  auto const borel = enumerate_group(p, GroupTag::B);
  std::unordered_set<std::uint64_t> cyclic;
  for (auto const& c : enumerate_group(p, tag)) cyclic.insert(c.key());
  std::uint64_t fixed_pairs = 0;  // pairs (b, g) with g^-1 b g in Ck
  for (auto const& b : borel) {
    for (auto const& g : group) {
      if (cyclic.count((g.inverse() * b * g).key()) != 0) ++fixed_pairs;
    }
  }
  // each fixed coset is counted once per element of the coset
  return fixed_pairs / static_cast<std::uint64_t>(k) / borel.size();
}

/// Number of connected components of the graph with vertex set G/C4 + G/C6
/// and edge set G/C2, using hash sets of whole cosets.
struct GraphCounts {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::uint64_t components = 0;
};

inline GraphCounts quotient_graph_counts(Prime p) {
  auto const group = enumerate_group(p, GroupTag::G);
  auto coset_id = [&](GroupTag tag) {
    auto const sub = enumerate_group(p, tag);
    std::map<std::uint64_t, std::uint64_t> id;  // element key -> coset id
    std::uint64_t next = 0;
    for (auto const& g : group) {
      if (id.count(g.key()) != 0) continue;
      for (auto const& c : sub) id[(g * c).key()] = next;
      ++next;
    }
    return std::pair{id, next};
  };
  auto const [c2, n2] = coset_id(GroupTag::C2);
  auto const [c4, n4] = coset_id(GroupTag::C4);
  auto const [c6, n6] = coset_id(GroupTag::C6);

  std::vector<std::uint64_t> parent(n4 + n6);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint64_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::uint64_t components = n4 + n6;
  std::unordered_set<std::uint64_t> done;
  for (auto const& g : group) {
    if (!done.insert(c2.at(g.key())).second) continue;
    auto u = find(c4.at(g.key()));
    auto v = find(n4 + c6.at(g.key()));
    if (u != v) {
      parent[v] = u;
      --components;
    }
  }
  return {n4 + n6, n2, components};
}

/// Determinant by cofactor expansion; fine for the 4x4 matrices tests use.
inline std::int64_t det(std::vector<std::vector<std::int64_t>> const& m) {
  auto const n = m.size();
  if (n == 1) return m[0][0];
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(m[i][c]);
      }
      minor.push_back(row);
    }
    auto const term = m[0][j] * det(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

/// Smith diagonal via determinantal divisors: D_k = gcd of all k x k
/// minors, d_k = D_k / D_{k-1}.
inline std::vector<std::int64_t> smith_by_minors(std::vector<std::vector<std::int64_t>> const& m) {
  auto const rows = m.size();
  auto const cols = m[0].size();
  auto const n = std::min(rows, cols);
  auto subsets = [](std::size_t total, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> pick(total, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < total; ++i) {
        if (pick[i]) s.push_back(i);
      }
      out.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
  };
  std::vector<std::int64_t> divisors{1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::int64_t g = 0;
    for (auto const& rs : subsets(rows, k)) {
      for (auto const& cs : subsets(cols, k)) {
        std::vector<std::vector<std::int64_t>> sub;
        for (auto r : rs) {
          std::vector<std::int64_t> row;
          for (auto c : cs) row.push_back(m[r][c]);
          sub.push_back(row);
        }
        g = std::gcd(g, det(sub));
      }
    }
    divisors.push_back(g);
  }
  std::vector<std::int64_t> diag;
  for (std::size_t k = 1; k <= n; ++k) {
    diag.push_back(divisors[k] == 0 ? 0 : divisors[k] / divisors[k - 1]);
  }
  return diag;
}

}  // namespace sl2coh::oracle
