#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <random>

#include "sl2coh/fp_core.hpp"

using namespace sl2coh;

TEST_CASE("make_prime accepts primes and rejects everything else", "[fp_core]") {
  REQUIRE(make_prime(13).value() == 13);
  REQUIRE(make_prime(2).value() == 2);
  REQUIRE(make_prime(101).value() == 101);
  REQUIRE_THROWS_AS(make_prime(12), NotPrime);
  REQUIRE_THROWS_AS(make_prime(1), NotPrime);
  REQUIRE_THROWS_AS(make_prime(0), NotPrime);
  REQUIRE_THROWS_AS(make_prime(-7), NotPrime);
  REQUIRE_THROWS_AS(make_prime(91), NotPrime);  // 7 * 13
}

TEST_CASE("field helpers", "[fp_core]") {
  for (fp::residue x = 1; x < 13; ++x) REQUIRE(fp::mul(x, fp::inv(x, 13), 13) == 1);
  REQUIRE(fp::reduce(-1, 5) == 4);
  REQUIRE(fp::least_primitive_root(7) == 3);
  REQUIRE(fp::least_primitive_root(13) == 2);
  REQUIRE(fp::least_primitive_root(23) == 5);
}

TEST_CASE("FpMat construction enforces determinant one", "[fp_core]") {
  auto const p = make_prime(7);
  REQUIRE_NOTHROW(FpMat::make(2, 3, 1, 2, p));  // 4 - 3 = 1
  REQUIRE_THROWS_AS(FpMat::make(1, 1, 1, 1, p), Error);
  auto const m = FpMat::make(-1, 10, 0, -1, p);
  REQUIRE(m == FpMat{6, 3, 0, 6, 7});
  REQUIRE((m * m.inverse()).is_identity());
}

TEST_CASE("standard generators", "[fp_core]") {
  SECTION("p = 5") {
    auto const g = standard_generators(make_prime(5));
    REQUIRE(g.a4 == FpMat{0, 4, 1, 0, 5});
    REQUIRE(g.a4 * g.a4 == g.a2);
    REQUIRE(g.a2 == FpMat{4, 0, 0, 4, 5});
  }
  SECTION("p = 7 element orders by repeated multiplication") {
    auto const g = standard_generators(make_prime(7));
    REQUIRE(element_order(g.a2) == 2);
    REQUIRE(element_order(g.a4) == 4);
    REQUIRE(element_order(g.a6) == 6);
  }
  SECTION("p = 2 degenerates since -1 = 1") {
    REQUIRE_THROWS_AS(standard_generators(make_prime(2)), DegenerateGenerators);
  }
  SECTION("p = 3 still has orders 2, 4, 6") {
    REQUIRE_NOTHROW(standard_generators(make_prime(3)));
  }
}

TEST_CASE("a4^2 = a6^3 = a2 and a2 is central", "[fp_core][property]") {
  for (std::int64_t n : {5, 7, 11, 13}) {
    auto const p = make_prime(n);
    auto const g = standard_generators(p);
    REQUIRE(g.a4 * g.a4 == g.a2);
    REQUIRE(g.a6 * g.a6 * g.a6 == g.a2);
    for (auto const& x : enumerate_group(p, GroupTag::G)) {
      REQUIRE(x * g.a2 == g.a2 * x);
    }
  }
}

TEST_CASE("enumerate_group cardinalities", "[fp_core]") {
  auto const p5 = make_prime(5);
  REQUIRE(enumerate_group(p5, GroupTag::G).size() == 120);
  REQUIRE(enumerate_group(p5, GroupTag::B).size() == 20);
  REQUIRE(enumerate_group(make_prime(7), GroupTag::C6).size() == 6);
  REQUIRE(enumerate_group(make_prime(7), GroupTag::C4).size() == 4);
  REQUIRE(enumerate_group(make_prime(7), GroupTag::C2).size() == 2);
  REQUIRE_THROWS_AS(enumerate_group(make_prime(103), GroupTag::G), BoundExceeded);
  REQUIRE_THROWS_AS(enumerate_group(make_prime(7), GroupTag::B, 5), BoundExceeded);
}

TEST_CASE("SL2(F_p) enumeration is exact, sorted and closed", "[fp_core][property]") {
  std::mt19937 rng(20241019);
  for (std::int64_t n : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
    auto const p = make_prime(n);
    auto const elems = enumerate_group(p, GroupTag::G);
    auto const q = static_cast<std::uint64_t>(n);
    REQUIRE(elems.size() == q * (q * q - 1));
    REQUIRE(std::adjacent_find(elems.begin(), elems.end(),
                               [](auto const& x, auto const& y) { return !(x < y); }) ==
            elems.end());
    std::set<std::uint64_t> keys;
    for (auto const& m : elems) {
      REQUIRE(m.det() == 1 % m.p);
      keys.insert(m.key());
    }
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
      auto const& x = elems[pick(rng)];
      auto const& y = elems[pick(rng)];
      REQUIRE(keys.count((x * y).key()) == 1);
      REQUIRE(keys.count(x.inverse().key()) == 1);
      REQUIRE((x * y) * x == x * (y * x));
    }
  }
}

TEST_CASE("B is a subgroup with zero lower-left entry", "[fp_core][property]") {
  for (std::int64_t n : {5, 7, 11}) {
    auto const p = make_prime(n);
    auto const borel = enumerate_group(p, GroupTag::B);
    std::set<std::uint64_t> keys;
    for (auto const& b : borel) {
      REQUIRE(b.c == 0);
      keys.insert(b.key());
    }
    for (auto const& x : borel) {
      REQUIRE(keys.count(x.inverse().key()) == 1);
      for (auto const& y : borel) REQUIRE(keys.count((x * y).key()) == 1);
    }
    // the two generators used for orbit searches generate all of B
    auto const gens = subgroup_spec(p, GroupTag::B).generators;
    std::set<std::uint64_t> reached{FpMat::identity(static_cast<fp::residue>(n)).key()};
    std::vector<FpMat> frontier{FpMat::identity(static_cast<fp::residue>(n))};
    while (!frontier.empty()) {
      auto const x = frontier.back();
      frontier.pop_back();
      for (auto const& s : gens) {
        if (reached.insert((s * x).key()).second) frontier.push_back(s * x);
      }
    }
    REQUIRE(reached == keys);
  }
}

TEST_CASE("roots_mod_p examples", "[fp_core]") {
  using V = std::vector<fp::residue>;
  REQUIRE(roots_mod_p(Poly::TSquaredPlusOne, make_prime(5)) == V{2, 3});
  REQUIRE(roots_mod_p(Poly::TSquaredMinusTPlusOne, make_prime(7)) == V{3, 5});
  REQUIRE(roots_mod_p(Poly::TSquaredPlusOne, make_prime(7)).empty());
  REQUIRE_THROWS_AS(roots_mod_p(Poly::TSquaredPlusOne, make_prime(3)), UnsupportedPrime);
}

TEST_CASE("root counts follow p mod 4 and p mod 3", "[fp_core][property]") {
  for (std::int64_t n = 5; n <= kDefaultBound; ++n) {
    std::optional<Prime> p;
    try {
      p = make_prime(n);
    } catch (NotPrime const&) {
      continue;
    }
    auto const r4 = roots_mod_p(Poly::TSquaredPlusOne, *p);
    auto const r3 = roots_mod_p(Poly::TSquaredMinusTPlusOne, *p);
    REQUIRE(r4.size() == (n % 4 == 1 ? 2U : 0U));
    REQUIRE(r3.size() == (n % 3 == 1 ? 2U : 0U));
  }
}
