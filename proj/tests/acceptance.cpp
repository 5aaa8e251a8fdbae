// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "sl2coh/sl2coh.hpp"

using namespace sl2coh;

namespace {

constexpr std::int64_t kBruteLo = 5;
constexpr std::int64_t kBruteHi = 101;
constexpr std::int64_t kClosedHi = 499;
constexpr double kDecompositionBudgetSeconds = 120.0;
constexpr double kMvBudgetSeconds = 1.0;

struct Outcome {
  bool ok = true;
  std::string note;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// decompositions are shared by criteria 1, 2, 4 and 5
struct Decs {
  std::optional<OrbitDecomposition> c2, c4, c6;
};
std::map<std::int64_t, Decs> g_decs;

Outcome coset_decomposition() {
  auto const t0 = Clock::now();
  Outcome out;
  for (auto p : primes_in(kBruteLo, kBruteHi)) {
    auto dec = decompose_under_B(p, 2);
    auto const n = static_cast<std::size_t>(p.value() + 1);
    bool const good = dec.orbits.size() == n &&
                      std::all_of(dec.orbits.begin(), dec.orbits.end(),
                                  [](auto const& o) { return o.stabilizer_order == 2; });
    if (!good) {
      out.ok = false;
      out.note += " p=" + std::to_string(p.value());
    }
    g_decs[p.value()].c2 = std::move(dec);
  }
  auto const secs = seconds_since(t0);
  if (secs > kDecompositionBudgetSeconds) out.ok = false;
  std::ostringstream os;
  os.precision(3);
  os << "elapsed " << secs << " s (limit " << kDecompositionBudgetSeconds << " s)" << out.note;
  out.note = os.str();
  return out;
}

Outcome double_cosets() {
  Outcome out;
  for (auto p : primes_in(kBruteLo, kBruteHi)) {
    auto& d = g_decs[p.value()];
    d.c4 = decompose_under_B(p, 4);
    d.c6 = decompose_under_B(p, 6);
    for (auto const* dec : {&*d.c4, &*d.c6}) {
      auto const r = verify_decomposition(*dec);
      if (!r.pass) {
        out.ok = false;
        out.note += " p=" + std::to_string(p.value()) + " k=" + std::to_string(dec->k) + ": " +
                    r.diff();
      }
    }
  }
  if (out.ok) out.note = "stabilizers and roots match for k = 4, 6";
  return out;
}

Outcome n_of_p_matches() {
  Outcome out;
  for (auto p : primes_in(kBruteLo, kBruteHi)) {
    auto const& d = g_decs.at(p.value());
    OrbitCounts const c{d.c2->orbits.size(), d.c4->orbits.size(), d.c6->orbits.size()};
    if (n_of_p_oracle(c) != n_of_p(p)) {
      out.ok = false;
      out.note += " p=" + std::to_string(p.value());
    }
  }
  std::map<std::int64_t, std::int64_t> const spot{{13, 1}, {11, 3}, {5, 1}, {7, 1}};
  for (auto [n, expected] : spot) {
    if (n_of_p(make_prime(n)) != expected) {
      out.ok = false;
      out.note += " spot p=" + std::to_string(n);
    }
  }
  if (out.ok) out.note = "N(13)=1 N(11)=3 N(5)=1 N(7)=1";
  return out;
}

Outcome pgamma0_oracle() {
  Outcome out;
  for (auto p : primes_in(kBruteLo, kBruteHi)) {
    auto const& d = g_decs.at(p.value());
    auto const oracle = pgamma0_even_oracle(*d.c4, *d.c6);
    for (int deg : {2, 4, 6, 8}) {
      if (pgamma0_entry(p, deg) != oracle) {
        out.ok = false;
        out.note += " p=" + std::to_string(p.value());
        break;
      }
    }
  }
  std::map<std::int64_t, std::vector<std::int64_t>> const spot{
      {13, {6, 6}}, {5, {2, 2}}, {7, {3, 3}}, {11, {}}};
  for (auto const& [n, expected] : spot) {
    if (pgamma0_entry(make_prime(n), 2).invariant_factors() != expected) {
      out.ok = false;
      out.note += " spot p=" + std::to_string(n);
    }
  }
  if (out.ok) out.note = "[6,6] at 13, [2,2] at 5, [3,3] at 7, 0 at 11";
  return out;
}

Outcome euler_characteristic() {
  Outcome out;
  for (auto p : primes_in(kBruteLo, kBruteHi)) {
    auto const& d = g_decs.at(p.value());
    Rational chi;
    for (auto const* dec : {&*d.c4, &*d.c6}) {
      for (auto const& o : dec->orbits) chi += Rational(1, static_cast<std::int64_t>(o.stabilizer_order));
    }
    for (auto const& o : d.c2->orbits) chi -= Rational(1, static_cast<std::int64_t>(o.stabilizer_order));
    if (chi != Rational(-(p.value() + 1), 12) ||
        equivariant_euler_characteristic(p) != chi) {
      out.ok = false;
      out.note += " p=" + std::to_string(p.value()) + " got " + chi.to_string();
    }
  }
  if (out.ok) out.note = "exact rational -(p+1)/12";
  return out;
}

Outcome quotient_graph() {
  Outcome out;
  for (auto p : primes_in(kBruteLo, kBruteHi)) {
    auto const g = build_quotient_graph(p);
    auto const q = p.value();
    if (!g.connected || g.euler_characteristic() != -q * (q * q - 1) / 12) {
      out.ok = false;
      out.note += " p=" + std::to_string(q);
    }
  }
  auto const g5 = build_quotient_graph(make_prime(5));
  if (out.ok) {
    out.note = "p=5: " + std::to_string(g5.vertex_count()) + " - " +
               std::to_string(g5.edge_count()) + " = " +
               std::to_string(g5.euler_characteristic());
  }
  return out;
}

Outcome mv_identity() {
  auto const t0 = Clock::now();
  Outcome out;
  for (auto p : primes_in(kBruteLo, kClosedHi)) {
    for (int d = 4; d <= 8; d += 2) {
      auto const r = mv_order_check(p, d);
      if (!r.pass) {
        out.ok = false;
        out.note += " p=" + std::to_string(p.value()) + " " + r.detail();
      }
    }
  }
  for (auto [n, expected] : std::map<std::int64_t, std::string>{
           {13, "1728"}, {11, "1152"}, {7, "864"}}) {
    auto const r = mv_order_check(make_prime(n), 4);
    if (!r.pass || r.lhs.to_string() != expected) {
      out.ok = false;
      out.note += " spot p=" + std::to_string(n);
    }
  }
  auto const secs = seconds_since(t0);
  if (secs > kMvBudgetSeconds) out.ok = false;
  std::ostringstream os;
  os.precision(3);
  os << "elapsed " << secs << " s (limit " << kMvBudgetSeconds << " s)" << out.note;
  out.note = os.str();
  return out;
}

Outcome order_doubling() {
  Outcome out;
  for (auto p : primes_in(kBruteLo, kClosedHi)) {
    for (int d = 2; d <= 8; d += 2) {
      if (*order(gamma0_entry(p, d)) != 2 * *order(pgamma0_entry(p, d))) {
        out.ok = false;
        out.note += " p=" + std::to_string(p.value()) + " d=" + std::to_string(d);
      }
    }
  }
  if (out.ok) out.note = "degrees 2..8";
  return out;
}

Outcome universal_coefficients() {
  Outcome out;
  std::vector<std::pair<Prime, std::string>> cases{{make_prime(2), "Z/3"}, {make_prime(3), "Z/4"}};
  for (auto p : primes_in(kBruteLo, kClosedHi)) cases.emplace_back(p, "Z/12");
  for (auto const& [p, expected] : cases) {
    auto const t = torsion(sl2zp_entry(p, 2));
    if (t != h1_sl2zp(p) || t.to_string() != expected) {
      out.ok = false;
      out.note += " p=" + std::to_string(p.value());
    }
  }
  if (out.ok) out.note = "Z/3 at 2, Z/4 at 3, Z/12 above";
  return out;
}

Outcome published_entries() {
  Outcome out;
  auto render = [](std::int64_t p, int d) {
    return sl2zp_table(make_prime(p), d).at(d).to_string();
  };
  std::vector<std::tuple<std::int64_t, int, std::string>> cases{
      {11, 4, "Z/2 + Z/2 + Z/12 + Z/12"}, {11, 3, "0"}, {13, 3, "Z/6"}, {3, 2, "Z + Z/4"}};
  for (int d = 4; d <= 12; d += 2) cases.emplace_back(2, d, "Z/3 + Z/24");
  for (auto const& [p, d, expected] : cases) {
    auto const got = render(p, d);
    if (got != expected) {
      out.ok = false;
      out.note += " p=" + std::to_string(p) + " H^" + std::to_string(d) + " = " + got;
    }
  }
  if (out.ok) out.note = std::to_string(cases.size()) + " entries byte-exact";
  return out;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria{
      {"C2 orbits number p+1 with stabilizer 2, 5 <= p <= 101", coset_decomposition},
      {"C4 and C6 stabilizers and fixed roots, 5 <= p <= 101", double_cosets},
      {"N(p) equals orbit-count oracle, 5 <= p <= 101", n_of_p_matches},
      {"PGamma0 even degrees equal stabilizer oracle, 5 <= p <= 101", pgamma0_oracle},
      {"equivariant Euler characteristic is -(p+1)/12, 5 <= p <= 101", euler_characteristic},
      {"quotient graph connected with V - E = -|G|/12, 5 <= p <= 101", quotient_graph},
      {"Mayer-Vietoris order and quotient identities, 5 <= p <= 499", mv_identity},
      {"Gamma0 even-degree order is twice PGamma0, 5 <= p <= 499", order_doubling},
      {"torsion of H^2(SL2(Z[1/p])) equals H_1", universal_coefficients},
      {"SL2(Z[1/p]) table entries render exactly", published_entries},
  };
  int failures = 0;
  int index = 0;
  for (auto const& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failures;
    std::printf("%-4s %2d  %s  [%s]\n", o.ok ? "PASS" : "FAIL", index, name.c_str(),
                o.note.c_str());
  }
  std::printf("%d of %zu criteria passed\n", index - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
