#pragma once

// Consistency suite: closed-form tables against brute-force oracles over
// SL2(F_p), plus exact-sequence arithmetic that needs no enumeration.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "sl2coh/abelian.hpp"
#include "sl2coh/cohomology_tables.hpp"
#include "sl2coh/coset_engine.hpp"
#include "sl2coh/fp_core.hpp"
#include "sl2coh/rational.hpp"

namespace sl2coh {

enum class Status { Pass, Fail, Skipped };

inline char const* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  Status status = Status::Skipped;
  std::string detail;
};

enum class CheckKind { BruteForce, ClosedForm };

struct CheckInfo {
  char const* name;
  CheckKind kind;
  char const* summary;
};

/// Every check, in the order the suite runs them.
inline std::vector<CheckInfo> const& check_catalogue() {
  static std::vector<CheckInfo> const catalogue{
      {"decomposition", CheckKind::BruteForce,
       "B-orbits on G/C2, G/C4, G/C6 match the double coset formulas"},
      {"n-of-p", CheckKind::BruteForce, "N(p) equals n2 - n4 - n6 + 1 from orbit counts"},
      {"pgamma0-oracle", CheckKind::BruteForce,
       "even-degree PGamma0(p) entry equals the sum of Z/(s/2) over vertex orbits"},
      {"euler", CheckKind::BruteForce,
       "equivariant Euler characteristic equals -(p+1)/12"},
      {"graph", CheckKind::BruteForce,
       "quotient graph is connected with |V| - |E| = -|G|/12"},
      {"central-extension", CheckKind::ClosedForm,
       "|H^2i(Gamma0(p))| = 2 |H^2i(PGamma0(p))|"},
      {"odd-rank", CheckKind::ClosedForm,
       "H^odd(Gamma0(p)) is (Z/2)^r with r = rank H^1(Gamma0(p))"},
      {"universal-coefficients", CheckKind::ClosedForm,
       "torsion of H^2(SL2(Z[1/p])) equals H_1(SL2(Z[1/p]))"},
      {"q-largest-factor", CheckKind::ClosedForm,
       "largest invariant factor of H^2(Gamma0(p)) is |Q(p)| and A(p)|Q(p)| = 12"},
      {"mv-order", CheckKind::ClosedForm,
       "Mayer-Vietoris order identity and H^2i+1 = H^2i(Gamma0(p))/Q(p)"},
      {"two-rank", CheckKind::ClosedForm,
       "H^2i(SL2(Z[1/p])) is an extension of Z/12 + Z/A(p) by (Z/2)^N(p) of 2-rank N(p)+1, "
       "split exactly for p = 1, 5 mod 12"},
      {"periodicity", CheckKind::ClosedForm, "every table is 2-periodic above its d0"},
  };
  return catalogue;
}

/// Parses "all", "closed-form", "brute-force" or a comma-separated list of
/// check names. Throws Error on unknown names.
inline std::vector<std::string> select_checks(std::string const& spec) {
  std::vector<std::string> out;
  auto add_kind = [&](std::optional<CheckKind> kind) {
    for (auto const& c : check_catalogue()) {
      if (!kind || c.kind == *kind) out.emplace_back(c.name);
    }
  };
  if (spec.empty() || spec == "all") {
    add_kind(std::nullopt);
    return out;
  }
  std::set<std::string> wanted;
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto end = spec.find(',', start);
    if (end == std::string::npos) end = spec.size();
    auto token = spec.substr(start, end - start);
    start = end + 1;
    if (token.empty()) continue;
    if (token == "all") {
      for (auto const& c : check_catalogue()) wanted.insert(c.name);
    } else if (token == "closed-form" || token == "brute-force") {
      auto const kind = token == "closed-form" ? CheckKind::ClosedForm : CheckKind::BruteForce;
      for (auto const& c : check_catalogue()) {
        if (c.kind == kind) wanted.insert(c.name);
      }
    } else {
      auto const& cat = check_catalogue();
      if (std::none_of(cat.begin(), cat.end(), [&](auto const& c) { return token == c.name; })) {
        throw Error("unknown check '" + token + "'");
      }
      wanted.insert(token);
    }
  }
  if (wanted.empty()) throw Error("no checks selected");
  for (auto const& c : check_catalogue()) {
    if (wanted.count(c.name) != 0) out.emplace_back(c.name);
  }
  return out;
}

struct SuiteOptions {
  std::vector<std::string> checks = select_checks("all");
  std::int64_t bound = kDefaultBound;
  /// Even degrees 2, 4, ..., up to this are examined by degree-wise checks.
  int max_degree = 8;
};

struct SuiteReport {
  Prime p;
  std::vector<CheckResult> results;

  std::size_t count(Status s) const {
    return static_cast<std::size_t>(std::count_if(
        results.begin(), results.end(), [s](auto const& r) { return r.status == s; }));
  }
  bool passed() const { return count(Status::Fail) == 0; }
};

namespace detail {

/// Decompositions shared by the brute-force checks of one prime.
struct BruteForceData {
  OrbitDecomposition on_c2;
  OrbitDecomposition on_c4;
  OrbitDecomposition on_c6;
};

inline CheckResult pass(std::string name, std::string detail) {
  return {std::move(name), Status::Pass, std::move(detail)};
}
inline CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), Status::Fail, std::move(detail)};
}
inline CheckResult skip(std::string name, std::string detail) {
  return {std::move(name), Status::Skipped, std::move(detail)};
}
inline CheckResult verdict(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail)};
}

inline CheckResult check_decomposition(BruteForceData const& bf) {
  std::string detail;
  bool ok = true;
  for (auto const* dec : {&bf.on_c2, &bf.on_c4, &bf.on_c6}) {
    auto const r = verify_decomposition(*dec);
    ok = ok && r.pass;
    if (!detail.empty()) detail += "; ";
    detail += "k=" + std::to_string(dec->k) + ": " + std::to_string(dec->orbits.size()) +
              " orbits" + (r.pass ? "" : " MISMATCH " + r.diff());
  }
  return verdict("decomposition", ok, detail);
}

inline CheckResult check_n_of_p(Prime p, BruteForceData const& bf) {
  OrbitCounts const c{bf.on_c2.orbits.size(), bf.on_c4.orbits.size(),
                      bf.on_c6.orbits.size()};
  auto const oracle = n_of_p_oracle(c);
  auto const closed = n_of_p(p);
  return verdict("n-of-p", oracle == closed,
                 std::to_string(c.n2) + " - " + std::to_string(c.n4) + " - " +
                     std::to_string(c.n6) + " + 1 = " + std::to_string(oracle) +
                     ", N(p) = " + std::to_string(closed));
}

inline CheckResult check_pgamma0_oracle(Prime p, BruteForceData const& bf) {
  auto const oracle = pgamma0_even_oracle(bf.on_c4, bf.on_c6);
  auto const closed = pgamma0_entry(p, 2);
  return verdict("pgamma0-oracle", oracle == closed,
                 "oracle " + oracle.to_string() + ", table " + closed.to_string());
}

inline CheckResult check_euler(Prime p, BruteForceData const& bf) {
  Rational chi;
  for (auto const* dec : {&bf.on_c4, &bf.on_c6}) {
    for (auto const& o : dec->orbits) chi += Rational(1, static_cast<std::int64_t>(o.stabilizer_order));
  }
  for (auto const& o : bf.on_c2.orbits) {
    chi -= Rational(1, static_cast<std::int64_t>(o.stabilizer_order));
  }
  Rational const expected(-(p.value() + 1), 12);
  return verdict("euler", chi == expected,
                 "chi = " + chi.to_string() + ", expected " + expected.to_string());
}

inline CheckResult check_graph(Prime p, std::int64_t bound) {
  auto const g = build_quotient_graph(p, bound);
  auto const expected = -static_cast<std::int64_t>(group_order(p) / 12);
  bool const ok = g.connected && g.euler_characteristic() == expected;
  return verdict("graph", ok,
                 std::to_string(g.vertex_count()) + " - " + std::to_string(g.edge_count()) +
                     " = " + std::to_string(g.euler_characteristic()) + " (expected " +
                     std::to_string(expected) + "), " +
                     (g.connected ? "connected" : "DISCONNECTED"));
}

inline CheckResult check_central_extension(Prime p, int max_degree) {
  if (p.value() == 3) return skip("central-extension", "no PGamma0(3) table");
  std::string detail;
  bool ok = true;
  for (int d = 2; d <= std::max(2, max_degree); d += 2) {
    auto const g0 = *order(gamma0_entry(p, d));
    auto const pg0 = *order(pgamma0_entry(p, d));
    ok = ok && g0 == 2 * pg0;
    if (!detail.empty()) detail += "; ";
    detail += "H^" + std::to_string(d) + ": " + std::to_string(g0) + " vs 2*" +
              std::to_string(pg0);
  }
  return verdict("central-extension", ok, detail);
}

inline CheckResult check_odd_rank(Prime p, int max_degree) {
  auto const h1 = gamma0_entry(p, 1);
  std::string detail = "rank H^1 = " + std::to_string(h1.free_rank());
  bool ok = h1.invariant_factors().empty();
  for (int d = 3; d <= std::max(3, max_degree + 1); d += 2) {
    auto const h = gamma0_entry(p, d);
    auto const& f = h.invariant_factors();
    bool const elementary = h.is_finite() && std::all_of(f.begin(), f.end(), [](auto x) { return x == 2; });
    ok = ok && elementary && static_cast<std::int64_t>(f.size()) == h1.free_rank();
    detail += "; H^" + std::to_string(d) + " = " + h.to_string();
  }
  return verdict("odd-rank", ok, detail);
}

inline CheckResult check_universal_coefficients(Prime p) {
  auto const t = torsion(sl2zp_entry(p, 2));
  auto const h1 = h1_sl2zp(p);
  return verdict("universal-coefficients", t == h1,
                 "torsion H^2 = " + t.to_string() + ", H_1 = " + h1.to_string());
}

inline CheckResult check_q_largest(Prime p) {
  auto const k = q_and_a(p);
  auto const h2 = gamma0_entry(p, 2);
  auto const largest = exponent_of_torsion(h2);
  return verdict("q-largest-factor", largest == k.q && k.a * k.q == 12,
                 "H^2(Gamma0) = " + h2.to_string() + ", |Q| = " + std::to_string(k.q) +
                     ", A = " + std::to_string(k.a));
}

inline CheckResult check_mv_order(Prime p, int max_degree) {
  std::string detail;
  bool ok = true;
  for (int d = 4; d <= std::max(6, max_degree); d += 2) {
    auto const r = mv_order_check(p, d);
    ok = ok && r.pass;
    if (!detail.empty()) detail += "; ";
    detail += r.detail();
  }
  return verdict("mv-order", ok, detail);
}

inline CheckResult check_two_rank(Prime p, int max_degree) {
  auto const k = q_and_a(p);
  auto const cls = residue_class(p);
  bool const should_split = cls == ResidueClass::One || cls == ResidueClass::Five;
  auto const split = detail::elementary(2, k.n) + FinAbGroup::cyclic(12) + FinAbGroup::cyclic(k.a);
  std::string detail;
  bool ok = true;
  for (int d = 4; d <= std::max(4, max_degree); d += 2) {
    auto const h = sl2zp_entry(p, d);
    auto const r2 = rank_mod(h, 2);
    bool const is_split = h == split;
    bool const order_ok = *factored_order(h) == *factored_order(split);
    ok = ok && r2 == k.n + 1 && is_split == should_split && order_ok;
    if (!detail.empty()) detail += "; ";
    detail += "H^" + std::to_string(d) + " = " + h.to_string() + ": 2-rank " +
              std::to_string(r2) + " (N+1 = " + std::to_string(k.n + 1) + "), " +
              (is_split ? "split" : "non-split");
  }
  return verdict("two-rank", ok, detail);
}

inline CheckResult check_periodicity(Prime p, int max_degree) {
  int const top = std::max(max_degree, 8);
  std::vector<CohomologyTable> tables{sl2z_table(top), gamma0_table(p, top),
                                      sl2zp_table(p, top)};
  if (p.value() != 3) tables.push_back(pgamma0_table(p, top));
  std::string detail;
  bool ok = true;
  for (auto const& t : tables) {
    bool const good = t.respects_period() && t.at(0) == FinAbGroup::free(1);
    ok = ok && good;
    if (!good) detail += display_name(t.group, t.p) + " breaks its period; ";
  }
  return verdict("periodicity", ok,
                 ok ? std::to_string(tables.size()) + " tables periodic through degree " +
                          std::to_string(top)
                    : detail);
}

}  // namespace detail

/// Runs the selected checks for one prime. Brute-force checks report
/// SKIPPED above the enumeration bound; checks stated only for p > 3 report
/// SKIPPED for p = 2, 3.
inline SuiteReport consistency_suite(Prime p, SuiteOptions const& opts = {}) {
  SuiteReport report{p, {}};
  std::set<std::string> const wanted(opts.checks.begin(), opts.checks.end());
  bool const small = p.value() <= 3;
  bool const within = p.value() <= opts.bound;

  std::optional<detail::BruteForceData> bf;
  auto brute = [&]() -> detail::BruteForceData const& {
    if (!bf) {
      bf = detail::BruteForceData{decompose_under_B(p, 2, opts.bound),
                                  decompose_under_B(p, 4, opts.bound),
                                  decompose_under_B(p, 6, opts.bound)};
    }
    return *bf;
  };

  for (auto const& info : check_catalogue()) {
    std::string const name = info.name;
    if (wanted.count(name) == 0) continue;
    bool const needs_large_p = name != "universal-coefficients" && name != "periodicity" &&
                               name != "central-extension" && name != "odd-rank";
    if (small && needs_large_p) {
      report.results.push_back(detail::skip(name, "stated for p > 3 only"));
      continue;
    }
    if (info.kind == CheckKind::BruteForce && !within) {
      report.results.push_back(detail::skip(
          name, "p exceeds the enumeration bound " + std::to_string(opts.bound)));
      continue;
    }
    try {
      if (name == "decomposition") {
        report.results.push_back(detail::check_decomposition(brute()));
      } else if (name == "n-of-p") {
        report.results.push_back(detail::check_n_of_p(p, brute()));
      } else if (name == "pgamma0-oracle") {
        report.results.push_back(detail::check_pgamma0_oracle(p, brute()));
      } else if (name == "euler") {
        report.results.push_back(detail::check_euler(p, brute()));
      } else if (name == "graph") {
        report.results.push_back(detail::check_graph(p, opts.bound));
      } else if (name == "central-extension") {
        report.results.push_back(detail::check_central_extension(p, opts.max_degree));
      } else if (name == "odd-rank") {
        report.results.push_back(detail::check_odd_rank(p, opts.max_degree));
      } else if (name == "universal-coefficients") {
        report.results.push_back(detail::check_universal_coefficients(p));
      } else if (name == "q-largest-factor") {
        report.results.push_back(detail::check_q_largest(p));
      } else if (name == "mv-order") {
        report.results.push_back(detail::check_mv_order(p, opts.max_degree));
      } else if (name == "two-rank") {
        report.results.push_back(detail::check_two_rank(p, opts.max_degree));
      } else if (name == "periodicity") {
        report.results.push_back(detail::check_periodicity(p, opts.max_degree));
      }
    } catch (Error const& e) {
      report.results.push_back(detail::fail(name, std::string("error: ") + e.what()));
    }
  }
  return report;
}

inline std::vector<Prime> primes_in(std::int64_t from, std::int64_t to) {
  std::vector<Prime> out;
  for (auto n = std::max<std::int64_t>(from, 2); n <= to; ++n) {
    try {
      out.push_back(make_prime(n));
    } catch (NotPrime const&) {
    }
  }
  return out;
}

struct ScanSummary {
  std::vector<SuiteReport> reports;  // ascending p
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  bool ok() const noexcept { return failed == 0; }
};

/// Runs the suite on every prime in [from, to]. Primes are processed on up
/// to `jobs` threads; reports come back in ascending order.
inline ScanSummary scan(std::int64_t from, std::int64_t to, SuiteOptions const& opts,
                        unsigned jobs = 1) {
  if (from > to) {
    throw Error("empty range " + std::to_string(from) + ".." + std::to_string(to));
  }
  auto const primes = primes_in(from, to);
  ScanSummary summary;
  summary.reports.reserve(primes.size());
  jobs = std::max(1U, jobs);
  for (std::size_t start = 0; start < primes.size(); start += jobs) {
    std::vector<std::future<SuiteReport>> batch;
    for (std::size_t i = start; i < std::min(primes.size(), start + jobs); ++i) {
      batch.push_back(std::async(std::launch::async,
                                 [p = primes[i], &opts] { return consistency_suite(p, opts); }));
    }
    for (auto& f : batch) summary.reports.push_back(f.get());
  }
  for (auto const& r : summary.reports) {
    summary.passed += r.count(Status::Pass);
    summary.failed += r.count(Status::Fail);
    summary.skipped += r.count(Status::Skipped);
  }
  return summary;
}

}  // namespace sl2coh
