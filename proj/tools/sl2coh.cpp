// sl2coh: cohomology tables for Gamma0(p), PGamma0(p), SL2(Z[1/p]) and
// their brute-force cross-checks over SL2(F_p).
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "sl2coh/sl2coh.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

struct TableArgs {
  std::string group;
  std::optional<std::int64_t> p;
  std::string degrees = "0..8";
  std::string format = "text";
};

struct DecomposeArgs {
  std::int64_t p = 0;
  int k = 2;
  std::string format = "text";
  std::int64_t bound = sl2coh::kDefaultBound;
  bool check_stabilizers = false;
};

struct VerifyArgs {
  std::int64_t p = 0;
  std::string checks = "all";
  std::string format = "text";
  std::int64_t bound = sl2coh::kDefaultBound;
  int max_degree = 8;
};

struct ScanArgs {
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::string checks = "all";
  std::int64_t bound = sl2coh::kDefaultBound;
  unsigned jobs = 0;
  bool quiet = false;
};

int run_table(TableArgs const& a) {
  auto const family = sl2coh::parse_family(a.group);
  std::optional<sl2coh::Prime> p;
  if (a.p) p = sl2coh::make_prime(*a.p);
  if (family != sl2coh::Family::SL2Z && !p) {
    throw sl2coh::Error("--p is required for group " + a.group);
  }
  auto const range = sl2coh::parse_degree_range(a.degrees);
  auto const table = sl2coh::cohomology_table(family, p, range.last);
  if (a.format == "json") {
    std::cout << sl2coh::table_to_json(table, range).dump() << "\n";
  } else {
    std::cout << sl2coh::render_table_text(table, range);
  }
  return kOk;
}

int run_decompose(DecomposeArgs const& a) {
  auto const p = sl2coh::make_prime(a.p);
  sl2coh::require_above_three(p, "decompositions need p > 3");
  auto const space = sl2coh::build_coset_space(p, a.k, a.bound);
  auto const dec = sl2coh::decompose_under_B(
      space, sl2coh::DecomposeOptions{a.check_stabilizers, a.bound});
  auto const verdict = sl2coh::verify_decomposition(dec);
  if (a.format == "json") {
    std::cout << sl2coh::decomposition_to_json(dec, verdict).dump() << "\n";
  } else {
    std::cout << sl2coh::render_decomposition_text(dec, verdict);
  }
  return verdict.pass ? kOk : kVerificationFailed;
}

int run_verify(VerifyArgs const& a) {
  auto const p = sl2coh::make_prime(a.p);
  sl2coh::SuiteOptions opts{sl2coh::select_checks(a.checks), a.bound, a.max_degree};
  auto const report = sl2coh::consistency_suite(p, opts);
  if (a.format == "json") {
    std::cout << sl2coh::suite_to_json(report).dump() << "\n";
  } else {
    std::cout << sl2coh::render_suite_text(report);
    std::cout << (report.passed() ? "all checks passed" : "FAILED") << "\n";
  }
  return report.passed() ? kOk : kVerificationFailed;
}

int run_scan(ScanArgs const& a) {
  sl2coh::SuiteOptions opts{sl2coh::select_checks(a.checks), a.bound, 8};
  auto jobs = a.jobs != 0 ? a.jobs : std::max(1U, std::thread::hardware_concurrency());
  auto const summary = sl2coh::scan(a.from, a.to, opts, jobs);
  for (auto const& r : summary.reports) {
    if (!a.quiet || !r.passed()) std::cout << sl2coh::render_suite_text(r);
  }
  std::cout << "primes: " << summary.reports.size() << ", passed: " << summary.passed
            << ", failed: " << summary.failed << ", skipped: " << summary.skipped << "\n";
  return summary.ok() ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral cohomology of Gamma0(p), PGamma0(p) and SL2(Z[1/p])"};
  app.require_subcommand(1);
  std::vector<std::string> const formats{"text", "json"};

  TableArgs table;
  auto* t = app.add_subcommand("table", "print a cohomology table");
  t->add_option("--group", table.group, "sl2z, gamma0, pgamma0 or sl2zp")
      ->required()
      ->check(CLI::IsMember({"sl2z", "gamma0", "pgamma0", "sl2zp"}));
  t->add_option("--p", table.p, "prime (not used for sl2z)");
  t->add_option("--degrees", table.degrees, "degree range a..b")->capture_default_str();
  t->add_option("--format", table.format)->check(CLI::IsMember(formats))->capture_default_str();

  DecomposeArgs decompose;
  auto* d = app.add_subcommand("decompose", "B-orbits on G/Ck with stabilizers");
  d->add_option("--p", decompose.p, "prime, 3 < p <= bound")->required();
  d->add_option("--k", decompose.k)->required()->check(CLI::IsMember({2, 4, 6}));
  d->add_option("--format", decompose.format)->check(CLI::IsMember(formats))->capture_default_str();
  d->add_option("--bound", decompose.bound, "enumeration bound; memory grows like p^3")
      ->capture_default_str();
  d->add_flag("--check-stabilizers", decompose.check_stabilizers,
              "recount every stabilizer by enumerating B");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "run the consistency suite for one prime");
  v->add_option("--p", verify.p)->required();
  v->add_option("--checks", verify.checks,
                "all, closed-form, brute-force or a comma list of check names")
      ->capture_default_str();
  v->add_option("--format", verify.format)->check(CLI::IsMember(formats))->capture_default_str();
  v->add_option("--bound", verify.bound, "enumeration bound; memory grows like p^3")
      ->capture_default_str();
  v->add_option("--max-degree", verify.max_degree)->check(CLI::Range(2, 1000))->capture_default_str();

  ScanArgs scan;
  auto* s = app.add_subcommand("scan", "run the consistency suite over a range of primes");
  s->add_option("--from", scan.from)->required();
  s->add_option("--to", scan.to)->required();
  s->add_option("--checks", scan.checks)->capture_default_str();
  s->add_option("--bound", scan.bound, "enumeration bound; memory grows like p^3")
      ->capture_default_str();
  s->add_option("--jobs", scan.jobs, "worker threads (0 = hardware concurrency)");
  s->add_flag("--quiet", scan.quiet, "print only failing primes and the summary");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto const code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*t) return run_table(table);
    if (*d) return run_decompose(decompose);
    if (*v) return run_verify(verify);
    if (*s) return run_scan(scan);
  } catch (sl2coh::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
