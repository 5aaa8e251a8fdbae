#pragma once

// Text and JSON rendering used by the command-line tool.

#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "sl2coh/abelian.hpp"
#include "sl2coh/cohomology_tables.hpp"
#include "sl2coh/coset_engine.hpp"
#include "sl2coh/verify.hpp"

namespace sl2coh {

/// Keys keep insertion order so output matches the documented schema.
using json = nlohmann::ordered_json;

struct DegreeRange {
  int first = 0;
  int last = 0;
};

/// "a..b" or a single degree "n".
inline DegreeRange parse_degree_range(std::string const& text) {
  auto bad = [&] { return Error("bad degree range '" + text + "', expected a..b"); };
  auto to_int = [&](std::string const& s) {
    if (s.empty() || s.size() > 6 ||
        s.find_first_not_of("0123456789") != std::string::npos) {
      throw bad();
    }
    return std::stoi(s);
  };
  auto const dots = text.find("..");
  DegreeRange r;
  if (dots == std::string::npos) {
    r.first = r.last = to_int(text);
  } else {
    r.first = to_int(text.substr(0, dots));
    r.last = to_int(text.substr(dots + 2));
  }
  if (r.first > r.last) throw bad();
  return r;
}

inline Family parse_family(std::string const& name) {
  for (auto f : {Family::SL2Z, Family::Gamma0, Family::PGamma0, Family::SL2Zp}) {
    if (name == to_string(f)) return f;
  }
  throw Error("unknown group '" + name + "'");
}

/// One "H^d = ..." line per degree in range, then the period note.
inline std::string render_table_text(CohomologyTable const& t, DegreeRange range) {
  std::ostringstream os;
  os << "H^*(" << display_name(t.group, t.p) << "; Z)\n";
  for (int d = range.first; d <= range.last; ++d) {
    os << "H^" << d << " = " << t.at(d).to_string() << "\n";
  }
  os << "period: 2 above degree " << t.periodic_above << "\n";
  return os.str();
}

/// {"degree": d, "free_rank": r, "invariant_factors": [...]}
inline json cohomology_row(int degree, FinAbGroup const& g) {
  json row;
  row["degree"] = degree;
  json const body = g;
  row.update(body);
  return row;
}

inline json table_to_json(CohomologyTable const& t, DegreeRange range) {
  json rows = json::array();
  for (int d = range.first; d <= range.last; ++d) rows.push_back(cohomology_row(d, t.at(d)));
  json j;
  j["p"] = t.p ? json(t.p->value()) : json(nullptr);
  j["group"] = to_string(t.group);
  j["cohomology"] = std::move(rows);
  return j;
}

struct ParsedTable {
  Family group;
  std::optional<std::int64_t> p;
  std::vector<std::pair<int, FinAbGroup>> rows;
};

inline ParsedTable table_from_json(json const& j) {
  ParsedTable t{parse_family(j.at("group").get<std::string>()), std::nullopt, {}};
  if (!j.at("p").is_null()) t.p = j.at("p").get<std::int64_t>();
  for (auto const& row : j.at("cohomology")) {
    t.rows.emplace_back(row.at("degree").get<int>(), row.get<FinAbGroup>());
  }
  return t;
}

inline json table_to_json(ParsedTable const& t) {
  json rows = json::array();
  for (auto const& [d, g] : t.rows) rows.push_back(cohomology_row(d, g));
  json j;
  j["p"] = t.p ? json(*t.p) : json(nullptr);
  j["group"] = to_string(t.group);
  j["cohomology"] = std::move(rows);
  return j;
}

inline json matrix_to_json(FpMat const& m) {
  return json::array({json::array({m.a, m.b}),
                                json::array({m.c, m.d})});
}

inline std::string render_decomposition_text(OrbitDecomposition const& dec,
                                             DecompositionReport const& verdict) {
  std::ostringstream os;
  os << "B-orbits on G/C" << dec.k << ", p = " << dec.p.value() << "\n";
  os << std::left << std::setw(22) << "representative" << std::setw(8) << "size"
     << std::setw(12) << "stabilizer"
     << "root\n";
  for (auto const& o : dec.orbits) {
    std::string root = "-";
    if (o.fixed_root) root = std::to_string(*o.fixed_root);
    if (o.singular) root = "singular";
    os << std::left << std::setw(22) << o.representative.to_string() << std::setw(8)
       << o.size << std::setw(12) << o.stabilizer_order << root << "\n";
  }
  os << (verdict.pass ? "PASS" : "MISMATCH") << ": " << dec.orbits.size() << " orbits; "
     << verdict.diff() << "\n";
  return os.str();
}

inline json decomposition_to_json(OrbitDecomposition const& dec,
                                            DecompositionReport const& verdict) {
  json orbits = json::array();
  for (auto const& o : dec.orbits) {
    orbits.push_back({{"representative", matrix_to_json(o.representative)},
                      {"size", o.size},
                      {"stabilizer_order", o.stabilizer_order},
                      {"fixed_root", o.fixed_root ? json(*o.fixed_root)
                                                  : json(nullptr)},
                      {"singular", o.singular}});
  }
  return {{"p", dec.p.value()},
          {"k", dec.k},
          {"orbits", std::move(orbits)},
          {"verdict", verdict.pass ? "PASS" : "MISMATCH"}};
}

inline std::string render_suite_text(SuiteReport const& r) {
  std::ostringstream os;
  os << "p = " << r.p.value() << "\n";
  for (auto const& c : r.results) {
    os << "  " << std::left << std::setw(8) << to_string(c.status) << std::setw(24) << c.name
       << c.detail << "\n";
  }
  return os.str();
}

inline json suite_to_json(SuiteReport const& r) {
  json checks = json::array();
  for (auto const& c : r.results) {
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  return {{"p", r.p.value()}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

}  // namespace sl2coh
