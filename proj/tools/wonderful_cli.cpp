// Command line front end: Betti numbers, face counts, Euler characteristics,
// series dumps and the self-test.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wonderful/acceptance.hpp"
#include "wonderful/cohomology.hpp"
#include "wonderful/faces.hpp"
#include "wonderful/formulas.hpp"
#include "wonderful/serialize.hpp"

using namespace wonderful;

namespace {

enum Exit { kOk = 0, kInternal = 1, kMismatch = 2, kGuard = 3, kBadArgs = 4 };

constexpr unsigned kMaxDumpTrunc = 12;

struct Options {
  unsigned r = 1;
  unsigned p = 1;
  std::optional<unsigned> n;
  std::string type;
  std::string method;
  std::optional<unsigned> trunc;
  std::string format = "json";
  std::size_t guard = kDefaultBuildingGuard;
  std::string name;
  std::string gamma = "standard";
};

class BadArgs : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

unsigned require_n(const Options& o) {
  if (!o.n) throw BadArgs("--n is required");
  return *o.n;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string list_text(const std::vector<BigInt>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out + "]";
}

int run_poincare(const Options& o) {
  const unsigned n = require_n(o);
  const GroupId asked(o.r, o.p, n);
  // p < r gives the same model as p = 1
  const bool normalized = o.p < o.r && o.p != 1;
  const GroupId g = normalized ? GroupId(o.r, 1, n) : asked;
  const std::string method = o.method.empty() ? "series" : o.method;
  if (method != "series" && method != "bruteforce" && method != "both") {
    throw BadArgs("--method must be series, bruteforce or both");
  }

  std::optional<QPolynomial> series, brute;
  if (method != "bruteforce") series = poincare_from_series(g);
  if (method != "series") brute = poincare_bruteforce(g, {.guard = o.guard});
  const bool match = !(series && brute) || *series == *brute;
  const std::string note = normalized ? "Y_" + asked.to_string() + " = Y_" + g.to_string() : "";

  if (o.format == "json") {
    Json out;
    if (method == "both") {
      out = {{"group", {{"r", asked.r()}, {"p", asked.p()}, {"n", n}}},
             {"method", "both"},
             {"series", to_json(*series)},
             {"bruteforce", to_json(*brute)},
             {"verdict", match ? "match" : "mismatch"}};
    } else {
      out = poincare_report(asked, method, series ? *series : *brute);
    }
    if (!note.empty()) out["note"] = note;
    print_json(out);
  } else if (o.format == "csv") {
    std::cout << "method,degree,coefficient\n";
    auto rows = [](const std::string& m, const QPolynomial& p) {
      for (const auto& [k, c] : p.coefficients()) std::cout << m << "," << k << "," << c.get_str() << "\n";
    };
    if (series) rows("series", *series);
    if (brute) rows("bruteforce", *brute);
  } else {
    if (!note.empty()) std::cout << note << "\n";
    if (series) std::cout << asked.to_string() << " series: " << series->to_string() << "\n";
    if (brute) std::cout << asked.to_string() << " bruteforce: " << brute->to_string() << "\n";
    if (method == "both") std::cout << "verdict: " << (match ? "match" : "mismatch") << "\n";
  }
  return match ? kOk : kMismatch;
}

int run_fvector(const Options& o) {
  const FaceFamily family = parse_family(o.type);
  const unsigned n = require_n(o);
  const std::string method = o.method.empty() ? "series" : o.method;
  if (method != "series" && method != "tubings" && method != "both") {
    throw BadArgs("--method must be series, tubings or both");
  }
  bool degenerate = family == FaceFamily::D && n == 3;
  std::optional<std::vector<BigInt>> series, tubes;
  if (method != "tubings") {
    FVector f = fvector_from_fcy(family, n);
    degenerate = f.degenerate;
    series = f.entries;
  }
  if (method != "series") {
    const Graph g = degenerate ? dynkin_graph(FaceFamily::A, 4) : dynkin_graph(family, n);
    tubes = fvector_tubings(g);
  }
  const bool match = !(series && tubes) || *series == *tubes;

  if (o.format == "json") {
    Json out = fvector_report(family, n, series ? *series : *tubes);
    out["method"] = method;
    if (method == "both") {
      Json t = Json::array();
      for (const auto& e : *tubes) t.push_back(to_json(e));
      out["tubings"] = t;
      out["verdict"] = match ? "match" : "mismatch";
    }
    if (degenerate) out["degenerate"] = "D3 = A3";
    print_json(out);
  } else if (o.format == "csv") {
    std::cout << "method,index,count\n";
    auto rows = [](const std::string& m, const std::vector<BigInt>& v) {
      for (std::size_t i = 0; i < v.size(); ++i) std::cout << m << "," << i << "," << v[i].get_str() << "\n";
    };
    if (series) rows("series", *series);
    if (tubes) rows("tubings", *tubes);
  } else {
    const std::string label = to_string(family) + std::to_string(n);
    if (degenerate) std::cout << "D3 = A3\n";
    if (series) std::cout << label << " series: " << list_text(*series) << "\n";
    if (tubes) std::cout << label << " tubings: " << list_text(*tubes) << "\n";
    if (method == "both") std::cout << "verdict: " << (match ? "match" : "mismatch") << "\n";
  }
  return match ? kOk : kMismatch;
}

bool cells_in_range(FaceFamily family, unsigned n) {
  switch (family) {
    case FaceFamily::A:
      return n >= 2 && n <= 7;
    case FaceFamily::B:
      return n >= 1 && n <= 5;
    case FaceFamily::D:
      return n >= 4 && n <= 5;
  }
  return false;
}

int run_euler(const Options& o) {
  const FaceFamily family = parse_family(o.type);
  const unsigned n = require_n(o);
  if (n > kMaxDumpTrunc) throw GuardError("--n above " + std::to_string(kMaxDumpTrunc));
  const BigInt chi = euler_from_series(family, n);
  std::optional<BigInt> cells;
  if (cells_in_range(family, n)) cells = euler_cw(family, n);
  const bool match = !cells || *cells == chi;

  if (o.format == "json") {
    Json out = {{"type", to_string(family)}, {"n", n}, {"euler", to_json(chi)}};
    if (cells) {
      out["cells"] = to_json(*cells);
      out["verdict"] = match ? "match" : "mismatch";
    }
    print_json(out);
  } else if (o.format == "csv") {
    std::cout << "method,euler\nseries," << chi.get_str() << "\n";
    if (cells) std::cout << "cells," << cells->get_str() << "\n";
  } else {
    std::cout << to_string(family) << n << " euler: " << chi.get_str() << "\n";
    if (cells) std::cout << "cells: " << cells->get_str() << "\nverdict: " << (match ? "match" : "mismatch") << "\n";
  }
  return match ? kOk : kMismatch;
}

int run_dump(const Options& o) {
  if (o.name.empty()) throw BadArgs("--name is required");
  unsigned trunc = 0;
  if (o.trunc) {
    trunc = *o.trunc;
  } else if (o.n) {
    trunc = *o.n + 2;
  } else {
    throw BadArgs("give --trunc or --n");
  }
  if (trunc > kMaxDumpTrunc) {
    throw GuardError("truncation " + std::to_string(trunc) + " above " + std::to_string(kMaxDumpTrunc));
  }
  if (o.gamma != "standard" && o.gamma != "literal") throw BadArgs("--gamma-reading must be standard or literal");
  const GammaReading reading = o.gamma == "literal" ? GammaReading::Literal : GammaReading::Standard;
  const TruncatedSeries s = named_series(o.name, o.r, trunc, reading);

  if (o.format == "json") {
    print_json({{"name", o.name}, {"r", o.r}, {"trunc", trunc}, {"terms", to_json(s)}});
  } else if (o.format == "csv") {
    std::cout << "q,t,z,w,numerator,denominator\n";
    for (const auto& [m, c] : s.terms()) {
      std::cout << m.q << "," << m.t << "," << m.z << "," << m.w << "," << c.get_num().get_str() << ","
                << c.get_den().get_str() << "\n";
    }
  } else {
    std::cout << s.to_string() << "\n";
  }
  return kOk;
}

int run_selftest() {
  unsigned failed = 0;
  run_acceptance([&failed](const CriterionResult& r) {
    std::cout << format_result(r) << std::endl;
    if (!r.passed) ++failed;
  });
  std::cout << (kCriterionCount - failed) << " of " << kCriterionCount << " criteria passed\n";
  return failed == 0 ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers and face counts of minimal wonderful models for G(r,p,n)", "wonderful"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };

  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of Y_G(r,p,n)");
  poincare->add_option("--r", o.r, "Order of the roots of unity")->check(CLI::Range(1, 255));
  poincare->add_option("--p", o.p, "Divisor of r");
  poincare->add_option("--n", o.n, "Rank")->required();
  poincare->add_option("--method", o.method, "series, bruteforce or both");
  poincare->add_option("--seed-guard", o.guard, "Largest building set the enumeration accepts");
  add_format(poincare);

  auto* fvector = app.add_subcommand("fvector", "Face counts of the spherical model polytopes");
  fvector->add_option("--type", o.type, "A, B or D")->required();
  fvector->add_option("--n", o.n, "Rank")->required();
  fvector->add_option("--method", o.method, "series, tubings or both");
  add_format(fvector);

  auto* euler = app.add_subcommand("euler", "Euler characteristic of the real compact model");
  euler->add_option("--type", o.type, "A, B or D")->required();
  euler->add_option("--n", o.n, "Rank")->required();
  add_format(euler);

  auto* dump = app.add_subcommand("series-dump", "Dump a generating series");
  dump->add_option("--name", o.name, "psi, K, gamma, Gamma, calK, phiFull, phiRR, F, X, tildeGamma, FcyB, FcyD")
      ->required();
  dump->add_option("--r", o.r, "Order of the roots of unity")->check(CLI::Range(1, 255));
  dump->add_option("--n", o.n, "Rank; the default truncation is n + 2");
  dump->add_option("--trunc", o.trunc, "Truncation order in t");
  dump->add_option("--gamma-reading", o.gamma, "standard or literal (debugging only)");
  add_format(dump);

  auto* selftest = app.add_subcommand("selftest", "Run every acceptance cross-check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadArgs;
  }

  try {
    if (poincare->parsed()) return run_poincare(o);
    if (fvector->parsed()) return run_fvector(o);
    if (euler->parsed()) return run_euler(o);
    if (dump->parsed()) return run_dump(o);
    if (selftest->parsed()) return run_selftest();
  } catch (const GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kGuard;
  } catch (const IntegralityError& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadArgs;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kBadArgs;
}
