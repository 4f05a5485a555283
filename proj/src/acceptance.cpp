#include "wonderful/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "wonderful/cohomology.hpp"
#include "wonderful/faces.hpp"
#include "wonderful/formulas.hpp"

namespace wonderful {

namespace {

class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(bool ok, const std::string& what) {
  if (!ok) throw CheckFailed(what);
}

// Time limits in seconds.
constexpr double kLimitTypeAPrinted = 1;
constexpr double kLimitTypeAOracle = 30;
constexpr double kLimitFullMonomial = 300;
constexpr double kLimitTubings = 60;
constexpr double kLimitNested = 120;

// Building sets up to this size are compared on every subset.
constexpr std::size_t kLiteralSubsetLimit = 17;
constexpr unsigned kRandomSubsetsPerGroup = 3000;

QPolynomial series_poincare_at(const TruncatedSeries& s, unsigned n) {
  return extract_integral(s, n, 0, 0, factorial(n));
}

std::string type_a_printed() {
  const QPolynomial expected{1, 42, 127, 42, 1};
  const QPolynomial got = poincare_from_psi(6);
  check(got == expected, "n = 6 gave " + got.to_string());
  return got.to_string();
}

std::string type_a_oracle() {
  for (unsigned n = 2; n <= 6; ++n) {
    const QPolynomial s = poincare_from_psi(n);
    const QPolynomial b = poincare_bruteforce(GroupId(1, 1, n));
    check(s == b, "n = " + std::to_string(n) + ": series " + s.to_string() + ", enumeration " + b.to_string());
  }
  return "n = 2..6 agree";
}

std::string full_monomial() {
  const unsigned cases[][2] = {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 3}};
  unsigned literal_failures = 0;
  std::string literal_note;
  for (auto [r, n] : cases) {
    const GroupId g(r, 1, n);
    const QPolynomial b = poincare_bruteforce(g);
    const QPolynomial s = series_poincare_at(phi_full_monomial(r, n), n);
    check(s == b, g.to_string() + ": series " + s.to_string() + ", enumeration " + b.to_string());
    try {
      const QPolynomial lit = series_poincare_at(phi_full_monomial(r, n, GammaReading::Literal), n);
      if (lit != b) {
        ++literal_failures;
        literal_note = g.to_string() + " gives " + lit.to_string();
      }
    } catch (const IntegralityError&) {
      ++literal_failures;
      literal_note = g.to_string() + " is not integral";
    }
  }
  check(literal_failures > 0, "the literal gamma reading agreed with the enumeration everywhere");
  return "6 groups agree; literal reading fails on " + std::to_string(literal_failures) + " (" +
         literal_note + ")";
}

std::string rr() {
  check(phi_rr(3, 5) == phi_full_monomial(3, 5), "phi_rr(3) differs from phi_full_monomial(3) through t^5");
  const TruncatedSeries phi2 = phi_rr(2, 4);
  for (unsigned n = 3; n <= 4; ++n) {
    const QPolynomial s = series_poincare_at(phi2, n);
    const QPolynomial b = poincare_bruteforce(GroupId(2, 2, n));
    check(s == b, "G(2,2," + std::to_string(n) + "): series " + s.to_string() + ", enumeration " + b.to_string());
  }
  const QPolynomial d3 = series_poincare_at(phi2, 3);
  const QPolynomial a3 = poincare_bruteforce(GroupId(1, 1, 4));
  check(d3 == a3 && a3 == QPolynomial{1, 5, 1}, "D3 = A3 check: " + d3.to_string() + " vs " + a3.to_string());
  return "G(3,3) = G(3,1) through t^5; G(2,2,3), G(2,2,4) agree; D3 = A3 = " + a3.to_string();
}

std::string kirkman_cayley_identity() {
  const TruncatedSeries f = f_type_a(15);
  for (unsigned n = 2; n <= 8; ++n) {
    for (unsigned s = 1; s <= n - 1; ++s) {
      const unsigned t = n + s - 1;
      const Rational v = f.coeff({0, t, s, 0}) * (Rational(factorial(t)) / Rational(factorial(n)));
      check(v == Rational(kirkman_cayley(n, s)),
            "n = " + std::to_string(n) + ", s = " + std::to_string(s) + ": " + v.get_str());
    }
  }
  return "2 <= n <= 8 agree";
}

// 2^shift * sum_i by_w[i] w^i, placed at t^deg
TruncatedSeries printed_layer(unsigned trunc, unsigned deg, unsigned shift, std::vector<long> by_w) {
  TruncatedSeries out(trunc);
  for (unsigned i = 0; i < by_w.size(); ++i) {
    if (by_w[i] != 0) out.add_term({0, deg, 0, i}, Rational(by_w[i]) * Rational(BigInt(1) << shift));
  }
  return out;
}

std::string printed_face_series() {
  TruncatedSeries b = TruncatedSeries::constant(4, 1);
  b += printed_layer(4, 1, 1, {0, 1});
  b += printed_layer(4, 2, 2, {0, 1, 2});
  b += printed_layer(4, 3, 3, {0, 1, 5, 5});
  b += printed_layer(4, 4, 4, {0, 1, 9, 21, 14});
  check(f_cy_b(4) == b, "B expansion through t^4 differs: " + f_cy_b(4).to_string());

  const TruncatedSeries d = f_cy_d(4);
  auto layer = [&d](unsigned deg) {
    TruncatedSeries out(4);
    for (const auto& [m, c] : d.terms()) {
      if (m.t == deg) out.add_term(m, c);
    }
    return out;
  };
  check(layer(4) == printed_layer(4, 4, 3, {0, 1, 10, 24, 16}), "D layer t^4 differs: " + layer(4).to_string());
  check(layer(3) == printed_layer(4, 3, 2, {0, 1, 5, 5}), "D layer t^3 differs: " + layer(3).to_string());
  return "B through t^4, D at t^3 and t^4 agree";
}

std::string join_entries(const std::vector<BigInt>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out + "]";
}

std::string tubings() {
  const auto d4 = fvector_tubings(dynkin_graph(FaceFamily::D, 4));
  check(d4 == std::vector<BigInt>{1, 10, 24, 16}, "D4 tubings " + join_entries(d4));
  check(fvector_from_fcy(FaceFamily::D, 4).entries == d4,
        "D4 series " + join_entries(fvector_from_fcy(FaceFamily::D, 4).entries));
  const auto d5 = fvector_tubings(dynkin_graph(FaceFamily::D, 5));
  check(fvector_from_fcy(FaceFamily::D, 5).entries == d5,
        "D5 series " + join_entries(fvector_from_fcy(FaceFamily::D, 5).entries) + " vs tubings " + join_entries(d5));
  for (unsigned n = 1; n <= 5; ++n) {
    const auto t = fvector_tubings(dynkin_graph(FaceFamily::B, n));
    const auto s = fvector_from_fcy(FaceFamily::B, n).entries;
    check(s == t, "B" + std::to_string(n) + " series " + join_entries(s) + " vs tubings " + join_entries(t));
  }
  return "D4 = [1,10,24,16], D5 = " + join_entries(d5) + ", B1..B5 agree";
}

std::string plane_trees() {
  const TruncatedSeries f = f_type_a(11);
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned s = 1; s <= n - 1; ++s) {
      const unsigned t = n + s - 1;
      const BigInt trees = count_plane_trees(n, s);
      const Rational v = f.coeff({0, t, s, 0}) * Rational(factorial(t));
      check(v == Rational(trees), "n = " + std::to_string(n) + ", s = " + std::to_string(s) + ": " +
                                      trees.get_str() + " trees vs " + v.get_str());
    }
  }
  return "2 <= n <= 6 agree";
}

std::string euler_properties() {
  const TruncatedSeries x = x_type_a(6);
  for (unsigned n : {3u, 5u, 7u}) {
    check(x.coeff({0, n - 1, 0, 0}) == 0, "type A series nonzero at t^" + std::to_string(n - 1));
  }
  const TruncatedSeries eb = euler_bd(FaceFamily::B, 4);
  const TruncatedSeries ed = euler_bd(FaceFamily::D, 4);
  for (unsigned n : {2u, 4u}) {
    check(eb.coeff({0, n, 0, 0}) == 0, "B series nonzero at t^" + std::to_string(n));
  }
  // D_n only exists from n = 4 on
  check(ed.coeff({0, 4, 0, 0}) == 0, "D series nonzero at t^4");
  const BigInt from_series = euler_from_series(FaceFamily::A, 4);
  const BigInt from_cells = euler_cw(FaceFamily::A, 4);
  check(from_series == from_cells, "A4: series " + from_series.get_str() + ", cells " + from_cells.get_str());
  return "parity holds; A4 chi = " + from_cells.get_str() + " both ways";
}

std::vector<GroupId> small_groups() {
  std::vector<GroupId> out;
  for (unsigned r = 1; r <= 3; ++r) {
    for (unsigned p = 1; p <= r; ++p) {
      if (r % p != 0 || (p != 1 && p != r)) continue;
      for (unsigned n = 2; n <= 4; ++n) out.emplace_back(r, p, n);
    }
  }
  return out;
}

std::string describe(std::span<const BuildingElement> s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + s[i].to_string();
  return out + "}";
}

void compare_nested(std::span<const BuildingElement> s, const GroupId& g) {
  const bool pairwise = is_nested(s, g);
  const bool definition = is_nested_def(s, g);
  check(pairwise == definition, g.to_string() + " " + describe(s) + ": pairwise " + std::to_string(pairwise) +
                                    ", definition " + std::to_string(definition));
}

// Smallest subsets that can make the nested test fail: a pair, or for
// G(2,2,n) two coordinate planes spanned by lines (four lines) or one plane
// and a strong element (three elements).
std::size_t witness_size(const GroupId& g) { return g.variant() == Variant::RR && g.r() == 2 ? 4 : 2; }

void compare_small_subsets(const std::vector<BuildingElement>& b, const GroupId& g, std::size_t max_size) {
  std::vector<BuildingElement> s;
  std::function<void(std::size_t)> grow = [&](std::size_t start) {
    compare_nested(s, g);
    if (s.size() == max_size) return;
    for (std::size_t i = start; i < b.size(); ++i) {
      s.push_back(b[i]);
      grow(i + 1);
      s.pop_back();
    }
  };
  grow(0);
}

// Literal comparison on every subset for small building sets. For larger
// ones both predicates fail upward (a set containing a non-nested subset is
// not nested), and every failure of the structural test has a witness of at
// most witness_size elements. Agreement on all subsets up to that size,
// plus the definition holding on every set of the nested-set complex, covers
// every subset. Random larger subsets are compared on top.
std::string nested_equivalence() {
  std::size_t literal = 0, reduced = 0;
  std::mt19937 rng(20240607);
  for (const GroupId& g : small_groups()) {
    const std::vector<BuildingElement> b = building_set(g);
    const std::size_t m = b.size();
    std::vector<BuildingElement> s;
    if (m <= kLiteralSubsetLimit) {
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        s.clear();
        for (std::size_t i = 0; i < m; ++i) {
          if (mask >> i & 1u) s.push_back(b[i]);
        }
        compare_nested(s, g);
      }
      ++literal;
      continue;
    }
    compare_small_subsets(b, g, witness_size(g));
    NestedSetComplex complex(g);
    complex.for_each([&](std::span<const std::size_t> idx) {
      s.clear();
      for (std::size_t i : idx) s.push_back(complex.elements()[i]);
      check(is_nested_def(s, g), g.to_string() + " " + describe(s) + " passes the structural test but fails the definition");
    });
    std::uniform_int_distribution<std::size_t> pick(0, m - 1), size(3, 6);
    for (unsigned k = 0; k < kRandomSubsetsPerGroup; ++k) {
      std::vector<std::size_t> idx;
      const std::size_t want = size(rng);
      while (idx.size() < want) {
        std::size_t i = pick(rng);
        if (std::find(idx.begin(), idx.end(), i) == idx.end()) idx.push_back(i);
      }
      std::sort(idx.begin(), idx.end());
      s.clear();
      for (std::size_t i : idx) s.push_back(b[i]);
      compare_nested(s, g);
    }
    ++reduced;
  }
  return std::to_string(literal) + " groups on every subset, " + std::to_string(reduced) +
         " through small subsets and the nested-set complex";
}

std::string bijection_round_trip() {
  unsigned long long total = 0;
  for (unsigned r = 1; r <= 3; ++r) {
    for (unsigned n = 2; n <= 5; ++n) {
      const GroupId g(r, 1, n);
      for_each_admissible(
          g,
          [&](const AdmissibleFunction& f) {
            const WeightedPartition p = encode_partition(f);
            const AdmissibleFunction back = decode_partition(p, g);
            check(back == f, g.to_string() + ": round trip fails at " + p.to_string());
            ++total;
          },
          {.weak_only = true});
    }
  }
  return std::to_string(total) + " weak-support monomials round-trip";
}

struct Criterion {
  const char* title;
  double limit;
  std::string (*run)();
};

const Criterion kCriteria[kCriterionCount] = {
    {"type A Betti numbers at n = 6", kLimitTypeAPrinted, type_a_printed},
    {"type A series vs enumeration, n = 2..6", kLimitTypeAOracle, type_a_oracle},
    {"G(r,1,n) series vs enumeration", kLimitFullMonomial, full_monomial},
    {"G(r,r,n) series vs enumeration", 0, rr},
    {"Kirkman-Cayley numbers from the plane-tree series", 0, kirkman_cayley_identity},
    {"B and D face series expansions", 0, printed_face_series},
    {"face series vs graph-associahedron tubings", kLimitTubings, tubings},
    {"plane-tree enumeration vs series", 0, plane_trees},
    {"Euler characteristic parity and cell count", 0, euler_properties},
    {"nested-set test vs definition", kLimitNested, nested_equivalence},
    {"weighted partition round trip", 0, bijection_round_trip},
};

}  // namespace

std::string format_result(const CriterionResult& r) {
  char timing[48];
  std::snprintf(timing, sizeof timing, "%.2f s", r.seconds);
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.title << "  ("
      << timing;
  if (r.limit_seconds > 0) out << " of " << r.limit_seconds << " s";
  out << ")  " << r.detail;
  return out.str();
}

CriterionResult run_criterion(unsigned id) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("no criterion " + std::to_string(id));
  const Criterion& c = kCriteria[id - 1];
  CriterionResult result{id, c.title, false, 0, c.limit, ""};
  const auto start = std::chrono::steady_clock::now();
  try {
    result.detail = c.run();
    result.passed = true;
  } catch (const std::exception& e) {
    result.detail = e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (result.passed && c.limit > 0 && result.seconds > c.limit) {
    result.passed = false;
    result.detail = "over the time limit; " + result.detail;
  }
  return result;
}

std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (unsigned id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id));
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace wonderful
