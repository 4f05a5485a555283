#include <doctest.h>

#include <map>

#include "wonderful/cohomology.hpp"

using namespace wonderful;

namespace {

WeightedPart part(std::initializer_list<std::pair<unsigned, unsigned>> members, unsigned exponent) {
  WeightedPart p;
  for (auto [label, weight] : members) p.members.push_back({label, weight});
  p.exponent = exponent;
  return p;
}

// Independent count over all subsets of the building set: keep the nested
// ones (definitional test), then multiply the number of exponent choices.
QPolynomial poincare_by_subsets(const GroupId& g) {
  const auto b = building_set(g);
  std::map<unsigned, BigInt> coeffs;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << b.size()); ++bits) {
    std::vector<BuildingElement> s;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if ((bits >> i) & 1u) s.push_back(b[i]);
    }
    if (!is_nested_def(s, g)) continue;
    // polynomial in q of the exponent choices, element by element
    std::map<unsigned, BigInt> poly{{0, 1}};
    for (const auto& a : s) {
      std::vector<BuildingElement> below;
      for (const auto& c : s) {
        if (c != a && contained_in(c, a, g.r())) below.push_back(c);
      }
      const unsigned d = d_value(below, a, g.r());
      std::map<unsigned, BigInt> next;
      for (const auto& [k, c] : poly) {
        for (unsigned e = 1; e + 1 <= d; ++e) next[k + e] += c;
      }
      poly = std::move(next);
    }
    for (const auto& [k, c] : poly) coeffs[k] += c;
  }
  QPolynomial out;
  for (const auto& [k, c] : coeffs) out += QPolynomial::monomial(k, c);
  return out;
}

}  // namespace

TEST_CASE("admissible functions of small type A groups") {
  const auto a3 = enumerate_admissible(GroupId(1, 1, 3));
  REQUIRE(a3.size() == 2);
  CHECK(a3[0].assignment.empty());
  REQUIRE(a3[1].assignment.size() == 1);
  CHECK(a3[1].assignment[0].first == BuildingElement::weak({1, 2, 3}, {0, 0, 0}, 1));
  CHECK(a3[1].assignment[0].second == 1);

  const auto a2 = enumerate_admissible(GroupId(1, 1, 2));
  REQUIRE(a2.size() == 1);
  CHECK(a2[0].assignment.empty());
}

TEST_CASE("every admissible function passes the admissibility check") {
  for (const GroupId& g : {GroupId(2, 1, 3), GroupId(2, 2, 3), GroupId(3, 3, 3), GroupId(1, 1, 5)}) {
    bool first = true;
    for_each_admissible(g, [&](const AdmissibleFunction& f) {
      if (first) CHECK(f.assignment.empty());
      first = false;
      CHECK(is_admissible(f));
    });
  }
}

TEST_CASE("brute-force Poincare polynomials") {
  CHECK(poincare_bruteforce(GroupId(1, 1, 3)) == QPolynomial{1, 1});
  CHECK(poincare_bruteforce(GroupId(1, 1, 4)) == QPolynomial{1, 5, 1});
  CHECK(poincare_bruteforce(GroupId(1, 1, 6)) == QPolynomial{1, 42, 127, 42, 1});
  CHECK(poincare_bruteforce(GroupId(2, 2, 3)) == poincare_bruteforce(GroupId(1, 1, 4)));
  CHECK(poincare_bruteforce(GroupId(4, 2, 3)) == poincare_bruteforce(GroupId(4, 1, 3)));
}

TEST_CASE("brute force agrees with a subset-by-subset count") {
  for (const GroupId& g : {GroupId(1, 1, 4), GroupId(2, 1, 2), GroupId(2, 2, 3), GroupId(3, 1, 2),
                           GroupId(3, 3, 2), GroupId(4, 1, 2)}) {
    CHECK_MESSAGE(poincare_bruteforce(g) == poincare_by_subsets(g), g.to_string());
  }
}

TEST_CASE("Poincare polynomial shape") {
  for (unsigned n = 2; n <= 6; ++n) {
    const QPolynomial p = poincare_bruteforce(GroupId(1, 1, n));
    CHECK(p.is_palindromic());
  }
  for (const GroupId& g : {GroupId(2, 1, 3), GroupId(3, 1, 3), GroupId(2, 2, 4), GroupId(3, 3, 3)}) {
    const QPolynomial p = poincare_bruteforce(g);
    CHECK(p.coefficient(0) == 1);
    CHECK(p.degree() <= g.n() - 1);
    for (const auto& [k, c] : p.coefficients()) CHECK(c > 0);
  }
}

TEST_CASE("partition of the worked G(4,1,13) monomial") {
  WeightedPartition p;
  p.ground = 17;
  p.parts = {part({{1, 0}, {3, 0}, {6, 0}, {13, 0}, {15, 0}}, 3),
             part({{2, 0}, {8, 0}, {11, 0}, {14, 2}}, 2),
             part({{4, 0}, {5, 3}, {12, 2}}, 1),
             part({{7, 0}, {9, 3}, {10, 2}}, 1),
             part({{16, 0}, {17, 0}}, 0)};
  const AdmissibleFunction f = decode_partition(p, GroupId(4, 1, 13));
  CHECK(f.all_weak());
  CHECK(f.degree() == 7);
  CHECK(encode_partition(f) == p);
  CHECK(p.to_string() == "{1,3,6,13,15}^3 {2,8,11,14^2}^2 {4,5^3,12^2}^1 {7,9^3,10^2}^1 {16,17}^0");
}

TEST_CASE("partition examples") {
  const GroupId a3(1, 1, 3);
  AdmissibleFunction triple{a3, {{BuildingElement::weak({1, 2, 3}, {0, 0, 0}, 1), 1}}};
  WeightedPartition expected;
  expected.ground = 3;
  expected.parts = {part({{1, 0}, {2, 0}, {3, 0}}, 1)};
  CHECK(encode_partition(triple) == expected);
  CHECK(decode_partition(expected, a3) == triple);

  const AdmissibleFunction zero{a3, {}};
  CHECK(decode_partition(encode_partition(zero), a3) == zero);

  AdmissibleFunction with_strong{GroupId(2, 1, 3), {{BuildingElement::strong(0b111), 2}}};
  CHECK_THROWS_AS(encode_partition(with_strong), std::invalid_argument);
}

TEST_CASE("malformed partitions are rejected") {
  const GroupId a3(1, 1, 3);
  WeightedPartition p;
  p.ground = 3;
  CHECK_THROWS_AS(decode_partition(p, a3), std::invalid_argument);

  p.parts = {part({{1, 0}, {2, 0}, {3, 0}}, 2)};  // exponent above |I| - 2
  CHECK_THROWS_AS(decode_partition(p, a3), std::invalid_argument);

  p.parts = {part({{1, 0}, {2, 0}}, 1)};  // does not cover the ground set
  CHECK_THROWS_AS(decode_partition(p, a3), std::invalid_argument);

  p.parts = {part({{1, 0}, {2, 1}, {3, 0}}, 1)};  // weight beyond r - 1
  CHECK_THROWS_AS(decode_partition(p, a3), std::invalid_argument);
}

TEST_CASE("encode and decode are inverse on weak monomials") {
  for (unsigned r = 1; r <= 3; ++r) {
    for (unsigned n = 2; n <= 4; ++n) {
      const GroupId g(r, 1, n);
      EnumerationOptions weak;
      weak.weak_only = true;
      for_each_admissible(
          g,
          [&](const AdmissibleFunction& f) { CHECK(decode_partition(encode_partition(f), g) == f); },
          weak);
    }
  }
}
