#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "wonderful/lattice.hpp"

using namespace wonderful;

namespace {

Mask mask(std::initializer_list<unsigned> coords) {
  Mask m = 0;
  for (unsigned i : coords) m |= Mask{1} << (i - 1);
  return m;
}

LatticeElement lat(const BuildingElement& e) { return LatticeElement::from(e); }

bool nested_by_definition_of_all_subsets(const GroupId& g, std::size_t& count) {
  const auto b = building_set(g);
  bool agree = true;
  count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << b.size()); ++bits) {
    std::vector<BuildingElement> s;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if ((bits >> i) & 1u) s.push_back(b[i]);
    }
    const bool def = is_nested_def(s, g);
    agree = agree && def == is_nested(s, g);
    if (def) ++count;
  }
  return agree;
}

unsigned long long building_size_formula(unsigned r, unsigned n) {
  unsigned long long total = (1ull << n) - 1;
  for (unsigned t = 2; t <= n; ++t) {
    unsigned long long c = 1;
    for (unsigned i = 0; i < t; ++i) c = c * (n - i) / (i + 1);
    unsigned long long pw = 1;
    for (unsigned i = 1; i < t; ++i) pw *= r;
    total += c * pw;
  }
  return total;
}

}  // namespace

TEST_CASE("group ids") {
  CHECK(GroupId(1, 1, 3).variant() == Variant::TypeA);
  CHECK(GroupId(3, 1, 3).variant() == Variant::FullMonomial);
  CHECK(GroupId(4, 2, 3).variant() == Variant::FullMonomial);
  CHECK(GroupId(3, 3, 3).variant() == Variant::RR);
  CHECK_THROWS_AS(GroupId(3, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(GroupId(2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(GroupId(0, 1, 3), std::invalid_argument);
}

TEST_CASE("building set examples") {
  const auto a3 = building_set(GroupId(1, 1, 3));
  REQUIRE(a3.size() == 4);
  for (const auto& e : a3) CHECK(e.is_weak());

  const auto b2 = building_set(GroupId(2, 1, 2));
  REQUIRE(b2.size() == 5);
  std::set<std::string> texts;
  for (const auto& e : b2) texts.insert(e.to_string());
  CHECK(texts == std::set<std::string>{"{0,1}", "{0,2}", "{0,1,2}", "{1, 2}", "{1, 2^1}"});

  const auto d3 = building_set(GroupId(2, 2, 3));
  CHECK(d3.size() == 11);
  CHECK(std::count_if(d3.begin(), d3.end(), [](const auto& e) { return e.is_strong(); }) == 1);
}

TEST_CASE("building set sizes follow the counting formula") {
  for (unsigned r = 1; r <= 4; ++r) {
    for (unsigned n = 2; n <= 6; ++n) {
      const GroupId g(r, 1, n);
      if (r == 1) continue;
      CHECK(building_set(g).size() == building_size_formula(r, n));
      CHECK(building_set_size(g) == building_size_formula(r, n));
    }
  }
  for (unsigned n = 2; n <= 7; ++n) {
    CHECK(building_set_size(GroupId(1, 1, n)) == (1ull << n) - 1 - n);
  }
}

TEST_CASE("weak part of the monomial building set with r = 1 is the type A building set") {
  for (unsigned n = 2; n <= 6; ++n) {
    std::vector<BuildingElement> weak;
    for (const auto& e : building_set(GroupId(2, 1, n))) {
      if (!e.is_weak()) continue;
      bool all_zero = true;
      for (unsigned i = 1; i <= n; ++i) all_zero = all_zero && e.block().weight(i) == 0;
      if (all_zero) weak.push_back(e);
    }
    CHECK(weak == building_set(GroupId(1, 1, n)));
  }
}

TEST_CASE("building sets are sorted and deterministic") {
  const auto b = building_set(GroupId(3, 1, 3));
  CHECK(std::is_sorted(b.begin(), b.end()));
  CHECK(b == building_set(GroupId(3, 1, 3)));
  CHECK(building_set(GroupId(4, 2, 3)) == building_set(GroupId(4, 1, 3)));
}

TEST_CASE("dimensions") {
  CHECK(BuildingElement::weak({1, 2}, {0, 0}, 2).dimension() == 1);
  CHECK(BuildingElement::strong(mask({1, 2, 3})).dimension() == 3);
  LatticeElement e;
  e.zero_set = mask({1});
  e.blocks.push_back(BuildingElement::weak({2, 3}, {0, 0}, 1).block());
  CHECK(e.dimension() == 2);
  CHECK(LatticeElement{}.dimension() == 0);
}

TEST_CASE("joins") {
  const auto w12 = BuildingElement::weak({1, 2}, {0, 0}, 2);
  const auto w23 = BuildingElement::weak({2, 3}, {0, 0}, 2);
  const auto w12b = BuildingElement::weak({1, 2}, {0, 1}, 2);

  CHECK(join(lat(w12), lat(w23), 2) == lat(BuildingElement::weak({1, 2, 3}, {0, 0, 0}, 2)));

  const LatticeElement z = join(lat(w12), lat(w12b), 2);
  CHECK(z.zero_set == mask({1, 2}));
  CHECK(z.blocks.empty());

  const LatticeElement m = join(lat(BuildingElement::strong(mask({1}))), lat(w23), 2);
  CHECK(m.zero_set == mask({1}));
  REQUIRE(m.blocks.size() == 1);
  CHECK(m.blocks[0] == w23.block());

  // weights align by a constant shift along the chain
  const auto a = BuildingElement::weak({1, 2}, {0, 1}, 3);
  const auto b = BuildingElement::weak({2, 3}, {0, 2}, 3);
  CHECK(join(lat(a), lat(b), 3) == lat(BuildingElement::weak({1, 2, 3}, {0, 1, 0}, 3)));

  // a block touching the zero set is absorbed
  const LatticeElement absorbed = join(lat(BuildingElement::strong(mask({2}))), lat(w12), 2);
  CHECK(absorbed.zero_set == mask({1, 2}));
  CHECK(absorbed.blocks.empty());
}

TEST_CASE("join is commutative, associative, idempotent and subadditive") {
  std::mt19937 rng(2024);
  for (unsigned r = 1; r <= 3; ++r) {
    const GroupId g(r, 1, 5);
    const auto b = building_set(g);
    std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
    for (int round = 0; round < 300; ++round) {
      const auto x = lat(b[pick(rng)]);
      const auto y = join(lat(b[pick(rng)]), lat(b[pick(rng)]), r);
      const auto z = lat(b[pick(rng)]);
      CHECK(join(x, y, r) == join(y, x, r));
      CHECK(join(join(x, y, r), z, r) == join(x, join(y, z, r), r));
      CHECK(join(x, x, r) == x);
      CHECK(join(y, y, r) == y);
      CHECK(dimension(join(x, y, r)) <= dimension(x) + dimension(y));
      CHECK(subspace_leq(x, join(x, y, r), r));
    }
  }
}

TEST_CASE("membership") {
  LatticeElement zero12;
  zero12.zero_set = mask({1, 2});
  CHECK(in_building(zero12, GroupId(2, 1, 3)));
  CHECK_FALSE(in_building(zero12, GroupId(2, 2, 3)));
  CHECK(in_building(zero12, GroupId(3, 3, 3)));

  LatticeElement two;
  two.zero_set = mask({1});
  two.blocks.push_back(BuildingElement::weak({2, 3}, {0, 0}, 2).block());
  for (const GroupId& g : {GroupId(1, 1, 3), GroupId(2, 1, 3), GroupId(2, 2, 3)}) {
    CHECK_FALSE(in_building(two, g));
  }

  LatticeElement single;
  single.zero_set = mask({1});
  CHECK(in_building(single, GroupId(2, 1, 3)));
  CHECK_FALSE(in_building(single, GroupId(3, 3, 3)));
  CHECK_FALSE(in_building(single, GroupId(1, 1, 3)));
}

TEST_CASE("nested examples") {
  const GroupId a3(1, 1, 3);
  const std::vector<BuildingElement> chain{BuildingElement::weak({1, 2}, {0, 0}, 1),
                                           BuildingElement::weak({1, 2, 3}, {0, 0, 0}, 1)};
  CHECK(is_nested(chain, a3));
  CHECK(is_nested_def(chain, a3));

  const GroupId b2(2, 1, 2);
  const std::vector<BuildingElement> strongs{BuildingElement::strong(mask({1})),
                                             BuildingElement::strong(mask({2}))};
  CHECK_FALSE(is_nested(strongs, b2));
  CHECK_FALSE(is_nested_def(strongs, b2));

  const std::vector<BuildingElement> lines{BuildingElement::weak({1, 2}, {0, 0}, 2),
                                           BuildingElement::weak({1, 2}, {0, 1}, 2)};
  CHECK(is_nested(lines, GroupId(2, 2, 2)));
  CHECK(is_nested_def(lines, GroupId(2, 2, 2)));
  CHECK_FALSE(is_nested(lines, b2));
  CHECK_FALSE(is_nested_def(lines, b2));

  const std::vector<BuildingElement> none;
  CHECK(is_nested(none, b2));
  CHECK(is_nested_def(none, b2));
  const std::vector<BuildingElement> one{BuildingElement::strong(mask({1, 2}))};
  CHECK(is_nested(one, b2));
  CHECK(is_nested_def(one, b2));

  // a strong element is never inside a weak one
  const GroupId b3(2, 1, 3);
  const std::vector<BuildingElement> inside{BuildingElement::strong(mask({1})),
                                            BuildingElement::weak({1, 2, 3}, {0, 0, 0}, 2)};
  CHECK_FALSE(is_nested(inside, b3));
  CHECK_FALSE(is_nested_def(inside, b3));
}

TEST_CASE("two planes of lines in G(2,2,4) are not nested") {
  const GroupId d4(2, 2, 4);
  const std::vector<BuildingElement> s{
      BuildingElement::weak({1, 2}, {0, 0}, 2), BuildingElement::weak({1, 2}, {0, 1}, 2),
      BuildingElement::weak({3, 4}, {0, 0}, 2), BuildingElement::weak({3, 4}, {0, 1}, 2)};
  CHECK_FALSE(is_nested_def(s, d4));
  CHECK_FALSE(is_nested(s, d4));
  const std::vector<BuildingElement> half(s.begin(), s.begin() + 3);
  CHECK(is_nested_def(half, d4));
  CHECK(is_nested(half, d4));
}

TEST_CASE("pairwise rule agrees with the definition on every subset") {
  for (const GroupId& g : {GroupId(1, 1, 3), GroupId(1, 1, 4), GroupId(2, 1, 2), GroupId(2, 2, 2),
                           GroupId(2, 2, 3), GroupId(3, 1, 2), GroupId(3, 3, 2), GroupId(4, 1, 2)}) {
    std::size_t count = 0;
    CHECK_MESSAGE(nested_by_definition_of_all_subsets(g, count), g.to_string());
    CHECK(count == NestedSetComplex(g).count());
  }
}

TEST_CASE("nested set enumeration") {
  CHECK(enumerate_nested_sets(GroupId(1, 1, 3)).size() == 8);
  CHECK(enumerate_nested_sets(GroupId(1, 1, 2)).size() == 2);
  // frozen from an exhaustive run: empty set, five singletons, and the four
  // pairs made of {0,1,2} with one of the other elements
  CHECK(enumerate_nested_sets(GroupId(2, 1, 2)).size() == 10);

  const auto sets = enumerate_nested_sets(GroupId(2, 2, 3));
  CHECK(sets.front().elements.empty());
  std::set<std::vector<BuildingElement>> distinct;
  for (const auto& s : sets) distinct.insert(s.elements);
  CHECK(distinct.size() == sets.size());

  NestedSetComplex::Options small;
  small.guard = 10;
  CHECK_THROWS_AS(NestedSetComplex(GroupId(3, 1, 3), small), GuardError);
}

TEST_CASE("nested antichains are direct sums") {
  for (const GroupId& g : {GroupId(2, 1, 3), GroupId(3, 1, 3), GroupId(2, 2, 3), GroupId(1, 1, 5),
                           GroupId(2, 2, 4)}) {
    const unsigned r = g.r();
    for (const auto& s : enumerate_nested_sets(g)) {
      const auto& e = s.elements;
      for (std::uint32_t bits = 1; bits < (1u << e.size()); ++bits) {
        std::vector<BuildingElement> chosen;
        for (std::size_t i = 0; i < e.size(); ++i) {
          if ((bits >> i) & 1u) chosen.push_back(e[i]);
        }
        bool antichain = true;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
          for (std::size_t j = 0; j < chosen.size(); ++j) {
            if (i != j && contained_in(chosen[i], chosen[j], r)) antichain = false;
          }
        }
        if (!antichain) continue;
        unsigned sum = 0;
        for (const auto& c : chosen) sum += c.dimension();
        CHECK(dimension(join(chosen, r)) == sum);
      }
    }
  }
}

TEST_CASE("d values") {
  const std::vector<BuildingElement> none;
  CHECK(d_value(none, BuildingElement::weak({1, 2, 3, 4}, {0, 0, 0, 0}, 1), 1) == 3);

  const std::vector<BuildingElement> pair{BuildingElement::weak({1, 2}, {0, 0}, 1)};
  CHECK(d_value(pair, BuildingElement::weak({1, 2, 3}, {0, 0, 0}, 1), 1) == 1);

  const std::vector<BuildingElement> lines{BuildingElement::weak({1, 2}, {0, 0}, 2),
                                           BuildingElement::weak({1, 2}, {0, 1}, 2)};
  CHECK(d_value(lines, BuildingElement::strong(mask({1, 2})), 2) == 0);

  const std::vector<BuildingElement> outside{BuildingElement::weak({1, 4}, {0, 0}, 1)};
  CHECK_THROWS(d_value(outside, BuildingElement::weak({1, 2, 3}, {0, 0, 0}, 1), 1));
}

TEST_CASE("text forms") {
  CHECK(BuildingElement::strong(mask({1, 2})).to_string() == "{0,1,2}");
  CHECK(BuildingElement::weak({1, 2, 3}, {0, 1, 0}, 2).to_string() == "{1, 2^1, 3}");
  CHECK_THROWS(BuildingElement::weak({1, 2}, {1, 0}, 2));
}
