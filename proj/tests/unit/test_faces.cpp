#include <doctest.h>

#include <map>

#include "wonderful/faces.hpp"

using namespace wonderful;

namespace {

using V = std::vector<BigInt>;

Graph path(unsigned m) {
  Graph g(m);
  for (unsigned i = 1; i < m; ++i) g.add_edge(i, i + 1);
  return g;
}

// Plane tree shapes (unlabelled leaves) with n leaves and s internal
// vertices, every internal vertex with at least two children.
BigInt shapes(unsigned n, unsigned s) {
  static std::map<std::pair<unsigned, unsigned>, BigInt> memo;
  if (n == 1 && s == 0) return 1;
  if (n < 2 || s == 0) return 0;
  auto key = std::make_pair(n, s);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  // one[a][b]: single subtrees; cur: ordered sequences of k subtrees
  std::vector<std::vector<BigInt>> one(n + 1, std::vector<BigInt>(s)), total(n + 1, std::vector<BigInt>(s));
  for (unsigned a = 1; a <= n; ++a) {
    for (unsigned b = 0; b < s; ++b) {
      one[a][b] = shapes(a, b);
    }
  }
  std::vector<std::vector<BigInt>> cur = one;
  for (unsigned k = 2; k <= n; ++k) {
    std::vector<std::vector<BigInt>> next(n + 1, std::vector<BigInt>(s));
    for (unsigned a = 1; a <= n; ++a) {
      for (unsigned b = 0; b < s; ++b) {
        if (cur[a][b] == 0) continue;
        for (unsigned a2 = 1; a + a2 <= n; ++a2) {
          for (unsigned b2 = 0; b + b2 < s; ++b2) next[a + a2][b + b2] += cur[a][b] * one[a2][b2];
        }
      }
    }
    cur = std::move(next);
    for (unsigned a = 1; a <= n; ++a) {
      for (unsigned b = 0; b < s; ++b) total[a][b] += cur[a][b];
    }
  }
  return memo[key] = total[n][s - 1];
}

}  // namespace

TEST_CASE("graphs") {
  const Graph d4 = dynkin_graph(FaceFamily::D, 4);
  CHECK(d4.nodes() == 4);
  CHECK(d4.edges() == std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {2, 3}, {2, 4}});
  CHECK(dynkin_graph(FaceFamily::B, 2) == path(2));
  CHECK(dynkin_graph(FaceFamily::A, 4) == path(3));
  CHECK(dynkin_graph(FaceFamily::D, 6).edges() ==
        std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}});
  CHECK_THROWS_AS(dynkin_graph(FaceFamily::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(dynkin_graph(FaceFamily::A, 2), std::invalid_argument);
  CHECK_THROWS_AS(Graph(13), GuardError);
  CHECK(path(4).connected(0b0110));
  CHECK_FALSE(path(4).connected(0b0101));
}

TEST_CASE("tubes") {
  CHECK(enumerate_tubes(path(3)) == std::vector<Tube>{0b001, 0b010, 0b011, 0b100, 0b110});
  CHECK(enumerate_tubes(dynkin_graph(FaceFamily::D, 4)).size() == 10);
  CHECK(enumerate_tubes(Graph(1)).empty());

  const Graph p3 = path(3);
  CHECK(tubes_compatible(p3, 0b001, 0b011));
  CHECK(tubes_compatible(p3, 0b001, 0b100));
  CHECK_FALSE(tubes_compatible(p3, 0b001, 0b010));
  CHECK_FALSE(tubes_compatible(p3, 0b011, 0b110));
}

TEST_CASE("tubing f-vectors") {
  CHECK(fvector_tubings(path(3)) == V{1, 5, 5});
  CHECK(fvector_tubings(dynkin_graph(FaceFamily::D, 4)) == V{1, 10, 24, 16});
  CHECK(fvector_tubings(path(2)) == V{1, 2});
  CHECK(fvector_tubings(Graph(1)) == V{1});
}

TEST_CASE("path associahedra have Kirkman-Cayley face counts") {
  for (unsigned n = 1; n <= 5; ++n) {
    const V f = fvector_tubings(dynkin_graph(FaceFamily::B, n));
    REQUIRE(f.size() == n);
    for (unsigned s = 1; s <= n; ++s) CHECK(f[s - 1] == kirkman_cayley(n + 1, s));
  }
  for (unsigned n = 3; n <= 6; ++n) {
    CHECK(fvector_tubings(dynkin_graph(FaceFamily::A, n)) == fvector_tubings(dynkin_graph(FaceFamily::B, n - 1)));
  }
}

TEST_CASE("tubing f-vectors satisfy the Euler relation") {
  std::vector<Graph> graphs;
  for (unsigned n = 1; n <= 7; ++n) graphs.push_back(dynkin_graph(FaceFamily::B, n));
  for (unsigned n = 4; n <= 7; ++n) graphs.push_back(dynkin_graph(FaceFamily::D, n));
  Graph cycle(5);
  for (unsigned i = 1; i <= 5; ++i) cycle.add_edge(i, i % 5 + 1);
  graphs.push_back(cycle);
  Graph complete(4);
  for (unsigned i = 1; i <= 4; ++i) {
    for (unsigned j = i + 1; j <= 4; ++j) complete.add_edge(i, j);
  }
  graphs.push_back(complete);

  for (const Graph& g : graphs) {
    const V f = fvector_tubings(g);
    const long dim = static_cast<long>(g.nodes()) - 1;
    BigInt sum = 0;
    for (std::size_t k = 0; k < f.size(); ++k) sum += ((dim - static_cast<long>(k)) % 2 == 0 ? 1 : -1) * f[k];
    CHECK(sum == 1);
    // simple polytope: every vertex lies on exactly dim facets
    if (dim >= 1) CHECK(f.size() == static_cast<std::size_t>(dim + 1));
  }
}

TEST_CASE("plane tree coding") {
  const OrderedPartition p{{2, 1}};
  const auto t = decode_plane_tree(p, 2);
  REQUIRE(t);
  CHECK(t->children == std::vector<std::vector<unsigned>>{{2, 1}});
  CHECK(encode_plane_tree(*t) == p);

  // {1,3} becomes vertex 4, a child of the root
  const OrderedPartition q{{1, 3}, {4, 2}};
  const auto u = decode_plane_tree(q, 3);
  REQUIRE(u);
  CHECK(u->children == std::vector<std::vector<unsigned>>{{1, 3}, {4, 2}});
  CHECK(encode_plane_tree(*u) == q);
}

TEST_CASE("plane tree counts") {
  CHECK(count_plane_trees(2, 1) == 2);
  CHECK(count_plane_trees(3, 1) == 6);
  CHECK(count_plane_trees(3, 2) == 12);
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned s = 1; s + 1 <= n && n + s - 1 <= 9; ++s) {
      CHECK(count_plane_trees(n, s) == factorial(n) * shapes(n, s));
      CHECK(count_plane_trees(n, s) == factorial(n) * kirkman_cayley(n, s));
    }
  }
  const TruncatedSeries f = f_type_a(8);
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned s = 1; s + 1 <= n && n + s - 1 <= 8; ++s) {
      CHECK(Rational(count_plane_trees(n, s)) / Rational(factorial(n + s - 1)) == f.coeff({0, n + s - 1, s, 0}));
    }
  }
  CHECK_THROWS(count_plane_trees(3, 3));
}

TEST_CASE("cell-count Euler characteristics") {
  CHECK(euler_cw(FaceFamily::A, 3) == 0);
  CHECK(euler_cw(FaceFamily::A, 5) == 0);
  CHECK(euler_cw(FaceFamily::A, 7) == 0);
  CHECK(euler_cw(FaceFamily::A, 4) == -3);
  CHECK(Rational(euler_cw(FaceFamily::A, 4)) == x_type_a(4).coeff({0, 3, 0, 0}) * Rational(factorial(3)));
  CHECK(euler_cw(FaceFamily::A, 2) == 1);
  CHECK(euler_cw(FaceFamily::B, 1) == 1);
  CHECK(euler_cw(FaceFamily::B, 2) == 0);
  CHECK(euler_cw(FaceFamily::D, 4) == 0);
  CHECK_THROWS_AS(euler_cw(FaceFamily::A, 8), GuardError);
  CHECK_THROWS_AS(euler_cw(FaceFamily::D, 6), GuardError);
  CHECK_THROWS_AS(euler_cw(FaceFamily::D, 3), std::invalid_argument);
}
