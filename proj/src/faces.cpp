#include "wonderful/faces.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wonderful {

Graph::Graph(unsigned nodes) : nodes_(nodes), adjacency_(nodes, 0) {
  if (nodes == 0) throw std::invalid_argument("graph needs at least one node");
  if (nodes > kMaxGraphNodes) {
    throw GuardError("graph has " + std::to_string(nodes) + " nodes, limit is " +
                     std::to_string(kMaxGraphNodes));
  }
}

void Graph::add_edge(unsigned a, unsigned b) {
  if (a == b || a < 1 || b < 1 || a > nodes_ || b > nodes_) {
    throw std::invalid_argument("bad edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
  }
  if (a > b) std::swap(a, b);
  if (adjacency_[a - 1] >> (b - 1) & 1u) return;
  adjacency_[a - 1] |= 1u << (b - 1);
  adjacency_[b - 1] |= 1u << (a - 1);
  edges_.emplace_back(a, b);
  std::sort(edges_.begin(), edges_.end());
}

bool Graph::connected(std::uint32_t subset) const {
  if (subset == 0) return false;
  std::uint32_t seen = subset & -subset;
  std::uint32_t frontier = seen;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
      next |= adjacency_[std::countr_zero(f)];
    }
    next &= subset & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == subset;
}

Graph dynkin_graph(FaceFamily family, unsigned n) {
  switch (family) {
    case FaceFamily::A: {
      if (n < 3) throw std::invalid_argument("A(n) needs n >= 3");
      Graph g(n - 1);
      for (unsigned i = 1; i + 1 <= n - 1; ++i) g.add_edge(i, i + 1);
      return g;
    }
    case FaceFamily::B: {
      if (n < 1) throw std::invalid_argument("B(n) needs n >= 1");
      Graph g(n);
      for (unsigned i = 1; i + 1 <= n; ++i) g.add_edge(i, i + 1);
      return g;
    }
    case FaceFamily::D: {
      if (n < 4) throw std::invalid_argument("D(n) needs n >= 4");
      Graph g(n);
      for (unsigned i = 1; i + 1 <= n - 2; ++i) g.add_edge(i, i + 1);
      g.add_edge(n - 2, n - 1);
      g.add_edge(n - 2, n);
      return g;
    }
  }
  throw std::invalid_argument("unknown family");
}

std::vector<Tube> enumerate_tubes(const Graph& g) {
  const std::uint32_t all = (1u << g.nodes()) - 1;
  std::vector<Tube> out;
  for (std::uint32_t s = 1; s < all; ++s) {
    if (g.connected(s)) out.push_back(s);
  }
  return out;
}

namespace {

std::uint32_t closed_neighbourhood(const Graph& g, Tube t) {
  std::uint32_t out = t;
  for (Tube f = t; f != 0; f &= f - 1) out |= g.neighbours(std::countr_zero(f) + 1);
  return out;
}

}  // namespace

bool tubes_compatible(const Graph& g, Tube a, Tube b) {
  if ((a & b) == a || (a & b) == b) return a != b;
  if ((a & b) != 0) return false;
  return (closed_neighbourhood(g, a) & b) == 0;
}

std::vector<BigInt> fvector_tubings(const Graph& g) {
  const std::vector<Tube> tubes = enumerate_tubes(g);
  const std::size_t m = tubes.size();
  std::vector<std::vector<std::size_t>> later(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (tubes_compatible(g, tubes[i], tubes[j])) later[i].push_back(j);
    }
  }
  std::vector<BigInt> counts(1, 1);
  // Cliques of the compatibility graph, grown in index order.
  std::function<void(const std::vector<std::size_t>&, std::size_t)> grow =
      [&](const std::vector<std::size_t>& candidates, std::size_t depth) {
        if (counts.size() <= depth + 1) counts.resize(depth + 2, 0);
        for (std::size_t c : candidates) {
          counts[depth + 1] += 1;
          std::vector<std::size_t> next;
          std::set_intersection(candidates.begin(), candidates.end(), later[c].begin(),
                                later[c].end(), std::back_inserter(next));
          if (!next.empty()) grow(next, depth + 1);
        }
      };
  std::vector<std::size_t> all(m);
  std::iota(all.begin(), all.end(), 0);
  grow(all, 0);
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

std::optional<PlaneTree> decode_plane_tree(const OrderedPartition& p, unsigned leaves) {
  const unsigned s = static_cast<unsigned>(p.size());
  if (leaves < 1 || s < 1) throw std::invalid_argument("decode_plane_tree: empty input");
  const unsigned ground = leaves + s - 1;
  std::vector<bool> seen(ground + 1, false);
  for (const auto& part : p) {
    if (part.size() < 2) throw std::invalid_argument("decode_plane_tree: part of size < 2");
    for (unsigned x : part) {
      if (x < 1 || x > ground || seen[x]) {
        throw std::invalid_argument("decode_plane_tree: not a partition of {1.." +
                                    std::to_string(ground) + "}");
      }
      seen[x] = true;
    }
  }
  if (std::find(seen.begin() + 1, seen.end(), false) != seen.end()) {
    throw std::invalid_argument("decode_plane_tree: not a partition of {1.." + std::to_string(ground) + "}");
  }

  // min_leaf[v] for every known vertex, 0 while unknown
  std::vector<unsigned> min_leaf(ground + 2, 0);
  for (unsigned i = 1; i <= leaves; ++i) min_leaf[i] = i;
  std::vector<bool> placed(s, false);
  PlaneTree tree{leaves, std::vector<std::vector<unsigned>>(s)};
  unsigned next_label = leaves + 1;
  while (next_label <= leaves + s) {
    std::vector<std::pair<unsigned, unsigned>> ready;  // (min leaf, part index)
    for (unsigned i = 0; i < s; ++i) {
      if (placed[i]) continue;
      unsigned lo = ground + 1;
      bool known = true;
      for (unsigned x : p[i]) {
        if (min_leaf[x] == 0) {
          known = false;
          break;
        }
        lo = std::min(lo, min_leaf[x]);
      }
      if (known) ready.emplace_back(lo, i);
    }
    if (ready.empty()) return std::nullopt;
    std::sort(ready.begin(), ready.end());
    for (auto [lo, i] : ready) {
      placed[i] = true;
      min_leaf[next_label] = lo;
      tree.children[next_label - leaves - 1] = p[i];
      ++next_label;
    }
  }
  return tree;
}

OrderedPartition encode_plane_tree(const PlaneTree& t) {
  const unsigned n = t.leaves;
  const unsigned s = static_cast<unsigned>(t.children.size());
  std::vector<unsigned> height(n + s + 1, 0), min_leaf(n + s + 1, 0);
  for (unsigned i = 1; i <= n; ++i) min_leaf[i] = i;
  std::function<void(unsigned)> visit = [&](unsigned v) {
    if (v <= n || min_leaf[v] != 0) return;
    unsigned h = 0, lo = n + 1;
    for (unsigned c : t.children.at(v - n - 1)) {
      if (c < 1 || c > n + s || c == v) throw std::invalid_argument("encode_plane_tree: bad child");
      visit(c);
      h = std::max(h, height[c]);
      lo = std::min(lo, min_leaf[c]);
    }
    height[v] = h + 1;
    min_leaf[v] = lo;
  };
  std::vector<unsigned> internal(s);
  for (unsigned i = 0; i < s; ++i) {
    internal[i] = n + 1 + i;
    visit(internal[i]);
  }
  std::sort(internal.begin(), internal.end(), [&](unsigned a, unsigned b) {
    return std::pair(height[a], min_leaf[a]) < std::pair(height[b], min_leaf[b]);
  });
  std::vector<unsigned> relabel(n + s + 1);
  for (unsigned i = 1; i <= n; ++i) relabel[i] = i;
  for (unsigned i = 0; i < s; ++i) relabel[internal[i]] = n + 1 + i;
  OrderedPartition out;
  for (unsigned v : internal) {
    std::vector<unsigned> part;
    for (unsigned c : t.children[v - n - 1]) part.push_back(relabel[c]);
    out.push_back(std::move(part));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
  return out;
}

BigInt count_plane_trees(unsigned n, unsigned s) {
  if (n < 2 || s < 1 || s > n - 1) {
    throw std::invalid_argument("count_plane_trees: need n >= 2 and 1 <= s <= n-1");
  }
  const unsigned ground = n + s - 1;
  if (ground > 12) throw GuardError("count_plane_trees: n + s - 1 must be at most 12");

  BigInt count = 0;
  OrderedPartition parts;
  std::function<void(std::uint32_t)> fill = [&](std::uint32_t remaining) {
    const unsigned left = static_cast<unsigned>(std::popcount(remaining));
    const unsigned open = s - static_cast<unsigned>(parts.size());
    if (open == 0) {
      if (left != 0) return;
      auto tree = decode_plane_tree(parts, n);
      if (!tree) return;
      if (encode_plane_tree(*tree) != parts) {
        throw std::logic_error("plane tree decoding is not injective");
      }
      ++count;
      return;
    }
    if (left < 2 * open) return;
    const std::uint32_t first = remaining & -remaining;
    const std::uint32_t rest = remaining & ~first;
    // subsets of `rest` joining the smallest remaining label
    for (std::uint32_t sub = rest; sub != 0; sub = (sub - 1) & rest) {
      const std::uint32_t block = sub | first;
      if (left - std::popcount(block) < 2 * (open - 1)) continue;
      if (open == 1 && block != remaining) continue;
      std::vector<unsigned> part;
      for (std::uint32_t b = block; b != 0; b &= b - 1) part.push_back(std::countr_zero(b) + 1);
      do {
        parts.push_back(part);
        fill(remaining & ~block);
        parts.pop_back();
      } while (std::next_permutation(part.begin(), part.end()));
    }
  };
  fill(ground == 32 ? ~0u : (1u << ground) - 1);
  return count;
}

BigInt euler_cw(FaceFamily family, unsigned n) {
  unsigned dim = 0;
  std::vector<BigInt> cells;  // cells[j-1] = C_{n,j}
  switch (family) {
    case FaceFamily::A:
      if (n < 2) throw std::invalid_argument("euler_cw: A needs n >= 2");
      if (n > 7) throw GuardError("euler_cw: A is enumerated only up to n = 7");
      dim = n - 2;
      for (unsigned j = 1; j <= n - 1; ++j) cells.push_back(count_plane_trees(n, j));
      break;
    case FaceFamily::B:
    case FaceFamily::D: {
      const unsigned lo = family == FaceFamily::B ? 1 : 4;
      if (n < lo) throw std::invalid_argument("euler_cw: " + to_string(family) + " needs n >= " + std::to_string(lo));
      if (n > 5) throw GuardError("euler_cw: B and D are enumerated only up to n = 5");
      dim = n - 1;
      BigInt chambers = factorial(n);
      chambers <<= family == FaceFamily::B ? n : n - 1;
      for (const BigInt& f : fvector_tubings(dynkin_graph(family, n))) cells.push_back(chambers * f);
      break;
    }
  }
  BigInt chi = 0;
  for (unsigned j = 1; j <= cells.size(); ++j) {
    BigInt c = cells[j - 1];
    if (!mpz_divisible_2exp_p(c.get_mpz_t(), j)) {
      throw IntegralityError("euler_cw: C_{n," + std::to_string(j) + "} is not divisible by 2^" +
                             std::to_string(j));
    }
    c >>= j;
    if ((dim + 1 + j) % 2 == 0) chi += c; else chi -= c;
  }
  return chi;
}

}  // namespace wonderful
