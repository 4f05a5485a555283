#pragma once

// Enumerative face counts that do not go through generating series:
// tubings of graph associahedra, plane rooted trees read from internally
// ordered partitions, and the cell count of the real compact models.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wonderful/formulas.hpp"
#include "wonderful/series.hpp"

namespace wonderful {

inline constexpr unsigned kMaxGraphNodes = 12;

/// Simple graph on nodes 1..m.
class Graph {
 public:
  explicit Graph(unsigned nodes);

  void add_edge(unsigned a, unsigned b);

  unsigned nodes() const { return nodes_; }
  // Sorted pairs (i, j) with i < j.
  const std::vector<std::pair<unsigned, unsigned>>& edges() const { return edges_; }
  // Bit j-1 set when node j is adjacent to node i.
  std::uint32_t neighbours(unsigned i) const { return adjacency_[i - 1]; }
  bool connected(std::uint32_t subset) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  unsigned nodes_;
  std::vector<std::uint32_t> adjacency_;
  std::vector<std::pair<unsigned, unsigned>> edges_;
};

/// Coxeter-Dynkin diagram: A(n) is the path on n-1 nodes, B(n) the path on
/// n nodes, D(n) the path v1..v_{n-2} with v_{n-1} and v_n both hung on v_{n-2}.
Graph dynkin_graph(FaceFamily family, unsigned n);

using Tube = std::uint32_t;  // bit i-1 for node i

/// All proper nonempty connected node subsets, in increasing mask order.
std::vector<Tube> enumerate_tubes(const Graph& g);

bool tubes_compatible(const Graph& g, Tube a, Tube b);

/// Entry k counts tubings with exactly k tubes; entry 0 is the empty tubing.
std::vector<BigInt> fvector_tubings(const Graph& g);

/// Internal vertex of a plane tree: children in left-to-right order. Leaves
/// are 1..n, internal vertices n+1..n+s with the root last.
struct PlaneTree {
  unsigned leaves = 0;
  std::vector<std::vector<unsigned>> children;  // children[i] belongs to vertex leaves+1+i

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
};

/// Partition of {1..m} into linearly ordered parts, parts sorted by their
/// smallest member.
using OrderedPartition = std::vector<std::vector<unsigned>>;

/// Reads a partition of {1..n+s-1} as the children lists of a tree, labelling
/// internal vertices level by level from the leaves. Returns nullopt when the
/// labels do not close up into a tree.
std::optional<PlaneTree> decode_plane_tree(const OrderedPartition& p, unsigned leaves);

/// Relabels the internal vertices canonically and returns the children lists.
OrderedPartition encode_plane_tree(const PlaneTree& t);

/// Plane rooted trees with n labelled leaves and s internal vertices, each
/// with at least two children, counted through internally ordered partitions.
/// Throws std::logic_error if the decoding fails to be a bijection.
BigInt count_plane_trees(unsigned n, unsigned s);

/// Euler characteristic of the real compact model from the cell structure of
/// its spherical cover.
BigInt euler_cw(FaceFamily family, unsigned n);

}  // namespace wonderful
