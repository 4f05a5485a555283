#pragma once

// Combinatorial model of the reflection arrangements of G(r,p,n).
//
// Subspaces of the dual space are encoded as elements of the Dowling
// lattice: a set of coordinates forced to zero plus disjoint weighted blocks,
// a block with weights a_i standing for the relations zeta^{a_i} x_i = const.
// Coordinates are 1-based and stored as bit (i-1) of a Mask.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wonderful {

using Mask = std::uint32_t;

inline constexpr unsigned kMaxCoordinates = 24;

enum class Variant { TypeA, FullMonomial, RR };

std::string to_string(Variant v);

class GroupId {
 public:
  // Throws std::invalid_argument unless r, p >= 1, p | r and n >= 2.
  GroupId(unsigned r, unsigned p, unsigned n);

  unsigned r() const { return r_; }
  unsigned p() const { return p_; }
  unsigned n() const { return n_; }
  Variant variant() const { return variant_; }

  // Whether the coordinate subspace on `size` coordinates is a building element.
  bool strong_allowed(unsigned size) const;

  std::string to_string() const;
  friend bool operator==(const GroupId&, const GroupId&) = default;

 private:
  unsigned r_;
  unsigned p_;
  unsigned n_;
  Variant variant_;
};

class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weighted subset of {1..n} of size >= 2, normalized so that its smallest
/// element has weight 0.
struct WeightedBlock {
  Mask support = 0;
  std::array<std::uint8_t, kMaxCoordinates> weights{};  // indexed by coordinate - 1

  unsigned size() const;
  unsigned min_element() const;  // 1-based
  unsigned weight(unsigned i) const { return weights[i - 1]; }

  // Shifts weights so that the smallest element has weight 0.
  void normalize(unsigned r);

  friend bool operator==(const WeightedBlock&, const WeightedBlock&) = default;
};

std::strong_ordering compare_blocks(const WeightedBlock& a, const WeightedBlock& b);

class BuildingElement {
 public:
  enum class Kind { Strong, Weak };

  static BuildingElement strong(Mask zero_set);
  static BuildingElement weak(const WeightedBlock& block);
  // Convenience: elements and weights listed in the same order, 1-based.
  static BuildingElement weak(std::span<const unsigned> elements, std::span<const unsigned> weights,
                              unsigned r);
  static BuildingElement weak(std::initializer_list<unsigned> elements,
                              std::initializer_list<unsigned> weights, unsigned r);

  Kind kind() const { return kind_; }
  bool is_strong() const { return kind_ == Kind::Strong; }
  bool is_weak() const { return kind_ == Kind::Weak; }
  Mask support() const { return block_.support; }
  const WeightedBlock& block() const { return block_; }

  unsigned dimension() const;

  // "{0,1,2}" for strong elements, "{1, 2^1, 3}" for weak ones.
  std::string to_string() const;

  friend bool operator==(const BuildingElement&, const BuildingElement&) = default;
  // Sorted by kind (strong first), support as a sorted tuple, then weights.
  friend std::strong_ordering operator<=>(const BuildingElement& a, const BuildingElement& b);

 private:
  Kind kind_ = Kind::Weak;
  WeightedBlock block_;
};

/// General element of the Dowling lattice.
struct LatticeElement {
  Mask zero_set = 0;
  std::vector<WeightedBlock> blocks;  // sorted by smallest element

  static LatticeElement from(const BuildingElement& e);

  unsigned dimension() const;
  // Single nonempty component, as a building-element candidate.
  std::optional<BuildingElement> as_single_component() const;

  friend bool operator==(const LatticeElement&, const LatticeElement&) = default;
};

std::string to_string(const LatticeElement& e);

unsigned dimension(const BuildingElement& e);
unsigned dimension(const LatticeElement& e);

/// Subspace sum, as the Dowling-lattice join. `r` is the order of the weights.
LatticeElement join(const LatticeElement& a, const LatticeElement& b, unsigned r);
LatticeElement join(std::span<const BuildingElement> elements, unsigned r);

/// Subspace inclusion a <= b, decided through join(a, b) == b.
bool subspace_leq(const LatticeElement& a, const LatticeElement& b, unsigned r);

/// Subspace inclusion between building elements, decided combinatorially.
bool contained_in(const BuildingElement& a, const BuildingElement& b, unsigned r);

bool in_building(const LatticeElement& e, const GroupId& g);
bool in_building(const BuildingElement& e, const GroupId& g);

/// All irreducibles of the arrangement of g, sorted.
std::vector<BuildingElement> building_set(const GroupId& g);

/// |building_set(g)| without materializing it.
unsigned long long building_set_size(const GroupId& g);

/// Pairwise compatibility rule for nested sets (supports nested or disjoint,
/// strong elements in a chain and never inside a weak one, compatible weights).
bool nested_pair(const BuildingElement& a, const BuildingElement& b, const GroupId& g);

/// Nested-set test through the pairwise characterization.
bool is_nested(std::span<const BuildingElement> s, const GroupId& g);

/// Literal definitional test: no antichain of size >= 2 joins to a building
/// element.
bool is_nested_def(std::span<const BuildingElement> s, const GroupId& g);

/// dim(b) - dim(join of h). Every element of h must lie strictly inside b.
unsigned d_value(std::span<const BuildingElement> h, const BuildingElement& b, unsigned r);

struct NestedSet {
  std::vector<BuildingElement> elements;
};

inline constexpr std::size_t kDefaultBuildingGuard = 5000;

/// The nested-set complex of a group, over the full building set or over
/// its weak elements only.
class NestedSetComplex {
 public:
  struct Options {
    std::size_t guard = kDefaultBuildingGuard;
    bool weak_only = false;
  };

  explicit NestedSetComplex(const GroupId& g) : NestedSetComplex(g, Options{}) {}
  NestedSetComplex(const GroupId& g, Options options);

  const GroupId& group() const { return group_; }
  const std::vector<BuildingElement>& elements() const { return elements_; }

  // Visits every nested set (including the empty one) exactly once, as a
  // sorted list of indices into elements(), in lexicographic order.
  void for_each(const std::function<void(std::span<const std::size_t>)>& visit) const;

  std::size_t count() const;
  std::vector<NestedSet> enumerate() const;

 private:
  bool compatible(std::size_t i, std::size_t j) const {
    return (compat_[i][j / 64] >> (j % 64)) & 1u;
  }

  GroupId group_;
  std::vector<BuildingElement> elements_;
  std::vector<std::vector<std::uint64_t>> compat_;
};

/// Convenience wrapper: every nested set of the full building set.
std::vector<NestedSet> enumerate_nested_sets(const GroupId& g,
                                             std::size_t guard = kDefaultBuildingGuard);

}  // namespace wonderful
