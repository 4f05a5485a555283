#pragma once

// Brute-force Betti numbers of the minimal wonderful models through the
// admissible-monomial basis, and the encoding of weak-support monomials as
// weighted set partitions with exponents.

#include <functional>
#include <utility>
#include <vector>

#include "wonderful/lattice.hpp"
#include "wonderful/qpolynomial.hpp"

namespace wonderful {

/// A basis monomial prod c_A^{f(A)}, stored as its support with exponents.
struct AdmissibleFunction {
  GroupId group;
  std::vector<std::pair<BuildingElement, unsigned>> assignment;  // sorted by element

  unsigned degree() const;  // sum of the exponents
  bool all_weak() const;
  std::vector<BuildingElement> support() const;

  friend bool operator==(const AdmissibleFunction&, const AdmissibleFunction&) = default;
};

/// Checks nestedness of the support and the exponent bounds.
bool is_admissible(const AdmissibleFunction& f);

struct EnumerationOptions {
  std::size_t guard = kDefaultBuildingGuard;
  bool weak_only = false;
};

/// Visits every admissible function of g, f = 0 first.
void for_each_admissible(const GroupId& g, const std::function<void(const AdmissibleFunction&)>& visit,
                         EnumerationOptions options = {});

std::vector<AdmissibleFunction> enumerate_admissible(const GroupId& g, EnumerationOptions options = {});

/// Sum over admissible functions of q^{deg f}.
QPolynomial poincare_bruteforce(const GroupId& g, EnumerationOptions options = {});

struct PartMember {
  unsigned label = 0;
  unsigned weight = 0;
  friend bool operator==(const PartMember&, const PartMember&) = default;
};

struct WeightedPart {
  std::vector<PartMember> members;  // sorted by label
  unsigned exponent = 0;
  friend bool operator==(const WeightedPart&, const WeightedPart&) = default;
};

/// Weighted partition of {1..ground} with an exponent on every part.
struct WeightedPartition {
  unsigned ground = 0;
  std::vector<WeightedPart> parts;  // sorted by smallest label

  std::string to_string() const;
  friend bool operator==(const WeightedPartition&, const WeightedPartition&) = default;
};

/// Forest-labelling encoding of an admissible function with weak support.
/// Throws std::invalid_argument if the support contains a strong element.
WeightedPartition encode_partition(const AdmissibleFunction& f);

/// Inverse of encode_partition. Throws std::invalid_argument on a partition
/// outside the image (wrong ground size, bad exponents or weights).
AdmissibleFunction decode_partition(const WeightedPartition& p, const GroupId& g);

}  // namespace wonderful
