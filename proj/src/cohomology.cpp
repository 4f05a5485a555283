#include "wonderful/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace wonderful {

namespace {

// Elements of `s` strictly inside s[a].
std::vector<BuildingElement> strictly_below(std::span<const BuildingElement> s, std::size_t a,
                                            unsigned r) {
  std::vector<BuildingElement> out;
  for (std::size_t c = 0; c < s.size(); ++c) {
    if (c != a && contained_in(s[c], s[a], r)) out.push_back(s[c]);
  }
  return out;
}

// Sum of the dimensions of the maximal elements of a nested family; must
// agree with the dimension of its join.
unsigned maximal_dimension_sum(std::span<const BuildingElement> h, unsigned r) {
  unsigned total = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < h.size() && maximal; ++j) {
      if (i != j && contained_in(h[i], h[j], r)) maximal = false;
    }
    if (maximal) total += h[i].dimension();
  }
  return total;
}

// Exponent bound d_{S_A, A} for every member of a nested set.
std::vector<unsigned> exponent_bounds(std::span<const BuildingElement> s, unsigned r) {
  std::vector<unsigned> d(s.size());
  for (std::size_t a = 0; a < s.size(); ++a) {
    auto below = strictly_below(s, a, r);
    d[a] = d_value(below, s[a], r);
    if (s[a].dimension() - maximal_dimension_sum(below, r) != d[a]) {
      throw std::logic_error("direct-sum decomposition failed below " + s[a].to_string());
    }
  }
  return d;
}

unsigned popcount(Mask m) { return static_cast<unsigned>(std::popcount(m)); }

}  // namespace

unsigned AdmissibleFunction::degree() const {
  unsigned total = 0;
  for (const auto& [e, k] : assignment) total += k;
  return total;
}

bool AdmissibleFunction::all_weak() const {
  return std::all_of(assignment.begin(), assignment.end(),
                     [](const auto& entry) { return entry.first.is_weak(); });
}

std::vector<BuildingElement> AdmissibleFunction::support() const {
  std::vector<BuildingElement> out;
  out.reserve(assignment.size());
  for (const auto& [e, k] : assignment) out.push_back(e);
  return out;
}

bool is_admissible(const AdmissibleFunction& f) {
  auto support = f.support();
  if (!std::is_sorted(support.begin(), support.end())) return false;
  for (const auto& [e, k] : f.assignment) {
    if (k == 0) return false;
  }
  if (!is_nested(support, f.group)) return false;
  auto d = exponent_bounds(support, f.group.r());
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (f.assignment[i].second >= d[i]) return false;
  }
  return true;
}

void for_each_admissible(const GroupId& g, const std::function<void(const AdmissibleFunction&)>& visit,
                         EnumerationOptions options) {
  NestedSetComplex complex(g, {.guard = options.guard, .weak_only = options.weak_only});
  const auto& elements = complex.elements();
  std::vector<BuildingElement> members;
  complex.for_each([&](std::span<const std::size_t> idx) {
    members.clear();
    for (std::size_t i : idx) members.push_back(elements[i]);
    auto d = exponent_bounds(members, g.r());
    if (std::any_of(d.begin(), d.end(), [](unsigned v) { return v <= 1; })) return;

    AdmissibleFunction f{g, {}};
    for (const auto& e : members) f.assignment.emplace_back(e, 1u);
    // odometer over 1 <= f(A) <= d_A - 1
    while (true) {
      visit(f);
      std::size_t k = 0;
      while (k < members.size() && ++f.assignment[k].second == d[k]) f.assignment[k++].second = 1;
      if (k == members.size()) break;
    }
  });
}

std::vector<AdmissibleFunction> enumerate_admissible(const GroupId& g, EnumerationOptions options) {
  std::vector<AdmissibleFunction> out;
  for_each_admissible(g, [&out](const AdmissibleFunction& f) { out.push_back(f); }, options);
  return out;
}

QPolynomial poincare_bruteforce(const GroupId& g, EnumerationOptions options) {
  std::map<unsigned, unsigned long long> counts;
  for_each_admissible(g, [&counts](const AdmissibleFunction& f) { ++counts[f.degree()]; }, options);
  QPolynomial p;
  for (const auto& [k, c] : counts) p.add_term(k, BigInt(std::to_string(c)));
  return p;
}

std::string WeightedPartition::to_string() const {
  std::string out;
  for (const auto& part : parts) {
    if (!out.empty()) out += " ";
    out += "{";
    for (std::size_t i = 0; i < part.members.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(part.members[i].label);
      if (part.members[i].weight) out += "^" + std::to_string(part.members[i].weight);
    }
    out += "}^" + std::to_string(part.exponent);
  }
  return out.empty() ? "{}" : out;
}

WeightedPartition encode_partition(const AdmissibleFunction& f) {
  if (!f.all_weak()) {
    throw std::invalid_argument("encode_partition: support contains a strong element");
  }
  const unsigned n = f.group.n();
  const unsigned r = f.group.r();
  const auto support = f.support();
  const std::size_t m = support.size();

  // parent of each internal vertex: the smallest strictly larger element
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  auto smallest_containing = [&](auto&& contains) {
    std::size_t best = kNone;
    for (std::size_t b = 0; b < m; ++b) {
      if (contains(b) && (best == kNone || support[b].block().size() < support[best].block().size())) {
        best = b;
      }
    }
    return best;
  };
  std::vector<std::size_t> parent(m);
  for (std::size_t a = 0; a < m; ++a) {
    parent[a] = smallest_containing(
        [&](std::size_t b) { return b != a && contained_in(support[a], support[b], r); });
  }
  std::vector<std::size_t> leaf_parent(n + 1, kNone);
  for (unsigned i = 1; i <= n; ++i) {
    leaf_parent[i] = smallest_containing(
        [&](std::size_t b) { return ((support[b].support() >> (i - 1)) & 1u) != 0; });
  }

  // height above the leaves; children have strictly smaller supports
  std::vector<std::size_t> by_size(m);
  std::iota(by_size.begin(), by_size.end(), 0);
  std::sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) {
    return support[a].block().size() < support[b].block().size();
  });
  std::vector<unsigned> height(m, 1);
  for (std::size_t a : by_size) {
    if (parent[a] != kNone) height[parent[a]] = std::max(height[parent[a]], height[a] + 1);
  }

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (height[a] != height[b]) return height[a] < height[b];
    return support[a].block().min_element() < support[b].block().min_element();
  });
  std::vector<unsigned> label(m);
  for (std::size_t k = 0; k < m; ++k) label[order[k]] = n + 1 + static_cast<unsigned>(k);

  std::vector<WeightedPart> parts(m);
  for (std::size_t a = 0; a < m; ++a) parts[a].exponent = f.assignment[a].second;
  std::vector<PartMember> roots;
  for (unsigned i = 1; i <= n; ++i) {
    if (leaf_parent[i] == kNone) {
      roots.push_back({i, 0});
    } else {
      const auto& blk = support[leaf_parent[i]].block();
      parts[leaf_parent[i]].members.push_back({i, blk.weight(i)});
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (parent[a] == kNone) {
      roots.push_back({label[a], 0});
    } else {
      const auto& blk = support[parent[a]].block();
      parts[parent[a]].members.push_back({label[a], blk.weight(support[a].block().min_element())});
    }
  }
  if (roots.size() > 1) parts.push_back({std::move(roots), 0});

  for (auto& part : parts) {
    std::sort(part.members.begin(), part.members.end(),
              [](const PartMember& x, const PartMember& y) { return x.label < y.label; });
  }
  std::sort(parts.begin(), parts.end(), [](const WeightedPart& x, const WeightedPart& y) {
    return x.members.front().label < y.members.front().label;
  });
  WeightedPartition out;
  out.ground = n + static_cast<unsigned>(parts.size()) - 1;
  out.parts = std::move(parts);
  return out;
}

AdmissibleFunction decode_partition(const WeightedPartition& p, const GroupId& g) {
  const unsigned n = g.n();
  const unsigned r = g.r();
  const std::size_t k = p.parts.size();
  auto fail = [](const std::string& why) -> void {
    throw std::invalid_argument("decode_partition: " + why);
  };
  if (k == 0 || p.ground + 1 != n + k) {
    fail("ground set size " + std::to_string(p.ground) + " does not match n = " +
         std::to_string(n) + " with " + std::to_string(k) + " parts");
  }
  std::vector<std::size_t> owner(p.ground + 1, k);
  for (std::size_t a = 0; a < k; ++a) {
    if (p.parts[a].members.size() < 2) fail("part with fewer than two members");
    for (const auto& mbr : p.parts[a].members) {
      if (mbr.label == 0 || mbr.label > p.ground) fail("label out of range");
      if (owner[mbr.label] != k) fail("label " + std::to_string(mbr.label) + " repeated");
      if (mbr.weight >= r) fail("weight out of range");
      owner[mbr.label] = a;
    }
  }

  // rebuild labels level by level: a part becomes labelled once all of its
  // members are known, ties broken by the smallest leaf below it
  std::vector<unsigned> min_leaf(n + k + 1, 0);
  for (unsigned i = 1; i <= n; ++i) min_leaf[i] = i;
  std::vector<unsigned> part_label(k, 0);
  std::vector<bool> done(k, false);
  unsigned known = n;
  std::size_t remaining = k;
  while (remaining > 0) {
    std::vector<std::size_t> ready;
    for (std::size_t a = 0; a < k; ++a) {
      if (done[a]) continue;
      const auto& mem = p.parts[a].members;
      if (std::all_of(mem.begin(), mem.end(), [&](const PartMember& x) { return x.label <= known; })) {
        ready.push_back(a);
      }
    }
    if (ready.empty()) fail("no part can be labelled");
    if (ready.size() == remaining && remaining > 1) fail("more than one root");
    auto subtree_min = [&](std::size_t a) {
      unsigned best = n + k;
      for (const auto& x : p.parts[a].members) best = std::min(best, min_leaf[x.label]);
      return best;
    };
    std::sort(ready.begin(), ready.end(),
              [&](std::size_t a, std::size_t b) { return subtree_min(a) < subtree_min(b); });
    for (std::size_t a : ready) {
      part_label[a] = ++known;
      min_leaf[known] = subtree_min(a);
      done[a] = true;
      --remaining;
    }
  }

  const std::size_t root = static_cast<std::size_t>(
      std::find(part_label.begin(), part_label.end(), n + static_cast<unsigned>(k)) - part_label.begin());
  const bool has_top = p.parts[root].exponent == 0;

  // leaf potentials of each vertex, children before parents
  std::vector<std::size_t> by_label(k);
  for (std::size_t a = 0; a < k; ++a) by_label[part_label[a] - n - 1] = a;
  std::vector<WeightedBlock> blocks(k);
  AdmissibleFunction f{g, {}};
  for (std::size_t a : by_label) {
    const WeightedPart& part = p.parts[a];
    const bool top = has_top && a == root;
    if (top) {
      for (const auto& x : part.members) {
        if (x.weight != 0) fail("top part carries a nonzero weight");
      }
      continue;
    }
    if (part.exponent == 0) fail("exponent 0 on a part that is not the root");
    if (part.exponent + 2 > part.members.size()) fail("exponent above |part| - 2");
    const PartMember* lead = &part.members.front();
    for (const auto& x : part.members) {
      if (min_leaf[x.label] < min_leaf[lead->label]) lead = &x;
    }
    if (lead->weight != 0) fail("member holding the smallest leaf must have weight 0");

    WeightedBlock& blk = blocks[a];
    for (const auto& x : part.members) {
      if (x.label <= n) {
        blk.support |= Mask{1} << (x.label - 1);
        blk.weights[x.label - 1] = static_cast<std::uint8_t>(x.weight);
        continue;
      }
      const WeightedBlock& child = blocks[by_label[x.label - n - 1]];
      blk.support |= child.support;
      for (unsigned i = 0; i < kMaxCoordinates; ++i) {
        if ((child.support >> i) & 1u) {
          blk.weights[i] = static_cast<std::uint8_t>((child.weights[i] + x.weight) % r);
        }
      }
    }
    f.assignment.emplace_back(BuildingElement::weak(blk), part.exponent);
  }
  if (!has_top && popcount(blocks[root].support) != n) fail("root does not cover every leaf");
  std::sort(f.assignment.begin(), f.assignment.end());
  return f;
}

}  // namespace wonderful
