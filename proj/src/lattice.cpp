#include "wonderful/lattice.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "wonderful/series.hpp"

namespace wonderful {

namespace {

unsigned popcount(Mask m) { return static_cast<unsigned>(std::popcount(m)); }

Mask full_mask(unsigned n) { return n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1); }

template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    unsigned bit = static_cast<unsigned>(std::countr_zero(m));
    f(bit + 1);
    m &= m - 1;
  }
}

std::strong_ordering compare_sorted_tuples(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    unsigned ea = static_cast<unsigned>(std::countr_zero(a));
    unsigned eb = static_cast<unsigned>(std::countr_zero(b));
    if (ea != eb) return ea <=> eb;
    a &= a - 1;
    b &= b - 1;
  }
  return (a != 0) <=> (b != 0);
}

// Weighted union-find over coordinates accumulating Dowling-lattice joins.
// Each active coordinate i carries a potential p_i (mod r) with
// zeta^{p_i} x_i constant on its component; an inconsistent cycle forces the
// whole component to zero.
class DowlingJoin {
 public:
  explicit DowlingJoin(unsigned r) : r_(r) {
    for (unsigned i = 0; i < kMaxCoordinates; ++i) parent_[i] = static_cast<std::uint8_t>(i);
  }

  void add(const LatticeElement& e) {
    for_each_bit(e.zero_set, [this](unsigned i) { mark_zero(i - 1); });
    for (const auto& b : e.blocks) add(b);
  }

  void add(const BuildingElement& e) {
    if (e.is_strong()) {
      for_each_bit(e.support(), [this](unsigned i) { mark_zero(i - 1); });
    } else {
      add(e.block());
    }
  }

  void add(const WeightedBlock& b) {
    const unsigned first = b.min_element();
    for_each_bit(b.support, [&](unsigned i) {
      active_ |= Mask{1} << (i - 1);
      if (i == first) return;
      int d = static_cast<int>(b.weight(i)) - static_cast<int>(b.weight(first));
      relate(first - 1, i - 1, mod(d));
    });
  }

  LatticeElement result() const {
    LatticeElement out;
    std::array<int, kMaxCoordinates> block_of{};
    block_of.fill(-1);
    for_each_bit(active_, [&](unsigned i) {
      auto [root, pot] = find(i - 1);
      if (zero_[root]) {
        out.zero_set |= Mask{1} << (i - 1);
        return;
      }
      if (block_of[root] < 0) {
        block_of[root] = static_cast<int>(out.blocks.size());
        out.blocks.emplace_back();
      }
      WeightedBlock& blk = out.blocks[static_cast<std::size_t>(block_of[root])];
      blk.support |= Mask{1} << (i - 1);
      blk.weights[i - 1] = static_cast<std::uint8_t>(pot);
    });
    for (auto& blk : out.blocks) blk.normalize(r_);
    // blocks were created in order of their smallest coordinate
    return out;
  }

 private:
  unsigned mod(int v) const {
    int r = static_cast<int>(r_);
    return static_cast<unsigned>(((v % r) + r) % r);
  }

  std::pair<unsigned, unsigned> find(unsigned i) const {
    unsigned pot = 0;
    while (parent_[i] != i) {
      pot = (pot + offset_[i]) % r_;
      i = parent_[i];
    }
    return {i, pot};
  }

  void mark_zero(unsigned i) {
    active_ |= Mask{1} << i;
    zero_[find(i).first] = true;
  }

  // Records p_j - p_i = d.
  void relate(unsigned i, unsigned j, unsigned d) {
    auto [ri, pi] = find(i);
    auto [rj, pj] = find(j);
    if (ri == rj) {
      if ((pj + r_ - pi) % r_ != d) zero_[ri] = true;
      return;
    }
    parent_[rj] = static_cast<std::uint8_t>(ri);
    offset_[rj] = static_cast<std::uint8_t>(mod(static_cast<int>(d + pi) - static_cast<int>(pj)));
    zero_[ri] = zero_[ri] || zero_[rj];
  }

  unsigned r_;
  Mask active_ = 0;
  std::array<std::uint8_t, kMaxCoordinates> parent_{};
  std::array<std::uint8_t, kMaxCoordinates> offset_{};
  std::array<bool, kMaxCoordinates> zero_{};
};

void require_in_building(std::span<const BuildingElement> s, const GroupId& g) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!in_building(s[i], g)) {
      throw std::invalid_argument(s[i].to_string() + " is not in the building set of " +
                                  g.to_string());
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (s[i] == s[j]) throw std::invalid_argument("repeated element " + s[i].to_string());
    }
  }
}

}  // namespace

std::string to_string(Variant v) {
  switch (v) {
    case Variant::TypeA:
      return "TypeA";
    case Variant::FullMonomial:
      return "FullMonomial";
    case Variant::RR:
      return "RR";
  }
  return "?";
}

GroupId::GroupId(unsigned r, unsigned p, unsigned n) : r_(r), p_(p), n_(n) {
  if (r == 0 || p == 0 || r % p != 0) {
    throw std::invalid_argument("G(" + std::to_string(r) + "," + std::to_string(p) + "," +
                                std::to_string(n) + "): p must divide r");
  }
  if (n < 2 || n > kMaxCoordinates) {
    throw std::invalid_argument("n must lie in [2, " + std::to_string(kMaxCoordinates) + "]");
  }
  if (r > std::numeric_limits<std::uint8_t>::max()) {
    throw std::invalid_argument("r must be at most 255");
  }
  if (r == 1) {
    variant_ = Variant::TypeA;
  } else if (p == r) {
    variant_ = Variant::RR;
  } else {
    variant_ = Variant::FullMonomial;
  }
}

bool GroupId::strong_allowed(unsigned size) const {
  if (size == 0) return false;
  switch (variant_) {
    case Variant::TypeA:
      return false;
    case Variant::FullMonomial:
      return true;
    case Variant::RR:
      return size >= (r_ == 2 ? 3u : 2u);
  }
  return false;
}

std::string GroupId::to_string() const {
  return "G(" + std::to_string(r_) + "," + std::to_string(p_) + "," + std::to_string(n_) + ")";
}

unsigned WeightedBlock::size() const { return popcount(support); }

unsigned WeightedBlock::min_element() const {
  return support == 0 ? 0 : static_cast<unsigned>(std::countr_zero(support)) + 1;
}

void WeightedBlock::normalize(unsigned r) {
  if (support == 0) return;
  const unsigned shift = weights[min_element() - 1];
  for (unsigned i = 0; i < kMaxCoordinates; ++i) {
    if ((support >> i) & 1u) {
      weights[i] = static_cast<std::uint8_t>((weights[i] + r - shift) % r);
    } else {
      weights[i] = 0;
    }
  }
}

std::strong_ordering compare_blocks(const WeightedBlock& a, const WeightedBlock& b) {
  if (auto c = compare_sorted_tuples(a.support, b.support); c != 0) return c;
  for (unsigned i = 0; i < kMaxCoordinates; ++i) {
    if (auto c = a.weights[i] <=> b.weights[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

BuildingElement BuildingElement::strong(Mask zero_set) {
  if (zero_set == 0) throw std::invalid_argument("strong element needs a nonempty zero set");
  BuildingElement e;
  e.kind_ = Kind::Strong;
  e.block_.support = zero_set;
  return e;
}

BuildingElement BuildingElement::weak(const WeightedBlock& block) {
  if (popcount(block.support) < 2) throw std::invalid_argument("weak element needs >= 2 elements");
  if (block.weights[block.min_element() - 1] != 0) {
    throw std::invalid_argument("weak element is not normalized");
  }
  BuildingElement e;
  e.kind_ = Kind::Weak;
  e.block_ = block;
  return e;
}

BuildingElement BuildingElement::weak(std::span<const unsigned> elements,
                                      std::span<const unsigned> weights, unsigned r) {
  if (elements.size() != weights.size()) {
    throw std::invalid_argument("weak element: elements and weights differ in length");
  }
  WeightedBlock b;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    unsigned i = elements[k];
    if (i == 0 || i > kMaxCoordinates) throw std::invalid_argument("coordinate out of range");
    if (weights[k] >= r) throw std::invalid_argument("weight out of range");
    if ((b.support >> (i - 1)) & 1u) throw std::invalid_argument("repeated coordinate");
    b.support |= Mask{1} << (i - 1);
    b.weights[i - 1] = static_cast<std::uint8_t>(weights[k]);
  }
  return weak(b);
}

BuildingElement BuildingElement::weak(std::initializer_list<unsigned> elements,
                                      std::initializer_list<unsigned> weights, unsigned r) {
  return weak(std::span<const unsigned>(elements.begin(), elements.size()),
              std::span<const unsigned>(weights.begin(), weights.size()), r);
}

unsigned BuildingElement::dimension() const {
  return is_strong() ? popcount(block_.support) : popcount(block_.support) - 1;
}

std::string BuildingElement::to_string() const {
  std::string out = "{";
  if (is_strong()) {
    out += "0";
    for_each_bit(block_.support, [&](unsigned i) { out += "," + std::to_string(i); });
  } else {
    bool first = true;
    for_each_bit(block_.support, [&](unsigned i) {
      if (!first) out += ", ";
      first = false;
      out += std::to_string(i);
      if (block_.weight(i) != 0) out += "^" + std::to_string(block_.weight(i));
    });
  }
  return out + "}";
}

std::strong_ordering operator<=>(const BuildingElement& a, const BuildingElement& b) {
  if (a.kind_ != b.kind_) return a.is_strong() ? std::strong_ordering::less : std::strong_ordering::greater;
  return compare_blocks(a.block_, b.block_);
}

LatticeElement LatticeElement::from(const BuildingElement& e) {
  LatticeElement out;
  if (e.is_strong()) {
    out.zero_set = e.support();
  } else {
    out.blocks.push_back(e.block());
  }
  return out;
}

unsigned LatticeElement::dimension() const {
  unsigned d = popcount(zero_set);
  for (const auto& b : blocks) d += b.size() - 1;
  return d;
}

std::optional<BuildingElement> LatticeElement::as_single_component() const {
  if (zero_set != 0 && blocks.empty()) return BuildingElement::strong(zero_set);
  if (zero_set == 0 && blocks.size() == 1) return BuildingElement::weak(blocks.front());
  return std::nullopt;
}

std::string to_string(const LatticeElement& e) {
  std::string out = "<";
  bool first = true;
  if (e.zero_set != 0) {
    out += BuildingElement::strong(e.zero_set).to_string();
    first = false;
  }
  for (const auto& b : e.blocks) {
    if (!first) out += " + ";
    first = false;
    out += BuildingElement::weak(b).to_string();
  }
  return out + ">";
}

unsigned dimension(const BuildingElement& e) { return e.dimension(); }
unsigned dimension(const LatticeElement& e) { return e.dimension(); }

LatticeElement join(const LatticeElement& a, const LatticeElement& b, unsigned r) {
  DowlingJoin acc(r);
  acc.add(a);
  acc.add(b);
  return acc.result();
}

LatticeElement join(std::span<const BuildingElement> elements, unsigned r) {
  DowlingJoin acc(r);
  for (const auto& e : elements) acc.add(e);
  return acc.result();
}

bool subspace_leq(const LatticeElement& a, const LatticeElement& b, unsigned r) {
  return join(a, b, r) == b;
}

bool contained_in(const BuildingElement& a, const BuildingElement& b, unsigned r) {
  if ((a.support() & ~b.support()) != 0) return false;
  if (b.is_strong()) return true;
  if (a.is_strong()) return false;
  const unsigned base = b.block().weight(a.block().min_element());
  bool ok = true;
  for_each_bit(a.support(), [&](unsigned i) {
    if ((b.block().weight(i) + r - base) % r != a.block().weight(i)) ok = false;
  });
  return ok;
}

bool in_building(const LatticeElement& e, const GroupId& g) {
  const Mask universe = full_mask(g.n());
  if (e.zero_set != 0 && e.blocks.empty()) {
    return (e.zero_set & ~universe) == 0 && g.strong_allowed(popcount(e.zero_set));
  }
  if (e.zero_set == 0 && e.blocks.size() == 1) {
    return in_building(BuildingElement::weak(e.blocks.front()), g);
  }
  return false;
}

bool in_building(const BuildingElement& e, const GroupId& g) {
  if ((e.support() & ~full_mask(g.n())) != 0) return false;
  if (e.is_strong()) return g.strong_allowed(popcount(e.support()));
  const WeightedBlock& b = e.block();
  if (b.size() < 2 || b.weight(b.min_element()) != 0) return false;
  for (unsigned i = 0; i < kMaxCoordinates; ++i) {
    if (b.weights[i] >= g.r()) return false;
  }
  return true;
}

unsigned long long building_set_size(const GroupId& g) {
  unsigned long long strong = 0;
  unsigned long long weak = 0;
  for (unsigned t = 1; t <= g.n(); ++t) {
    unsigned long long c = binomial(g.n(), t).get_ui();
    if (g.strong_allowed(t)) strong += c;
    if (t >= 2) {
      unsigned long long w = c;
      for (unsigned k = 1; k < t; ++k) {
        if (w > std::numeric_limits<unsigned long long>::max() / g.r()) {
          return std::numeric_limits<unsigned long long>::max();
        }
        w *= g.r();
      }
      weak += w;
    }
  }
  return strong + weak;
}

std::vector<BuildingElement> building_set(const GroupId& g) {
  constexpr unsigned long long kHardLimit = 4'000'000;
  if (building_set_size(g) > kHardLimit) {
    throw GuardError("building set of " + g.to_string() + " is too large to materialize");
  }
  std::vector<BuildingElement> out;
  const Mask universe = full_mask(g.n());
  for (Mask s = 1; s <= universe && s != 0; ++s) {
    const unsigned size = popcount(s);
    if (g.strong_allowed(size)) out.push_back(BuildingElement::strong(s));
    if (size < 2) continue;
    // enumerate weights on the non-minimal elements in base r
    std::vector<unsigned> elems;
    for_each_bit(s, [&](unsigned i) { elems.push_back(i); });
    std::vector<unsigned> digits(size, 0);
    while (true) {
      WeightedBlock b;
      b.support = s;
      for (unsigned k = 1; k < size; ++k) b.weights[elems[k] - 1] = static_cast<std::uint8_t>(digits[k]);
      out.push_back(BuildingElement::weak(b));
      unsigned k = 1;
      while (k < size && ++digits[k] == g.r()) digits[k++] = 0;
      if (k == size) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool nested_pair(const BuildingElement& a, const BuildingElement& b, const GroupId& g) {
  const Mask sa = a.support();
  const Mask sb = b.support();
  if (a.is_strong() && b.is_strong()) return (sa & sb) == sa || (sa & sb) == sb;
  if (a.is_strong() || b.is_strong()) {
    const Mask z = a.is_strong() ? sa : sb;
    const Mask s = a.is_strong() ? sb : sa;
    return (s & ~z) == 0 || (s & z) == 0;
  }
  if ((sa & sb) == 0 || a == b) return true;
  if ((sa & ~sb) == 0 && contained_in(a, b, g.r())) return true;
  if ((sb & ~sa) == 0 && contained_in(b, a, g.r())) return true;
  // Two distinct lines on the same pair of coordinates span the coordinate
  // plane; they are nested exactly when that plane is not irreducible.
  if (sa == sb && popcount(sa) == 2) return !g.strong_allowed(2);
  return false;
}

bool planes_matter(const GroupId& g) { return g.variant() == Variant::RR && g.r() == 2; }

bool coordinate_planes_nested(std::span<const BuildingElement> s, const GroupId& g) {
  if (!planes_matter(g)) return true;
  // Both lines on a pair of coordinates span a coordinate plane that is not
  // in the building set, but two such planes, or one plane and a strong
  // element beside it, sum to a coordinate subspace that is.
  std::vector<Mask> planes;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s[i].is_weak() || popcount(s[i].support()) != 2) continue;
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[j].is_weak() && s[j].support() == s[i].support() && !(s[j] == s[i])) {
        if (std::find(planes.begin(), planes.end(), s[i].support()) == planes.end()) {
          planes.push_back(s[i].support());
        }
      }
    }
  }
  if (planes.size() >= 2) return false;
  if (planes.empty()) return true;
  for (const auto& e : s) {
    if (e.is_strong() && (e.support() & planes[0]) != planes[0]) return false;
  }
  return true;
}

bool is_nested(std::span<const BuildingElement> s, const GroupId& g) {
  require_in_building(s, g);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!nested_pair(s[i], s[j], g)) return false;
    }
  }
  return coordinate_planes_nested(s, g);
}

bool is_nested_def(std::span<const BuildingElement> s, const GroupId& g) {
  require_in_building(s, g);
  const std::size_t m = s.size();
  std::vector<LatticeElement> lat;
  lat.reserve(m);
  for (const auto& e : s) lat.push_back(LatticeElement::from(e));
  std::vector<std::vector<bool>> comparable(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      comparable[i][j] = subspace_leq(lat[i], lat[j], g.r()) || subspace_leq(lat[j], lat[i], g.r());
    }
  }
  // depth-first over antichains, checking the sum of each one of size >= 2
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t, const LatticeElement&)> search =
      [&](std::size_t start, const LatticeElement& sum) -> bool {
    for (std::size_t k = start; k < m; ++k) {
      bool antichain = true;
      for (std::size_t c : chosen) antichain = antichain && !comparable[c][k];
      if (!antichain) continue;
      LatticeElement next = join(sum, lat[k], g.r());
      chosen.push_back(k);
      if (chosen.size() >= 2 && in_building(next, g)) return false;
      if (!search(k + 1, next)) return false;
      chosen.pop_back();
    }
    return true;
  };
  return search(0, LatticeElement{});
}

unsigned d_value(std::span<const BuildingElement> h, const BuildingElement& b, unsigned r) {
  const LatticeElement lb = LatticeElement::from(b);
  for (const auto& a : h) {
    if (a == b || !subspace_leq(LatticeElement::from(a), lb, r)) {
      throw std::invalid_argument(a.to_string() + " is not strictly contained in " + b.to_string());
    }
  }
  return b.dimension() - join(h, r).dimension();
}

NestedSetComplex::NestedSetComplex(const GroupId& g, Options options) : group_(g) {
  const unsigned long long size = building_set_size(g);
  if (size > options.guard) {
    throw GuardError("building set of " + g.to_string() + " has " + std::to_string(size) +
                     " elements, above the guard of " + std::to_string(options.guard));
  }
  elements_ = building_set(g);
  if (options.weak_only) {
    std::erase_if(elements_, [](const BuildingElement& e) { return e.is_strong(); });
  }
  const std::size_t m = elements_.size();
  const std::size_t words = (m + 63) / 64;
  compat_.assign(m, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (nested_pair(elements_[i], elements_[j], g)) {
        compat_[i][j / 64] |= std::uint64_t{1} << (j % 64);
        compat_[j][i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }
}

void NestedSetComplex::for_each(
    const std::function<void(std::span<const std::size_t>)>& visit) const {
  std::vector<std::size_t> current;
  std::vector<BuildingElement> members;
  std::function<void(const std::vector<std::size_t>&)> dfs =
      [&](const std::vector<std::size_t>& candidates) {
        visit(current);
        for (std::size_t a = 0; a < candidates.size(); ++a) {
          const std::size_t idx = candidates[a];
          if (planes_matter(group_)) {
            members.clear();
            for (std::size_t c : current) members.push_back(elements_[c]);
            members.push_back(elements_[idx]);
            if (!coordinate_planes_nested(members, group_)) continue;
          }
          std::vector<std::size_t> next;
          for (std::size_t b = a + 1; b < candidates.size(); ++b) {
            if (compatible(idx, candidates[b])) next.push_back(candidates[b]);
          }
          current.push_back(idx);
          dfs(next);
          current.pop_back();
        }
      };
  std::vector<std::size_t> all(elements_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  dfs(all);
}

std::size_t NestedSetComplex::count() const {
  std::size_t n = 0;
  for_each([&n](std::span<const std::size_t>) { ++n; });
  return n;
}

std::vector<NestedSet> NestedSetComplex::enumerate() const {
  std::vector<NestedSet> out;
  for_each([&](std::span<const std::size_t> idx) {
    NestedSet s;
    for (std::size_t i : idx) s.elements.push_back(elements_[i]);
    out.push_back(std::move(s));
  });
  return out;
}

std::vector<NestedSet> enumerate_nested_sets(const GroupId& g, std::size_t guard) {
  return NestedSetComplex(g, {.guard = guard, .weak_only = false}).enumerate();
}

}  // namespace wonderful
