#include "roughdm/rough_structures.hpp"

#include <algorithm>

namespace roughdm {

bool canonical_less(const RoughPair& a, const RoughPair& b) {
  const auto sa = a.upper.size();
  const auto sb = b.upper.size();
  if (sa != sb) return sa < sb;
  if (a.upper.bits() != b.upper.bits()) return a.upper.bits() < b.upper.bits();
  return a.lower.bits() < b.lower.bits();
}

RoughPair kleene_neg(const RoughPair& p) { return {p.upper.complement(), p.lower.complement()}; }

std::string format_pair(const Universe& u, const RoughPair& p) {
  return "(" + u.format(p.lower) + "," + u.format(p.upper) + ")";
}

PairIndex::PairIndex(const std::vector<RoughPair>& pairs) {
  index_.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) index_.emplace(pairs[i], i);
}

std::optional<std::size_t> PairIndex::find(const RoughPair& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PairIndex::at(const RoughPair& p) const {
  auto i = find(p);
  if (!i) throw PreconditionError("pair is not an element of the family");
  return *i;
}

RSFamily::RSFamily(ApproxSpace space, std::vector<RoughPair> pairs)
    : space_(std::move(space)), pairs_(std::move(pairs)), index_(pairs_) {}

std::vector<std::vector<bool>> RSFamily::order_matrix() const {
  std::vector<std::vector<bool>> m(size(), std::vector<bool>(size()));
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) m[i][j] = leq(i, j);
  }
  return m;
}

RSFamily build_rs(const ApproxSpace& space, std::size_t cap) {
  const auto n = space.size();
  if (n > cap) throw CapExceeded("rough-set enumeration", cap, n);
  std::unordered_map<RoughPair, bool> seen;
  std::vector<RoughPair> pairs;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    const Subset x(n, b);
    RoughPair p{space.lower(x), space.upper(x)};
    if (seen.emplace(p, true).second) pairs.push_back(p);
  }
  std::sort(pairs.begin(), pairs.end(), canonical_less);
  return RSFamily(space, std::move(pairs));
}

LatticeCheck rs_is_lattice(const RSFamily& rs) {
  const auto m = rs.size();
  // For each pair, collect the minimal elements of its upper-bound set; a
  // least upper bound exists iff that set is a singleton. Dually for meets.
  auto extremal = [&](std::size_t i, std::size_t j, bool upward) {
    std::vector<std::size_t> bounds;
    for (std::size_t k = 0; k < m; ++k) {
      bool is_bound = upward ? (rs.leq(i, k) && rs.leq(j, k)) : (rs.leq(k, i) && rs.leq(k, j));
      if (is_bound) bounds.push_back(k);
    }
    std::vector<std::size_t> out;
    for (auto k : bounds) {
      bool extreme = true;
      for (auto l : bounds) {
        if (l != k && (upward ? rs.leq(l, k) : rs.leq(k, l))) {
          extreme = false;
          break;
        }
      }
      if (extreme) out.push_back(k);
    }
    return out;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (bool upward : {true, false}) {
        auto ext = extremal(i, j, upward);
        if (ext.size() != 1) {
          return {false, LatticeWitness{i, j, upward ? "join" : "meet", std::move(ext)}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

std::vector<Subset> saturated_sets(const Relation& equivalence) {
  const auto classes = equivalence_classes(equivalence);
  const auto& blocks = classes.blocks();
  if (blocks.size() > 24) throw CapExceeded("saturated-set enumeration", 24, blocks.size());
  std::vector<Subset> out;
  const auto n = equivalence.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << blocks.size()); ++mask) {
    Subset s = Subset::empty(n);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      if ((mask >> k) & 1U) s |= blocks[k];
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) { return a.bits() < b.bits(); });
  return out;
}

std::vector<RoughPair> exact_family(const ApproxSpace& space) {
  if (!space.flags().reflexive) throw PreconditionError("exact family requires a reflexive relation");
  std::vector<RoughPair> out;
  for (const auto& a : saturated_sets(equivalence_closure(space.relation()))) out.push_back({a, a});
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool AFamily::contains(const Subset& z) const {
  return std::binary_search(sets.begin(), sets.end(), z,
                            [](const Subset& a, const Subset& b) { return a.bits() < b.bits(); });
}

AFamily build_A_family(const ApproxSpace& space, std::size_t cap) {
  const auto n = space.size();
  if (n > cap) throw CapExceeded("A-family enumeration", cap, n);
  AFamily out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    const Subset z(n, b);
    const auto lower_then_inv_upper = space.upper(space.lower(z), Direction::inverse);
    const auto upper_then_inv_lower = space.lower(space.upper(z), Direction::inverse);
    if (lower_then_inv_upper == upper_then_inv_lower) out.sets.push_back(z);
  }
  return out;
}

}  // namespace roughdm
