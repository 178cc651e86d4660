#include "roughdm/completion.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace roughdm {

DMLattice::DMLattice(ApproxSpace space, std::vector<RoughPair> elements, FiniteLattice lattice,
                     std::vector<bool> in_rs)
    : space_(std::move(space)),
      elements_(std::move(elements)),
      index_(elements_),
      lattice_(std::move(lattice)),
      in_rs_(std::move(in_rs)) {
  involution_.map.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    auto j = index_.find(kleene_neg(elements_[i]));
    if (!j) throw std::logic_error("completion is not closed under the Kleene negation");
    involution_.map[i] = *j;
  }
}

std::size_t DMLattice::rs_count() const {
  return static_cast<std::size_t>(std::count(in_rs_.begin(), in_rs_.end(), true));
}

DMConditions dm_conditions(const ApproxSpace& space, const Subset& a, const Subset& b) {
  DMConditions c;
  c.lower_definable = space.is_definable(a, DefinableFamily::lower_definable);
  c.upper_definable = space.is_definable(b, DefinableFamily::upper_definable);
  c.closure_bound = space.upper(space.upper(a, Direction::inverse)).subset_of(b);
  c.singleton_agree = (a & space.singletons()) == (b & space.singletons());
  return c;
}

bool dm_membership(const ApproxSpace& space, const Subset& a, const Subset& b) {
  return dm_conditions(space, a, b).all();
}

RoughPair dm_join(const ApproxSpace& space, const RoughPair& p, const RoughPair& q) {
  return {space.lower(space.upper(p.lower | q.lower, Direction::inverse)), p.upper | q.upper};
}

RoughPair dm_meet(const ApproxSpace& space, const RoughPair& p, const RoughPair& q) {
  return {p.lower & q.lower, space.upper(space.lower(p.upper & q.upper, Direction::inverse))};
}

DMLattice build_dm(const ApproxSpace& space, std::size_t cap) {
  if (space.size() > cap) throw CapExceeded("completion", cap, space.size());
  const auto lowers = space.lower_definable_sets();
  const auto uppers = space.upper_definable_sets();
  const auto& s = space.singletons();
  std::vector<RoughPair> elements;
  for (const auto& a : lowers) {
    const auto closure = space.upper(space.upper(a, Direction::inverse));
    const auto a_s = a & s;
    for (const auto& b : uppers) {
      if (closure.subset_of(b) && (b & s) == a_s) elements.push_back({a, b});
    }
  }
  std::sort(elements.begin(), elements.end(), canonical_less);
  const auto m = elements.size();
  if (m > 65535) throw CapExceeded("completion size", 65535, m);

  const PairIndex index(elements);
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  std::vector<ElemIndex> join(m * m);
  std::vector<ElemIndex> meet(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      leq[i][j] = elements[i].leq(elements[j]);
      if (j < i) {
        join[i * m + j] = join[j * m + i];
        meet[i * m + j] = meet[j * m + i];
        continue;
      }
      auto jn = index.find(dm_join(space, elements[i], elements[j]));
      auto mt = index.find(dm_meet(space, elements[i], elements[j]));
      if (!jn || !mt) throw std::logic_error("completion is not closed under its join/meet formulas");
      join[i * m + j] = static_cast<ElemIndex>(*jn);
      meet[i * m + j] = static_cast<ElemIndex>(*mt);
    }
  }
  auto lattice = FiniteLattice::from_tables(leq, std::move(join), std::move(meet));

  const auto rs = build_rs(space, cap);
  std::vector<bool> in_rs(m, false);
  for (const auto& p : rs.pairs()) {
    auto i = index.find(p);
    if (!i) throw std::logic_error("rough set missing from its completion");
    in_rs[*i] = true;
  }
  return DMLattice(space, std::move(elements), std::move(lattice), std::move(in_rs));
}

namespace {

struct DynBitsHash {
  std::size_t operator()(const DynBits& b) const noexcept { return b.hash(); }
};

}  // namespace

CutCompletion macneille_oracle(const std::vector<std::vector<bool>>& leq, std::size_t cap) {
  const auto m = leq.size();
  if (m > cap) throw CapExceeded("cut completion", cap, m);
  std::vector<DynBits> principal_cuts(m, DynBits(m));
  std::vector<DynBits> principal_ups(m, DynBits(m));
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      if (leq[q][p]) principal_cuts[p].set(q);
      if (leq[p][q]) principal_ups[p].set(q);
    }
  }

  std::vector<DynBits> cuts;
  std::unordered_set<DynBits, DynBitsHash> seen;
  auto add = [&](DynBits c) {
    if (seen.insert(c).second) {
      cuts.push_back(std::move(c));
      if (cuts.size() > cap) throw CapExceeded("cut completion", cap, cuts.size());
    }
  };
  DynBits whole(m);
  whole.set_all();
  add(whole);
  for (const auto& c : principal_cuts) add(c);
  // Every normal cut is an intersection of principal down-sets.
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) add(cuts[i] & cuts[j]);
  }

  // A^u = common upper bounds, (A^u)^l = common lower bounds of those.
  for (const auto& cut : cuts) {
    DynBits ub(m);
    ub.set_all();
    for (std::size_t p = 0; p < m; ++p) {
      if (cut.test(p)) ub &= principal_ups[p];
    }
    DynBits lb(m);
    lb.set_all();
    for (std::size_t q = 0; q < m; ++q) {
      if (ub.test(q)) lb &= principal_cuts[q];
    }
    if (!(lb == cut)) throw std::logic_error("generated cut is not normal");
  }

  std::sort(cuts.begin(), cuts.end(), [](const DynBits& a, const DynBits& b) {
    const auto ca = a.count();
    const auto cb = b.count();
    if (ca != cb) return ca < cb;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a.test(k) != b.test(k)) return a.test(k);
    }
    return false;
  });

  const auto n = cuts.size();
  std::vector<std::vector<bool>> order(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) order[i][j] = cuts[i].subset_of(cuts[j]);
  }
  CutCompletion out;
  out.lattice = FiniteLattice::from_order(order);
  out.principal.resize(m);
  for (std::size_t p = 0; p < m; ++p) {
    out.principal[p] = static_cast<std::size_t>(
        std::find(cuts.begin(), cuts.end(), principal_cuts[p]) - cuts.begin());
  }
  out.cuts = std::move(cuts);
  return out;
}

OracleComparison compare_with_oracle(const DMLattice& dm, const RSFamily& rs) {
  const auto oracle = macneille_oracle(rs.order_matrix());
  std::vector<std::optional<std::size_t>> fixed(dm.size());
  for (std::size_t i = 0; i < dm.size(); ++i) {
    if (auto k = rs.find(dm.element(i))) fixed[i] = oracle.principal[*k];
  }
  OracleComparison out;
  if (auto mapping = lattice_isomorphic(dm.lattice(), oracle.lattice, fixed)) {
    out.isomorphic = true;
    out.mapping = std::move(*mapping);
  }
  return out;
}

}  // namespace roughdm
