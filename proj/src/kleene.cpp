#include "roughdm/kleene.hpp"

#include <algorithm>
#include <stdexcept>

namespace roughdm {

std::optional<std::pair<std::size_t, std::size_t>> pseudo_kleene_witness(const FiniteLattice& l,
                                                                         const Involution& inv) {
  for (std::size_t p = 0; p < l.size(); ++p) {
    const auto lo = l.meet(p, inv(p));
    for (std::size_t q = 0; q < l.size(); ++q) {
      if (!l.leq(lo, l.join(q, inv(q)))) return std::pair{p, q};
    }
  }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> paraorthomodular_witness(const FiniteLattice& l,
                                                                            const Involution& inv) {
  for (std::size_t p = 0; p < l.size(); ++p) {
    for (std::size_t q = 0; q < l.size(); ++q) {
      if (p != q && l.leq(p, q) && l.meet(inv(p), q) == l.bottom()) return std::pair{p, q};
    }
  }
  return std::nullopt;
}

bool is_sharp(const FiniteLattice& l, const Involution& inv, std::size_t x) {
  return l.meet(x, inv(x)) == l.bottom();
}

bool sharp_criterion(const ApproxSpace& space, const RoughPair& p) {
  if (!dm_membership(space, p.lower, p.upper)) throw PreconditionError("pair is not an element of DM(RS)");
  return space.lower(p.upper, Direction::inverse) == space.upper(p.lower, Direction::inverse);
}

std::vector<std::size_t> complements_of(const FiniteLattice& l, std::size_t x) {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < l.size(); ++y) {
    if (l.meet(x, y) == l.bottom() && l.join(x, y) == l.top()) out.push_back(y);
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> neutrality_witness(const FiniteLattice& l, std::size_t a) {
  const auto m = l.size();
  for (std::size_t x = 0; x < m; ++x) {
    const auto ax_meet = l.meet(a, x);
    const auto ax_join = l.join(a, x);
    for (std::size_t y = x + 1; y < m; ++y) {
      const auto lhs = l.join(l.join(ax_meet, l.meet(x, y)), l.meet(y, a));
      const auto rhs = l.meet(l.meet(ax_join, l.join(x, y)), l.join(y, a));
      if (lhs != rhs) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

bool is_neutral(const FiniteLattice& l, std::size_t a) { return !neutrality_witness(l, a).has_value(); }

std::vector<std::size_t> center_by_definition(const FiniteLattice& l) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < l.size(); ++a) {
    if (!complements_of(l, a).empty() && is_neutral(l, a)) out.push_back(a);
  }
  return out;
}

bool splits_by_meets(const FiniteLattice& l, const Involution& inv, std::size_t a) {
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (l.join(l.meet(x, a), l.meet(x, inv(a))) != x) return false;
  }
  return true;
}

bool splits_by_joins(const FiniteLattice& l, const Involution& inv, std::size_t a) {
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (l.meet(l.join(x, a), l.join(x, inv(a))) != x) return false;
  }
  return true;
}

bool central_by_definable_sets(const DMLattice& dm, std::size_t i) {
  const auto& space = dm.space();
  const auto& p = dm.element(i);
  if (!sharp_criterion(space, p)) return false;
  const auto b_c = p.upper.complement();
  for (const auto& x : space.lower_definable_sets()) {
    const auto mixed = (x & p.lower) | (x & b_c);
    if (space.lower(space.upper(mixed, Direction::inverse)) != x) return false;
  }
  return true;
}

CenterAnalysis analyze_center(const DMLattice& dm) {
  const auto& l = dm.lattice();
  const auto& inv = dm.involution();
  const auto m = dm.size();
  CenterAnalysis out;
  out.by_definition.assign(m, false);
  out.by_decomposition.assign(m, false);
  out.by_definable_sets.assign(m, false);
  for (auto c : center_by_definition(l)) out.by_definition[c] = true;
  for (std::size_t i = 0; i < m; ++i) {
    out.by_decomposition[i] = is_sharp(l, inv, i) && splits_by_meets(l, inv, i);
    out.by_definable_sets[i] = central_by_definable_sets(dm, i);
    if (out.by_definition[i] != out.by_decomposition[i] || out.by_definition[i] != out.by_definable_sets[i]) {
      out.agree = false;
    }
    if (out.by_definition[i]) out.center.push_back(i);
  }
  return out;
}

std::vector<std::size_t> center(const DMLattice& dm) {
  auto a = analyze_center(dm);
  if (!a.agree) throw std::logic_error("center characterizations disagree");
  return a.center;
}

std::vector<ElementAnalysis> analyze_elements(const DMLattice& dm) {
  const auto& l = dm.lattice();
  const auto& inv = dm.involution();
  const auto cen = analyze_center(dm);
  std::vector<ElementAnalysis> out;
  for (std::size_t i = 0; i < dm.size(); ++i) {
    ElementAnalysis e;
    e.index = i;
    e.sharp = is_sharp(l, inv, i);
    e.complements = complements_of(l, i);
    e.complemented = !e.complements.empty();
    e.neutral = is_neutral(l, i);
    e.central = cen.by_definition[i];
    e.exact = dm.element(i).is_exact();
    out.push_back(std::move(e));
  }
  return out;
}

Subset phi(const ApproxSpace& space, const RoughPair& p) {
  if (!sharp_criterion(space, p)) throw PreconditionError("φ is defined on sharp pairs only");
  return space.upper(p.lower, Direction::inverse);
}

RoughPair psi(const ApproxSpace& space, const Subset& z) {
  if (space.upper(space.lower(z), Direction::inverse) != space.lower(space.upper(z), Direction::inverse)) {
    throw PreconditionError("ψ is defined on the A-family only");
  }
  return {space.lower(z), space.upper(z)};
}

ChajdaCheck check_chajda_identity(const FiniteLattice& l, const Involution& inv) {
  for (std::size_t x = 0; x < l.size(); ++x) {
    for (std::size_t y = 0; y < l.size(); ++y) {
      const auto lhs = l.meet(x, l.join(inv(x), y));
      const auto rhs = l.join(l.meet(x, inv(x)), l.meet(x, y));
      if (lhs != rhs) return {false, ChajdaWitness{x, y, lhs, rhs}};
    }
  }
  return {};
}

std::optional<PentagonWitness> find_pentagon(const FiniteLattice& l) {
  const auto m = l.size();
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t a = 0; a < m; ++a) {
      if (l.leq(a, c) || l.leq(c, a)) continue;
      for (std::size_t b = 0; b < m; ++b) {
        if (!l.lt(a, b) || l.leq(b, c) || l.leq(c, b)) continue;
        const auto lo = l.meet(a, c);
        const auto hi = l.join(a, c);
        if (l.meet(b, c) == lo && l.join(b, c) == hi) return PentagonWitness{lo, a, b, c, hi};
      }
    }
  }
  return std::nullopt;
}

std::optional<DiamondWitness> find_diamond(const FiniteLattice& l) {
  const auto m = l.size();
  auto incomparable = [&](std::size_t i, std::size_t j) { return !l.leq(i, j) && !l.leq(j, i); };
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = x + 1; y < m; ++y) {
      if (!incomparable(x, y)) continue;
      const auto lo = l.meet(x, y);
      const auto hi = l.join(x, y);
      for (std::size_t z = y + 1; z < m; ++z) {
        if (!incomparable(x, z) || !incomparable(y, z)) continue;
        if (l.meet(x, z) == lo && l.meet(y, z) == lo && l.join(x, z) == hi && l.join(y, z) == hi) {
          return DiamondWitness{lo, x, y, z, hi};
        }
      }
    }
  }
  return std::nullopt;
}

CFamilyAnalysis c_family_analysis(const DMLattice& dm) {
  const auto& l = dm.lattice();
  const auto& inv = dm.involution();
  CFamilyAnalysis out;
  for (std::size_t i = 0; i < dm.size(); ++i) {
    if (is_sharp(l, inv, i)) out.members.push_back(i);
  }
  out.is_sublattice = l.is_sublattice(out.members);

  const auto k = out.members.size();
  std::vector<std::vector<bool>> order(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) order[i][j] = l.leq(out.members[i], out.members[j]);
  }
  FiniteLattice induced;
  try {
    induced = FiniteLattice::from_order(order);
    out.induced_is_lattice = true;
  } catch (const PreconditionError&) {
    return out;
  }

  bool all_complemented = true;
  for (std::size_t i = 0; i < k; ++i) {
    auto comps = complements_of(induced, i);
    if (comps.empty()) all_complemented = false;
    if (comps.size() > 1 && !out.multi_complement) {
      std::vector<std::size_t> mapped;
      for (auto c : comps) mapped.push_back(out.members[c]);
      out.multi_complement = std::pair{out.members[i], std::move(mapped)};
    }
  }
  out.uniquely_complemented = !out.multi_complement.has_value() && all_complemented;
  out.is_boolean = all_complemented && induced.is_distributive();

  auto lift = [&](std::size_t i) { return out.members[i]; };
  if (auto p = find_pentagon(induced)) {
    out.pentagon = PentagonWitness{lift(p->bottom), lift(p->a), lift(p->b), lift(p->c), lift(p->top)};
  }
  if (auto d = find_diamond(induced)) {
    out.diamond = DiamondWitness{lift(d->bottom), lift(d->x), lift(d->y), lift(d->z), lift(d->top)};
  }
  return out;
}

bool is_complete_sublattice(const FiniteLattice& l, const std::vector<std::size_t>& subset) {
  const bool has_bounds = std::find(subset.begin(), subset.end(), l.bottom()) != subset.end() &&
                          std::find(subset.begin(), subset.end(), l.top()) != subset.end();
  return has_bounds && l.is_sublattice(subset);
}

CompleteSublatticeCheck check_complete_sublattice(const DMLattice& dm, const std::vector<std::size_t>& t) {
  CompleteSublatticeCheck out;
  out.lattice_side = is_complete_sublattice(dm.lattice(), t);

  std::vector<Subset> image;
  for (auto i : t) image.push_back(phi(dm.space(), dm.element(i)));
  auto in_image = [&](const Subset& s) { return std::find(image.begin(), image.end(), s) != image.end(); };
  bool closed = in_image(dm.space().empty_set()) && in_image(dm.space().full_set());
  for (std::size_t i = 0; closed && i < image.size(); ++i) {
    for (std::size_t j = i + 1; j < image.size(); ++j) {
      if (!in_image(image[i] | image[j]) || !in_image(image[i] & image[j])) {
        closed = false;
        break;
      }
    }
  }
  out.powerset_side = closed;
  return out;
}

}  // namespace roughdm
