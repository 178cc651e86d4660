#include "roughdm/brouwer_zadeh.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "roughdm/kleene.hpp"

namespace roughdm {

namespace {

void fail(LawResult& r, std::vector<std::size_t> witness) {
  if (r.holds) {
    r.holds = false;
    r.witness = std::move(witness);
  }
}

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Restricted-growth strings of length k: block[i] ≤ 1 + max(block[0..i-1]).
void for_each_rgs(std::size_t k, const std::function<void(const std::vector<std::size_t>&, std::size_t)>& f) {
  if (k == 0) {
    f({}, 0);
    return;
  }
  std::vector<std::size_t> rgs(k, 0);
  std::vector<std::size_t> prefix_max(k, 0);
  while (true) {
    f(rgs, prefix_max[k - 1] + 1);
    std::size_t i = k - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < k; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

}  // namespace

BZReport check_bz_axioms(const FiniteLattice& l, const Involution& inv, const NegOperator& neg) {
  BZReport r;
  const auto m = l.size();
  if (auto w = pseudo_kleene_witness(l, inv)) fail(r.pseudo_kleene, {w->first, w->second});
  if (auto w = paraorthomodular_witness(l, inv)) fail(r.paraorthomodular, {w->first, w->second});
  for (std::size_t a = 0; a < m; ++a) {
    const auto na = neg(a);
    const auto nna = neg(na);
    if (l.meet(a, na) != l.bottom()) fail(r.bz[1], {a});
    if (!l.leq(a, nna)) fail(r.bz[2], {a});
    for (std::size_t b = 0; b < m; ++b) {
      if (l.leq(a, b) && !l.leq(neg(b), na)) fail(r.bz[3], {a, b});
    }
    if (inv(na) != nna) fail(r.bz[4], {a});
    if (!l.leq(na, inv(a))) fail(r.bz[5], {a});
    if (neg(nna) != na) fail(r.bz[6], {a});
    if (l.meet(na, inv(na)) != l.bottom() || l.join(na, inv(na)) != l.top()) fail(r.bz[7], {a});
    if (!l.leq(neg(l.meet(a, inv(a))), l.join(na, neg(inv(a))))) fail(r.bz[8], {a});
    if (is_sharp(l, inv, a)) r.sharp.push_back(a);
    if (l.join(a, na) == l.top()) r.brouwer_sharp.push_back(a);
  }
  r.bz_lattice = r.pseudo_kleene.holds && r.bz[1].holds && r.bz[2].holds && r.bz[3].holds && r.bz[4].holds;
  r.pbz = r.bz_lattice && r.paraorthomodular.holds;
  r.bz_star = r.bz_lattice && r.bz[8].holds;
  r.pbz_star = r.pbz && r.bz[8].holds;
  r.derived_consistent = !r.bz_lattice || (r.bz[5].holds && r.bz[6].holds && r.bz[7].holds);
  r.antiortholattice =
      r.pbz_star && r.sharp == sorted_unique({l.bottom(), l.top()});
  r.clopen = sorted_unique(neg.map);
  return r;
}

std::size_t diamond(const Involution&, const NegOperator& neg, std::size_t x) { return neg(neg(x)); }

std::size_t box(const Involution& inv, const NegOperator& neg, std::size_t x) { return neg(inv(x)); }

ModalLawCheck check_modal_laws(const FiniteLattice& l, const Involution& inv, const NegOperator& neg) {
  auto dia = [&](std::size_t x) { return diamond(inv, neg, x); };
  auto bx = [&](std::size_t x) { return box(inv, neg, x); };
  const auto m = l.size();
  for (std::size_t a = 0; a < m; ++a) {
    if (!l.leq(bx(a), a) || !l.leq(a, dia(a))) return {false, "box below, diamond above", {a}};
    if (bx(bx(a)) != bx(a) || dia(dia(a)) != dia(a)) return {false, "idempotence", {a}};
    if (bx(dia(a)) != dia(a) || dia(bx(a)) != bx(a)) return {false, "absorption", {a}};
    if (inv(dia(a)) != bx(inv(a)) || inv(bx(a)) != dia(inv(a))) return {false, "duality", {a}};
    for (std::size_t b = 0; b < m; ++b) {
      if (l.leq(a, b) && (!l.leq(bx(a), bx(b)) || !l.leq(dia(a), dia(b)))) return {false, "monotonicity", {a, b}};
    }
  }
  return {};
}

ClopenFamily clopen_family(const FiniteLattice& l, const Involution& inv, const NegOperator& neg) {
  ClopenFamily out;
  out.members = sorted_unique(neg.map);
  std::vector<std::size_t> closed;
  std::vector<std::size_t> open;
  for (std::size_t a = 0; a < l.size(); ++a) {
    if (diamond(inv, neg, a) == a) closed.push_back(a);
    if (box(inv, neg, a) == a) open.push_back(a);
  }
  out.descriptions_agree = closed == out.members && open == out.members;
  return out;
}

NegOperator neg_from_equivalence(const DMLattice& dm, const Relation& e) {
  require_equivalence(e);
  if (!dm.space().relation().subset_of(e)) throw PreconditionError("equivalence does not contain the relation");
  const ApproxSpace es(e);
  NegOperator neg;
  for (const auto& p : dm.elements()) {
    const auto x = es.lower(p.upper.complement());
    auto i = dm.find({x, x});
    if (!i) throw std::logic_error("negation from equivalence leaves the completion");
    neg.map.push_back(*i);
  }
  return neg;
}

std::vector<Relation> extending_equivalences(const ApproxSpace& space, std::size_t cap) {
  require_reflexive(space.relation());
  if (space.size() > cap) throw CapExceeded("partition enumeration", cap, space.size());
  const auto classes = equivalence_classes(equivalence_closure(space.relation()));
  const auto& blocks = classes.blocks();
  std::vector<std::pair<std::size_t, Relation>> found;
  for_each_rgs(blocks.size(), [&](const std::vector<std::size_t>& rgs, std::size_t count) {
    std::vector<Subset> merged(count, space.empty_set());
    for (std::size_t i = 0; i < rgs.size(); ++i) merged[rgs[i]] |= blocks[i];
    found.emplace_back(count, Partition(space.universe_ptr(), std::move(merged)).to_relation());
  });
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<Relation> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

std::string subortholattice_defect(const FiniteLattice& l, const Involution& inv,
                                   const std::vector<std::size_t>& family) {
  std::vector<bool> in(l.size(), false);
  for (auto i : family) {
    if (i >= l.size()) return "element index out of range";
    in[i] = true;
  }
  if (!in[l.bottom()]) return "missing the least element";
  if (!in[l.top()]) return "missing the greatest element";
  for (auto i : family) {
    if (!in[inv(i)]) return "not closed under the Kleene negation";
    if (!is_sharp(l, inv, i)) return "contains a non-sharp element";
  }
  if (!l.is_sublattice(family)) return "not closed under joins and meets";
  return {};
}

NegOperator neg_from_subortholattice(const FiniteLattice& l, const Involution& inv,
                                     const std::vector<std::size_t>& family) {
  if (auto d = subortholattice_defect(l, inv, family); !d.empty()) {
    throw PreconditionError("not a complete subortholattice: " + d);
  }
  NegOperator neg;
  for (std::size_t x = 0; x < l.size(); ++x) {
    std::size_t acc = l.bottom();
    for (auto n : family) {
      if (l.leq(n, inv(x))) acc = l.join(acc, n);
    }
    neg.map.push_back(acc);
  }
  return neg;
}

NegOperator neg_from_subortholattice_sets(const DMLattice& dm, const std::vector<std::size_t>& family) {
  const auto& l = dm.lattice();
  NegOperator neg;
  for (const auto& p : dm.elements()) {
    std::size_t acc = l.bottom();
    for (auto n : family) {
      const auto& q = dm.element(n);
      if (!q.lower.intersects(p.upper) && !q.upper.intersects(p.lower)) acc = l.join(acc, n);
    }
    neg.map.push_back(acc);
  }
  return neg;
}

NegOperator trivial_neg(const FiniteLattice& l) {
  NegOperator neg;
  neg.map.assign(l.size(), l.bottom());
  neg.map[l.bottom()] = l.top();
  return neg;
}

std::vector<PBZStructure> enumerate_pbz_structures(const DMLattice& dm, std::size_t cap) {
  if (dm.size() > cap) throw CapExceeded("PBZ enumeration", cap, dm.size());
  const auto& l = dm.lattice();
  const auto& inv = dm.involution();
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < dm.size(); ++i) {
    if (i != l.bottom() && is_sharp(l, inv, i)) candidates.push_back(i);
  }

  std::vector<PBZStructure> out;
  std::vector<std::size_t> atoms;
  auto try_atoms = [&]() {
    const auto k = atoms.size();
    if (k >= 31) throw CapExceeded("atom count", 30, k);
    const std::size_t subsets = std::size_t{1} << k;
    std::vector<std::size_t> joins(subsets);
    joins[0] = l.bottom();
    for (std::size_t s = 1; s < subsets; ++s) {
      const auto low = static_cast<std::size_t>(std::countr_zero(s));
      joins[s] = l.join(joins[s & (s - 1)], atoms[low]);
    }
    if (joins[subsets - 1] != l.top()) return;
    if (sorted_unique(joins).size() != subsets) return;
    for (std::size_t s = 0; s < subsets; ++s) {
      for (std::size_t t = s + 1; t < subsets; ++t) {
        if (l.meet(joins[s], joins[t]) != joins[s & t]) return;
      }
    }
    auto family = sorted_unique(joins);
    if (!subortholattice_defect(l, inv, family).empty()) return;
    PBZStructure st;
    st.clopen = family;
    st.atoms = atoms;
    st.neg = neg_from_subortholattice(l, inv, family);
    const auto back = clopen_family(l, inv, st.neg);
    if (back.members != family) throw std::logic_error("clopen family of the induced negation differs");
    if (neg_from_subortholattice(l, inv, back.members) != st.neg) {
      throw std::logic_error("negation induced by its clopen family differs");
    }
    out.push_back(std::move(st));
  };
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t from, std::size_t acc) {
    if (acc == l.top()) try_atoms();
    for (std::size_t c = from; c < candidates.size(); ++c) {
      const auto a = candidates[c];
      bool disjoint = true;
      for (auto b : atoms) {
        if (l.meet(a, b) != l.bottom()) {
          disjoint = false;
          break;
        }
      }
      if (!disjoint) continue;
      atoms.push_back(a);
      extend(c + 1, l.join(acc, a));
      atoms.pop_back();
    }
  };
  extend(0, l.bottom());
  std::stable_sort(out.begin(), out.end(), [](const PBZStructure& a, const PBZStructure& b) {
    if (a.atoms.size() != b.atoms.size()) return a.atoms.size() < b.atoms.size();
    return a.atoms < b.atoms;
  });
  return out;
}

std::size_t count_boolean_subalgebras_in_A(const ApproxSpace& space, std::size_t cap) {
  const auto n = space.size();
  if (n > cap) throw CapExceeded("partition enumeration", cap, n);
  const auto a = build_A_family(space, cap);
  std::size_t count = 0;
  for_each_rgs(n, [&](const std::vector<std::size_t>& rgs, std::size_t k) {
    std::vector<Subset> blocks(k, space.empty_set());
    for (std::size_t i = 0; i < n; ++i) blocks[rgs[i]] = blocks[rgs[i]].with(i);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      Subset u = space.empty_set();
      for (std::size_t b = 0; b < k; ++b) {
        if ((mask >> b) & 1U) u |= blocks[b];
      }
      if (!a.contains(u)) return;
    }
    ++count;
  });
  return count;
}

PBZStarCheck pbz_star_check(const DMLattice& dm, const NegOperator& neg,
                            const std::optional<Relation>& generating_equivalence) {
  const auto& l = dm.lattice();
  const auto& inv = dm.involution();
  PBZStarCheck out;
  for (std::size_t a = 0; a < l.size(); ++a) {
    if (!l.leq(neg(l.meet(a, inv(a))), l.join(neg(a), neg(inv(a))))) {
      out.holds = false;
      out.witness = a;
      break;
    }
  }
  const auto& space = dm.space();
  if (generating_equivalence && space.flags().quasiorder) {
    const ApproxSpace es(*generating_equivalence);
    bool cond = true;
    const auto rs = build_rs(space);
    for (const auto& p : rs.pairs()) {
      const auto bc = p.upper.complement();
      if (!es.lower(p.lower | bc).subset_of(es.lower(p.lower) | es.lower(bc))) {
        cond = false;
        out.set_witness = p;
        break;
      }
    }
    out.set_condition = cond;
    out.agree = cond == out.holds;
  }
  return out;
}

RoughPair pbz_star_counterexample(const ApproxSpace& space, const Relation& e) {
  if (!space.flags().quasiorder) throw PreconditionError("counterexample construction needs a quasiorder");
  require_equivalence(e);
  if (!space.relation().subset_of(e)) throw PreconditionError("equivalence does not contain the relation");
  const auto re = equivalence_closure(space.relation());
  if (re == e) throw PreconditionError("equivalence equals the equivalence closure");
  const auto e_classes = equivalence_classes(e);
  for (const auto& h : e_classes.blocks()) {
    const auto x = h.members().front();
    const auto& xr = re.neighborhood(x);
    if (xr == h) continue;
    Subset k = space.empty_set();
    (space.singletons() - h).for_each([&](std::size_t z) { k |= re.neighborhood(z); });
    return {xr | k, xr | h.complement()};
  }
  throw std::logic_error("no class of the equivalence merges several closure classes");
}

bool is_antiortholattice(const FiniteLattice& l, const Involution& inv, const NegOperator& neg) {
  return check_bz_axioms(l, inv, neg).antiortholattice;
}

std::optional<std::size_t> pseudocomplement(const FiniteLattice& l, std::size_t x) {
  std::vector<std::size_t> annihilators;
  for (std::size_t y = 0; y < l.size(); ++y) {
    if (l.meet(x, y) == l.bottom()) annihilators.push_back(y);
  }
  for (auto y : annihilators) {
    if (std::all_of(annihilators.begin(), annihilators.end(), [&](std::size_t z) { return l.leq(z, y); })) return y;
  }
  return std::nullopt;
}

StoneReport stone_analysis(const DMLattice& dm) {
  const auto& l = dm.lattice();
  const auto m = l.size();
  StoneReport r;
  r.distributive = l.is_distributive();

  const auto& space = dm.space();
  const auto re = equivalence_closure(space.relation());
  r.inverse_then_r_is_re = relation_compose(space.inverse(), space.relation()) == re;
  r.r_then_inverse_is_re = relation_compose(space.relation(), space.inverse()) == re;

  NegOperator star;
  for (std::size_t x = 0; x < m; ++x) {
    auto s = pseudocomplement(l, x);
    if (!s) return r;
    star.map.push_back(*s);
  }
  r.pseudocomplemented = true;

  r.stone_identity = true;
  r.meet_de_morgan = true;
  for (std::size_t a = 0; a < m; ++a) {
    if (l.join(star(a), star(star(a))) != l.top()) r.stone_identity = false;
    for (std::size_t b = 0; b < m; ++b) {
      if (star(l.meet(a, b)) != l.join(star(a), star(b))) r.meet_de_morgan = false;
    }
  }
  r.is_stone = r.distributive && r.stone_identity;

  const auto skeleton = sorted_unique(star.map);
  bool boolean = l.is_sublattice(skeleton);
  for (auto s : skeleton) {
    if (l.join(s, star(s)) != l.top()) boolean = false;
  }
  if (boolean) {
    std::vector<std::vector<bool>> order(skeleton.size(), std::vector<bool>(skeleton.size()));
    for (std::size_t i = 0; i < skeleton.size(); ++i) {
      for (std::size_t j = 0; j < skeleton.size(); ++j) order[i][j] = l.leq(skeleton[i], skeleton[j]);
    }
    boolean = FiniteLattice::from_order(order).is_distributive();
  }
  r.skeleton_boolean = boolean;

  if (space.flags().equivalence) {
    bool formula = true;
    for (std::size_t i = 0; i < m; ++i) {
      const auto bc = dm.element(i).upper.complement();
      auto j = dm.find({bc, bc});
      if (!j || *j != star(i)) formula = false;
    }
    r.equivalence_formula = formula;
  }
  r.star = std::move(star);
  return r;
}

}  // namespace roughdm
