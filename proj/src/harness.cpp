#include "roughdm/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

#include "roughdm/brouwer_zadeh.hpp"
#include "roughdm/completion.hpp"
#include "roughdm/kleene.hpp"

namespace roughdm {

Relation fixture_1() {
  auto u = Universe::letters(3);
  return Relation(u, {u->parse("ab"), u->parse("bc"), u->parse("c")});
}

Relation fixture_2() {
  auto u = Universe::numbered(5);
  return Relation(u, {u->parse("12"), u->parse("123"), u->parse("234"), u->parse("345"), u->parse("45")});
}

Relation fixture_3() {
  auto u = Universe::letters(3);
  return Relation(u, {u->parse("ab"), u->parse("b"), u->parse("c")});
}

Relation fixture_4() {
  auto u = Universe::letters(3);
  return Relation(u, {u->parse("ab"), u->parse("ab"), u->parse("c")});
}

Relation fixture(const std::string& name) {
  if (name == "fix1") return fixture_1();
  if (name == "fix2") return fixture_2();
  if (name == "fix3") return fixture_3();
  if (name == "fix4") return fixture_4();
  throw PreconditionError("unknown fixture: " + name);
}

RelationFilter parse_filter(const std::string& name) {
  if (name == "any" || name.empty()) return RelationFilter::any;
  if (name == "tolerance") return RelationFilter::tolerance;
  if (name == "quasiorder") return RelationFilter::quasiorder;
  if (name == "equivalence") return RelationFilter::equivalence;
  throw ParseError("unknown relation filter: " + name);
}

std::string filter_name(RelationFilter f) {
  switch (f) {
    case RelationFilter::any: return "any";
    case RelationFilter::tolerance: return "tolerance";
    case RelationFilter::quasiorder: return "quasiorder";
    case RelationFilter::equivalence: return "equivalence";
  }
  return "any";
}

bool passes_filter(const Relation& r, RelationFilter f) {
  const auto flags = classify(r);
  switch (f) {
    case RelationFilter::any: return flags.reflexive;
    case RelationFilter::tolerance: return flags.tolerance;
    case RelationFilter::quasiorder: return flags.quasiorder;
    case RelationFilter::equivalence: return flags.equivalence;
  }
  return false;
}

Relation reflexive_relation_from_bits(std::size_t n, std::uint64_t bits) {
  auto u = Universe::letters(n);
  std::vector<Subset> rows;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Subset row = Subset::singleton(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if ((bits >> k) & 1U) row = row.with(j);
      ++k;
    }
    rows.push_back(row);
  }
  return Relation(u, std::move(rows));
}

std::vector<Relation> enumerate_reflexive_relations(std::size_t n, RelationFilter filter) {
  if (n == 0) throw PreconditionError("universe must be non-empty");
  if (n > kExhaustiveLimit) throw CapExceeded("exhaustive enumeration", kExhaustiveLimit, n);
  const std::uint64_t total = std::uint64_t{1} << (n * n - n);
  std::vector<Relation> out;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    auto r = reflexive_relation_from_bits(n, bits);
    if (passes_filter(r, filter)) out.push_back(std::move(r));
  }
  return out;
}

std::vector<Relation> sample_reflexive_relations(std::size_t n, std::size_t count, std::uint64_t seed,
                                                 RelationFilter filter) {
  if (n == 0 || n > 8) throw PreconditionError("sampled universes hold 1 to 8 elements");
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = Subset::mask_for(n * n - n);
  std::vector<Relation> out;
  out.reserve(count);
  while (out.size() < count) {
    auto r = reflexive_relation_from_bits(n, rng() & mask);
    if (passes_filter(r, filter)) out.push_back(std::move(r));
  }
  return out;
}

std::string describe_relation(const Relation& r) {
  std::string out;
  const auto& u = r.universe();
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i > 0) out += ' ';
    out += u.label(i) + ":" + u.format(r.neighborhood(i));
  }
  return out;
}

std::size_t TheoremSuiteReport::violations() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.applicable && !c.passed; }));
}

const std::vector<SuiteEntry>& suite_catalogue() {
  static const std::vector<SuiteEntry> entries = {
      {"approx.duality", "lower(X)^c = upper(X^c) in both directions"},
      {"approx.galois", "X^▲ ⊆ Y iff X ⊆ Y^▽, and X^△ ⊆ Y iff X ⊆ Y^▼"},
      {"approx.reflexive_bounds", "X^▼ ⊆ X ⊆ X^▲ and X^▽ ⊆ X ⊆ X^△"},
      {"approx.closure_interior", "X ↦ X^{△▼} is a closure operator and X ↦ X^{▽▲} an interior operator"},
      {"approx.definable_families", "images of ▼ and ▲ are the fixpoints of △▼ and ▽▲"},
      {"approx.right_total", "for right-total R, X^{△▼} = U implies X^△ = U"},
      {"rs.bounds", "RS holds (∅,∅) and (U,U), has A ⊆ B throughout and is closed under ∼"},
      {"rs.pseudo_kleene_poset", "p ≤ ∼p and ∼q ≤ q imply p ≤ q on RS"},
      {"rs.exact_equalities", "(A,A) ∈ RS, A^▼=A^▲, A^▽=A^△, A^▲=A^△=A and A^▼=A^▽=A agree for every A"},
      {"rs.fixpoint_transfer", "A^▲=A iff A^▽=A, and A^△=A iff A^▼=A"},
      {"rs.exact_family", "exact rough sets are the pairs (A,A) with A a union of R^e-classes"},
      {"rs.exact_inverse", "R, R⁻¹ and R^e have the same exact rough sets"},
      {"rs.quasiorder_membership", "for a quasiorder, (A,B) ∈ ℘▼×℘▲ is in RS iff A ⊆ B and S ⊆ A ∪ B^c"},
      {"rs.lattice_iff_complete", "RS is a lattice iff the completion adds nothing"},
      {"a_family.membership", "Z^{▼△} = Z^{▲▽} picks out ℘▽ ∩ ℘△"},
      {"a_family.complement_closed", "𝒜 is closed under complement"},
      {"a_family.pseudo_kleene_poset", "(𝒜, ⊆, c) is a bounded pseudo-Kleene poset"},
      {"a_family.sharp_pairs", "(Z^▼, Z^▲) is a sharp element of DM(RS) for every Z ∈ 𝒜"},
      {"a_family.phi_psi", "φ and ψ are inverse order-isomorphisms between 𝒞 and 𝒜 commuting with negation"},
      {"dm.contains_rs", "every rough set lies in DM(RS)"},
      {"dm.oracle", "DM(RS) is isomorphic to the normal-cut completion of RS, fixing RS pointwise"},
      {"dm.tables_match_order", "join and meet formulas give least upper and greatest lower bounds"},
      {"dm.involution", "∼ is an antitone involution of DM(RS)"},
      {"dm.pseudo_kleene", "p ∧ ∼p ≤ q ∨ ∼q in DM(RS)"},
      {"dm.paraorthomodular", "p ≤ q and ∼p ∧ q = 0 imply p = q in DM(RS)"},
      {"dm.distributive_classes", "for quasiorders and irredundant-covering tolerances DM(RS) = RS is distributive"},
      {"kleene.sharp_characterization", "B^▽ = A^△, sharp and complemented agree element-wise"},
      {"kleene.unique_complement", "a complement, when one exists, is ∼x"},
      {"kleene.sharp_family", "𝒞 ⊆ RS, contains the bounds and is closed under ∼"},
      {"kleene.center_routes", "neutral+complemented, meet/join splitting and the ℘▼ criterion give one center"},
      {"kleene.exact_central", "every exact rough set is central"},
      {"kleene.central_lower", "a central (A,B) has A = B^▼"},
      {"kleene.center_both_directions", "exact rough sets are the common central elements of DM(RS) for R and R⁻¹"},
      {"kleene.tolerance_center", "for tolerances the center is the set of exact rough sets"},
      {"kleene.four_way", "for quasiorders and irredundant-covering tolerances sharp, complemented, central and exact coincide"},
      {"kleene.boolean_sublattices", "a ∼-closed T ⊆ 𝒞 that is a sublattice is Boolean"},
      {"kleene.complete_sublattice_criterion", "a ∼-closed T ⊆ 𝒞 is a complete sublattice iff φ[T] is one of ℘(U)"},
      {"bz.equivalence_neg", "¬ from any extending equivalence gives a PBZ-lattice with values in the exact sets"},
      {"bz.modal_laws", "◻ and ◇ satisfy inflation, monotonicity, idempotence, absorption and ∼-duality"},
      {"bz.clopen", "¬[L], ◇-closed and ◻-open agree; 𝒩 is a complete subortholattice; ◇ is the 𝒩-closure; Brouwer-sharp equals 𝒩"},
      {"bz.subortholattice_neg", "the order and set formulas for ¬ from 𝒩 agree and give PBZ-lattices"},
      {"bz.structure_count", "PBZ structures biject with Boolean subalgebras of ℘(U) inside 𝒜"},
      {"bz.equivalence_structures", "for quasiorders and irredundant-covering tolerances each PBZ ¬ comes from exactly one extending equivalence"},
      {"bz.star_quasiorder", "for quasiorders BZ8 holds exactly for R^e, matching the set condition, with explicit failures otherwise"},
      {"bz.antiortholattice", "an antiortholattice exists iff R^e = U×U, and then ¬ is trivial"},
      {"bz.equivalence_stone", "for equivalences (A,B)* = (B^c,B^c), RS is Stone and * is a PBZ* negation"},
      {"bz.kleene_stone", "on a Kleene-Stone completion the pseudocomplement is a PBZ* negation"},
  };
  return entries;
}

const std::vector<SuiteEntry>& finding_catalogue() {
  static const std::vector<SuiteEntry> entries = {
      {"kleene.chajda", "x ∧ (∼x ∨ y) = (x ∧ ∼x) ∨ (x ∧ y) fails"},
      {"kleene.c_not_sublattice", "the sharp elements do not form a sublattice"},
      {"a_family.statement_form", "(Z^▲, Z^▼) is not a sharp element for some Z ∈ 𝒜"},
      {"bz.stone_composition", "Stone-ness of RS against both composites R⁻¹∘R and R∘R⁻¹"},
  };
  return entries;
}

namespace {

using Witness = std::optional<std::string>;

class SuiteRun {
 public:
  SuiteRun(const Relation& r)
      : space(r),
        u(r.universe()),
        n(r.size()),
        rs(build_rs(space, kDefaultRsCap)),
        dm(build_dm(space, kDefaultDmCap)),
        l(dm.lattice()),
        inv(dm.involution()),
        re(equivalence_closure(r)) {
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) all_sets.emplace_back(n, b);
    irredundant = is_irredundant_covering_tolerance(r);
    distributive_class = space.flags().quasiorder || irredundant;
  }

  std::string set(const Subset& s) const { return u.format(s); }
  std::string pair(const RoughPair& p) const { return format_pair(u, p); }
  std::string elem(std::size_t i) const { return pair(dm.element(i)); }

  void check(const std::string& id, bool applicable, const std::function<Witness()>& body) {
    CheckResult c;
    c.id = id;
    c.applicable = applicable;
    if (applicable) {
      try {
        if (auto w = body()) {
          c.passed = false;
          c.witness = *w;
        }
      } catch (const std::exception& e) {
        c.passed = false;
        c.witness = std::string("exception: ") + e.what();
      }
    }
    report.checks.push_back(std::move(c));
  }

  void finding(const std::string& id, std::string detail) { report.findings.push_back({id, std::move(detail)}); }

  ApproxSpace space;
  const Universe& u;
  std::size_t n;
  RSFamily rs;
  DMLattice dm;
  const FiniteLattice& l;
  const Involution& inv;
  Relation re;
  std::vector<Subset> all_sets;
  bool irredundant = false;
  bool distributive_class = false;
  TheoremSuiteReport report;
};

void approximation_checks(SuiteRun& s) {
  const auto& sp = s.space;
  s.check("approx.duality", true, [&]() -> Witness {
    for (const auto& x : s.all_sets) {
      for (auto d : {Direction::forward, Direction::inverse}) {
        if (sp.lower(x, d).complement() != sp.upper(x.complement(), d)) return "X=" + s.set(x);
      }
    }
    return std::nullopt;
  });
  s.check("approx.galois", true, [&]() -> Witness {
    for (const auto& x : s.all_sets) {
      const auto up = sp.upper(x);
      const auto up_inv = sp.upper(x, Direction::inverse);
      for (const auto& y : s.all_sets) {
        if (up.subset_of(y) != x.subset_of(sp.lower(y, Direction::inverse)) ||
            up_inv.subset_of(y) != x.subset_of(sp.lower(y))) {
          return "X=" + s.set(x) + " Y=" + s.set(y);
        }
      }
    }
    return std::nullopt;
  });
  s.check("approx.reflexive_bounds", true, [&]() -> Witness {
    for (const auto& x : s.all_sets) {
      for (auto d : {Direction::forward, Direction::inverse}) {
        if (!sp.lower(x, d).subset_of(x) || !x.subset_of(sp.upper(x, d))) return "X=" + s.set(x);
      }
    }
    return std::nullopt;
  });
  s.check("approx.closure_interior", true, [&]() -> Witness {
    auto closure = [&](const Subset& x) { return sp.lower(sp.upper(x, Direction::inverse)); };
    auto interior = [&](const Subset& x) { return sp.upper(sp.lower(x, Direction::inverse)); };
    for (const auto& x : s.all_sets) {
      const auto c = closure(x);
      const auto i = interior(x);
      if (!x.subset_of(c) || closure(c) != c) return "closure at X=" + s.set(x);
      if (!i.subset_of(x) || interior(i) != i) return "interior at X=" + s.set(x);
      for (const auto& y : s.all_sets) {
        if (x.subset_of(y) && (!c.subset_of(closure(y)) || !i.subset_of(interior(y)))) {
          return "monotonicity at X=" + s.set(x) + " Y=" + s.set(y);
        }
      }
    }
    return std::nullopt;
  });
  s.check("approx.definable_families", true, [&]() -> Witness {
    std::vector<Subset> lowers;
    std::vector<Subset> uppers;
    for (const auto& x : s.all_sets) {
      if (sp.is_definable(x, DefinableFamily::lower_definable)) lowers.push_back(x);
      if (sp.is_definable(x, DefinableFamily::upper_definable)) uppers.push_back(x);
    }
    if (lowers != sp.lower_definable_sets()) return std::string("lower-definable family");
    if (uppers != sp.upper_definable_sets()) return std::string("upper-definable family");
    return std::nullopt;
  });
  s.check("approx.right_total", sp.flags().right_total, [&]() -> Witness {
    for (const auto& x : s.all_sets) {
      const auto up = sp.upper(x, Direction::inverse);
      if (sp.lower(up).is_full() && !up.is_full()) return "X=" + s.set(x);
    }
    return std::nullopt;
  });
}

std::vector<RoughPair> exact_pairs(const RSFamily& rs) {
  std::vector<RoughPair> out;
  for (const auto& p : rs.pairs()) {
    if (p.is_exact()) out.push_back(p);
  }
  return out;
}

void rough_set_checks(SuiteRun& s) {
  const auto& sp = s.space;
  const auto& rs = s.rs;
  s.check("rs.bounds", true, [&]() -> Witness {
    if (!rs.contains({sp.empty_set(), sp.empty_set()}) || !rs.contains({sp.full_set(), sp.full_set()})) {
      return std::string("missing a bound");
    }
    for (const auto& p : rs.pairs()) {
      if (!p.lower.subset_of(p.upper) || !rs.contains(kleene_neg(p))) return s.pair(p);
    }
    return std::nullopt;
  });
  s.check("rs.pseudo_kleene_poset", true, [&]() -> Witness {
    for (const auto& p : rs.pairs()) {
      if (!p.leq(kleene_neg(p))) continue;
      for (const auto& q : rs.pairs()) {
        if (kleene_neg(q).leq(q) && !p.leq(q)) return "p=" + s.pair(p) + " q=" + s.pair(q);
      }
    }
    return std::nullopt;
  });
  s.check("rs.exact_equalities", true, [&]() -> Witness {
    for (const auto& a : s.all_sets) {
      const bool c1 = rs.contains({a, a});
      const bool c2 = sp.lower(a) == sp.upper(a);
      const bool c3 = sp.lower(a, Direction::inverse) == sp.upper(a, Direction::inverse);
      const bool c4 = sp.upper(a) == a && sp.upper(a, Direction::inverse) == a;
      const bool c5 = sp.lower(a) == a && sp.lower(a, Direction::inverse) == a;
      if (c1 != c2 || c1 != c3 || c1 != c4 || c1 != c5) return "A=" + s.set(a);
    }
    return std::nullopt;
  });
  s.check("rs.fixpoint_transfer", true, [&]() -> Witness {
    for (const auto& a : s.all_sets) {
      if ((sp.upper(a) == a) != (sp.lower(a, Direction::inverse) == a) ||
          (sp.upper(a, Direction::inverse) == a) != (sp.lower(a) == a)) {
        return "A=" + s.set(a);
      }
    }
    return std::nullopt;
  });
  s.check("rs.exact_family", true, [&]() -> Witness {
    if (exact_family(sp) != exact_pairs(rs)) return std::string("exact pairs differ from saturated sets");
    return std::nullopt;
  });
  s.check("rs.exact_inverse", true, [&]() -> Witness {
    const auto e_inv = exact_pairs(build_rs(ApproxSpace(sp.inverse())));
    const auto e_re = exact_pairs(build_rs(ApproxSpace(s.re)));
    const auto mine = exact_pairs(rs);
    if (mine != e_inv) return std::string("R and R⁻¹ differ");
    if (mine != e_re) return std::string("R and R^e differ");
    return std::nullopt;
  });
  s.check("rs.quasiorder_membership", sp.flags().quasiorder, [&]() -> Witness {
    for (const auto& a : sp.lower_definable_sets()) {
      for (const auto& b : sp.upper_definable_sets()) {
        const bool criterion = a.subset_of(b) && sp.singletons().subset_of(a | b.complement());
        if (criterion != rs.contains({a, b})) return s.pair({a, b});
      }
    }
    return std::nullopt;
  });
  s.check("rs.lattice_iff_complete", true, [&]() -> Witness {
    const auto lc = rs_is_lattice(rs);
    if (lc.is_lattice != (s.dm.size() == rs.size())) {
      return "lattice=" + std::string(lc.is_lattice ? "yes" : "no") + " |DM|=" + std::to_string(s.dm.size()) +
             " |RS|=" + std::to_string(rs.size());
    }
    return std::nullopt;
  });
}

void a_family_checks(SuiteRun& s) {
  const auto& sp = s.space;
  const auto a = build_A_family(sp);
  std::vector<std::size_t> sharp;
  for (std::size_t i = 0; i < s.dm.size(); ++i) {
    if (is_sharp(s.l, s.inv, i)) sharp.push_back(i);
  }
  s.check("a_family.membership", true, [&]() -> Witness {
    std::vector<Subset> lowers_inv;
    std::vector<Subset> uppers_inv;
    for (const auto& x : s.all_sets) {
      lowers_inv.push_back(sp.lower(x, Direction::inverse));
      uppers_inv.push_back(sp.upper(x, Direction::inverse));
    }
    std::vector<Subset> expected;
    for (const auto& z : s.all_sets) {
      const bool in_lower = std::find(lowers_inv.begin(), lowers_inv.end(), z) != lowers_inv.end();
      const bool in_upper = std::find(uppers_inv.begin(), uppers_inv.end(), z) != uppers_inv.end();
      if (in_lower && in_upper) expected.push_back(z);
    }
    if (expected != a.sets) return std::string("families differ");
    return std::nullopt;
  });
  s.check("a_family.complement_closed", true, [&]() -> Witness {
    for (const auto& z : a.sets) {
      if (!a.contains(z.complement())) return "Z=" + s.set(z);
    }
    return std::nullopt;
  });
  s.check("a_family.pseudo_kleene_poset", true, [&]() -> Witness {
    if (!a.contains(sp.empty_set()) || !a.contains(sp.full_set())) return std::string("missing a bound");
    for (const auto& p : a.sets) {
      if (!p.subset_of(p.complement())) continue;
      for (const auto& q : a.sets) {
        if (q.complement().subset_of(q) && !p.subset_of(q)) return "p=" + s.set(p) + " q=" + s.set(q);
      }
    }
    return std::nullopt;
  });
  s.check("a_family.sharp_pairs", true, [&]() -> Witness {
    for (const auto& z : a.sets) {
      auto i = s.dm.find({sp.lower(z), sp.upper(z)});
      if (!i || !is_sharp(s.l, s.inv, *i)) return "Z=" + s.set(z);
    }
    return std::nullopt;
  });
  for (const auto& z : a.sets) {
    auto i = s.dm.find({sp.upper(z), sp.lower(z)});
    if (!i || !is_sharp(s.l, s.inv, *i)) {
      s.finding("a_family.statement_form", "Z=" + s.set(z) + " gives (Z^▲,Z^▼)=" +
                                               s.pair({sp.upper(z), sp.lower(z)}) + ", not a sharp element");
      break;
    }
  }
  s.check("a_family.phi_psi", true, [&]() -> Witness {
    if (sharp.size() != a.sets.size()) return std::string("|𝒞| ≠ |𝒜|");
    for (auto i : sharp) {
      const auto& x = s.dm.element(i);
      const auto z = phi(sp, x);
      if (!a.contains(z) || !(psi(sp, z) == x)) return "x=" + s.pair(x);
      if (phi(sp, kleene_neg(x)) != z.complement()) return "negation at x=" + s.pair(x);
      for (auto j : sharp) {
        if (s.l.leq(i, j) != z.subset_of(phi(sp, s.dm.element(j)))) return "order at " + s.pair(x);
      }
    }
    for (const auto& z : a.sets) {
      if (phi(sp, psi(sp, z)) != z) return "Z=" + s.set(z);
    }
    return std::nullopt;
  });
}

void completion_checks(SuiteRun& s) {
  const auto& l = s.l;
  const auto m = l.size();
  s.check("dm.contains_rs", true, [&]() -> Witness {
    for (const auto& p : s.rs.pairs()) {
      auto i = s.dm.find(p);
      if (!i || !s.dm.in_rs(*i)) return s.pair(p);
    }
    if (s.dm.rs_count() != s.rs.size()) return std::string("rough-set count");
    return std::nullopt;
  });
  s.check("dm.oracle", true, [&]() -> Witness {
    const auto cmp = compare_with_oracle(s.dm, s.rs);
    if (!cmp.isomorphic) return "no isomorphism; |DM|=" + std::to_string(s.dm.size());
    return std::nullopt;
  });
  s.check("dm.tables_match_order", true, [&]() -> Witness {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const auto jn = l.join(i, j);
        const auto mt = l.meet(i, j);
        if (!l.leq(i, jn) || !l.leq(j, jn) || !l.leq(mt, i) || !l.leq(mt, j)) return s.elem(i) + " " + s.elem(j);
        for (std::size_t k = 0; k < m; ++k) {
          if (l.leq(i, k) && l.leq(j, k) && !l.leq(jn, k)) return "join " + s.elem(i) + " " + s.elem(j);
          if (l.leq(k, i) && l.leq(k, j) && !l.leq(k, mt)) return "meet " + s.elem(i) + " " + s.elem(j);
        }
      }
    }
    return std::nullopt;
  });
  s.check("dm.involution", true, [&]() -> Witness {
    if (!is_antitone_involution(l, s.inv)) return std::string("∼ is not an antitone involution");
    return std::nullopt;
  });
  s.check("dm.pseudo_kleene", true, [&]() -> Witness {
    if (auto w = pseudo_kleene_witness(l, s.inv)) return "p=" + s.elem(w->first) + " q=" + s.elem(w->second);
    return std::nullopt;
  });
  s.check("dm.paraorthomodular", true, [&]() -> Witness {
    if (auto w = paraorthomodular_witness(l, s.inv)) return "p=" + s.elem(w->first) + " q=" + s.elem(w->second);
    return std::nullopt;
  });
  s.check("dm.distributive_classes", s.distributive_class, [&]() -> Witness {
    if (s.dm.size() != s.rs.size()) return std::string("completion adds elements");
    if (!l.is_distributive()) return std::string("not distributive");
    return std::nullopt;
  });
}

// Subsets of 𝒞 closed under ∼, as unions of ∼-orbits; empty when there are
// more than `max_orbits` orbits.
std::vector<std::vector<std::size_t>> negation_closed_families(const std::vector<std::size_t>& sharp,
                                                                const Involution& inv, std::size_t max_orbits) {
  std::vector<std::vector<std::size_t>> orbits;
  for (auto i : sharp) {
    if (inv(i) < i) continue;
    if (inv(i) == i) {
      orbits.push_back({i});
    } else {
      orbits.push_back({i, inv(i)});
    }
  }
  std::vector<std::vector<std::size_t>> out;
  if (orbits.size() > max_orbits) return out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << orbits.size()); ++mask) {
    std::vector<std::size_t> t;
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      if ((mask >> k) & 1U) t.insert(t.end(), orbits[k].begin(), orbits[k].end());
    }
    std::sort(t.begin(), t.end());
    out.push_back(std::move(t));
  }
  return out;
}

bool induced_boolean(const FiniteLattice& l, const std::vector<std::size_t>& t) {
  std::vector<std::vector<bool>> order(t.size(), std::vector<bool>(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) order[i][j] = l.leq(t[i], t[j]);
  }
  const auto sub = FiniteLattice::from_order(order);
  if (!sub.is_distributive()) return false;
  for (std::size_t i = 0; i < sub.size(); ++i) {
    if (complements_of(sub, i).empty()) return false;
  }
  return true;
}

constexpr std::size_t kMaxOrbits = 12;

void kleene_checks(SuiteRun& s) {
  const auto& l = s.l;
  const auto& inv = s.inv;
  const auto& sp = s.space;
  const auto m = l.size();
  const auto elements = analyze_elements(s.dm);
  const auto cen = analyze_center(s.dm);
  std::vector<std::size_t> sharp;
  for (std::size_t i = 0; i < m; ++i) {
    if (elements[i].sharp) sharp.push_back(i);
  }

  s.check("kleene.sharp_characterization", true, [&]() -> Witness {
    for (std::size_t i = 0; i < m; ++i) {
      const bool crit = sharp_criterion(sp, s.dm.element(i));
      if (crit != elements[i].sharp || crit != elements[i].complemented) return s.elem(i);
    }
    return std::nullopt;
  });
  s.check("kleene.unique_complement", true, [&]() -> Witness {
    for (std::size_t i = 0; i < m; ++i) {
      for (auto c : elements[i].complements) {
        if (c != inv(i)) return s.elem(i) + " has complement " + s.elem(c);
      }
    }
    return std::nullopt;
  });
  s.check("kleene.sharp_family", true, [&]() -> Witness {
    if (!elements[l.bottom()].sharp || !elements[l.top()].sharp) return std::string("a bound is not sharp");
    for (auto i : sharp) {
      if (!s.dm.in_rs(i)) return s.elem(i) + " is not a rough set";
      if (!elements[inv(i)].sharp) return s.elem(i) + " has non-sharp negation";
    }
    return std::nullopt;
  });
  s.check("kleene.center_routes", true, [&]() -> Witness {
    for (std::size_t i = 0; i < m; ++i) {
      if (cen.by_definition[i] != cen.by_decomposition[i] || cen.by_definition[i] != cen.by_definable_sets[i]) {
        return s.elem(i);
      }
      if (elements[i].sharp && splits_by_joins(l, inv, i) != cen.by_decomposition[i]) return "join split " + s.elem(i);
    }
    return std::nullopt;
  });
  s.check("kleene.exact_central", true, [&]() -> Witness {
    for (std::size_t i = 0; i < m; ++i) {
      if (elements[i].exact && !elements[i].central) return s.elem(i);
    }
    return std::nullopt;
  });
  s.check("kleene.central_lower", true, [&]() -> Witness {
    for (auto i : cen.center) {
      const auto& p = s.dm.element(i);
      if (p.lower != sp.lower(p.upper)) return s.elem(i);
    }
    return std::nullopt;
  });
  s.check("kleene.center_both_directions", true, [&]() -> Witness {
    const auto dm_inv = build_dm(ApproxSpace(sp.inverse()));
    const auto cen_inv = analyze_center(dm_inv);
    for (std::size_t i = 0; i < m; ++i) {
      const auto& p = s.dm.element(i);
      auto j = dm_inv.find(p);
      const bool both = elements[i].central && j && cen_inv.by_definition[*j];
      const bool exact = p.is_exact() && s.dm.in_rs(i);
      if (both != exact) return s.elem(i);
    }
    return std::nullopt;
  });
  s.check("kleene.tolerance_center", sp.flags().tolerance, [&]() -> Witness {
    for (std::size_t i = 0; i < m; ++i) {
      if (elements[i].central != elements[i].exact) return s.elem(i);
    }
    return std::nullopt;
  });
  s.check("kleene.four_way", s.distributive_class, [&]() -> Witness {
    for (std::size_t i = 0; i < m; ++i) {
      const auto& e = elements[i];
      if (e.sharp != e.complemented || e.sharp != e.central || e.sharp != e.exact) return s.elem(i);
    }
    return std::nullopt;
  });

  const auto families = negation_closed_families(sharp, inv, kMaxOrbits);
  const bool enumerable = !families.empty();
  s.check("kleene.boolean_sublattices", enumerable, [&]() -> Witness {
    for (const auto& t : families) {
      if (l.is_sublattice(t) && !induced_boolean(l, t)) {
        std::string w;
        for (auto i : t) w += s.elem(i) + " ";
        return "T=" + w;
      }
    }
    return std::nullopt;
  });
  s.check("kleene.complete_sublattice_criterion", enumerable, [&]() -> Witness {
    for (const auto& t : families) {
      const auto c = check_complete_sublattice(s.dm, t);
      if (c.lattice_side != c.powerset_side) {
        std::string w;
        for (auto i : t) w += s.elem(i) + " ";
        return "T=" + w;
      }
    }
    return std::nullopt;
  });

  if (const auto ch = check_chajda_identity(l, inv); !ch.holds) {
    const auto& w = *ch.witness;
    s.finding("kleene.chajda", "x=" + s.elem(w.x) + " y=" + s.elem(w.y) + ": x∧(∼x∨y)=" + s.elem(w.lhs) +
                                   ", (x∧∼x)∨(x∧y)=" + s.elem(w.rhs));
  }
  const auto cf = c_family_analysis(s.dm);
  if (!cf.is_sublattice) {
    std::string detail = std::to_string(cf.members.size()) + " sharp elements";
    if (cf.pentagon) {
      const auto& p = *cf.pentagon;
      detail += "; pentagon " + s.elem(p.bottom) + " < " + s.elem(p.a) + " < " + s.elem(p.b) + " < " + s.elem(p.top) +
                " beside " + s.elem(p.c);
    }
    if (cf.multi_complement) {
      detail += "; " + s.elem(cf.multi_complement->first) + " has " +
                std::to_string(cf.multi_complement->second.size()) + " complements in 𝒞";
    }
    s.finding("kleene.c_not_sublattice", detail);
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void bz_checks(SuiteRun& s) {
  const auto& l = s.l;
  const auto& inv = s.inv;
  const auto& sp = s.space;
  const auto m = l.size();
  const auto exts = extending_equivalences(sp);
  const auto structures = enumerate_pbz_structures(s.dm);
  std::vector<NegOperator> ext_negs;
  for (const auto& e : exts) ext_negs.push_back(neg_from_equivalence(s.dm, e));
  std::vector<NegOperator> all_negs = ext_negs;
  for (const auto& st : structures) all_negs.push_back(st.neg);
  all_negs.push_back(trivial_neg(l));

  s.check("bz.equivalence_neg", true, [&]() -> Witness {
    for (std::size_t k = 0; k < exts.size(); ++k) {
      const auto rep = check_bz_axioms(l, inv, ext_negs[k]);
      if (!rep.pbz || !rep.derived_consistent) return "E=" + describe_relation(exts[k]);
      for (auto v : ext_negs[k].map) {
        if (!s.dm.in_rs(v) || !s.dm.element(v).is_exact()) return "E=" + describe_relation(exts[k]) + " value " + s.elem(v);
      }
    }
    return std::nullopt;
  });
  s.check("bz.modal_laws", true, [&]() -> Witness {
    for (const auto& neg : all_negs) {
      if (auto c = check_modal_laws(l, inv, neg); !c.holds) return c.law + " at " + s.elem(c.witness.front());
    }
    return std::nullopt;
  });
  s.check("bz.clopen", true, [&]() -> Witness {
    for (const auto& neg : all_negs) {
      const auto rep = check_bz_axioms(l, inv, neg);
      const auto cl = clopen_family(l, inv, neg);
      if (!cl.descriptions_agree) return std::string("clopen descriptions differ");
      if (auto d = subortholattice_defect(l, inv, cl.members); !d.empty()) return "𝒩 " + d;
      for (auto x : cl.members) {
        if (l.join(x, inv(x)) != l.top() || l.meet(x, inv(x)) != l.bottom()) return "ortho law at " + s.elem(x);
      }
      for (std::size_t x = 0; x < m; ++x) {
        std::size_t acc = l.top();
        for (auto c : cl.members) {
          if (l.leq(x, c)) acc = l.meet(acc, c);
        }
        if (acc != diamond(inv, neg, x)) return "closure at " + s.elem(x);
      }
      if (rep.brouwer_sharp != cl.members) return std::string("Brouwer-sharp differs from 𝒩");
      for (auto x : cl.members) {
        if (!std::binary_search(rep.sharp.begin(), rep.sharp.end(), x)) return "non-sharp clopen " + s.elem(x);
      }
    }
    return std::nullopt;
  });
  s.check("bz.subortholattice_neg", true, [&]() -> Witness {
    for (const auto& st : structures) {
      if (neg_from_subortholattice_sets(s.dm, st.clopen) != st.neg) return std::string("set formula differs");
      if (!check_bz_axioms(l, inv, st.neg).pbz) return std::string("not PBZ");
    }
    return std::nullopt;
  });
  s.check("bz.structure_count", true, [&]() -> Witness {
    const auto expected = count_boolean_subalgebras_in_A(sp);
    if (structures.size() != expected) {
      return std::to_string(structures.size()) + " structures, " + std::to_string(expected) + " partitions";
    }
    for (std::size_t k = 0; k < exts.size(); ++k) {
      const auto cl = clopen_family(l, inv, ext_negs[k]).members;
      if (std::none_of(structures.begin(), structures.end(), [&](const PBZStructure& st) { return st.clopen == cl; })) {
        return "E=" + describe_relation(exts[k]);
      }
    }
    return std::nullopt;
  });
  s.check("bz.equivalence_structures", s.distributive_class, [&]() -> Witness {
    if (structures.size() != exts.size()) {
      return std::to_string(structures.size()) + " structures, " + std::to_string(exts.size()) + " equivalences";
    }
    for (const auto& st : structures) {
      const auto matches = std::count(ext_negs.begin(), ext_negs.end(), st.neg);
      if (matches != 1) return std::to_string(matches) + " equivalences match one structure";
    }
    return std::nullopt;
  });
  s.check("bz.star_quasiorder", sp.flags().quasiorder, [&]() -> Witness {
    for (std::size_t k = 0; k < exts.size(); ++k) {
      const auto c = pbz_star_check(s.dm, ext_negs[k], exts[k]);
      const bool finest = exts[k] == s.re;
      if (c.holds != finest || !c.agree) return "E=" + describe_relation(exts[k]);
      if (!finest) {
        const auto p = pbz_star_counterexample(sp, exts[k]);
        auto i = s.dm.find(p);
        if (!i || !s.dm.in_rs(*i)) return "counterexample " + s.pair(p) + " outside RS";
        const auto& neg = ext_negs[k];
        if (l.leq(neg(l.meet(*i, inv(*i))), l.join(neg(*i), neg(inv(*i))))) {
          return "counterexample " + s.pair(p) + " satisfies BZ8";
        }
      }
    }
    return std::nullopt;
  });
  s.check("bz.antiortholattice", s.distributive_class, [&]() -> Witness {
    const bool total = s.re == Relation::full(sp.universe_ptr());
    bool any = false;
    for (const auto& st : structures) any = any || is_antiortholattice(l, inv, st.neg);
    if (any != total) return "R^e total: " + yes_no(total);
    if (total && (structures.size() != 1 || structures.front().neg != trivial_neg(l))) {
      return std::string("negation is not the trivial one");
    }
    return std::nullopt;
  });

  const auto stone = stone_analysis(s.dm);
  s.check("bz.equivalence_stone", sp.flags().equivalence, [&]() -> Witness {
    if (!stone.pseudocomplemented) return std::string("pseudocomplement missing");
    if (!stone.equivalence_formula.value_or(false)) return std::string("(A,B)* ≠ (B^c,B^c)");
    if (!stone.is_stone || !stone.meet_de_morgan || !stone.skeleton_boolean) return std::string("not a Stone algebra");
    if (!check_bz_axioms(l, inv, *stone.star).pbz_star) return std::string("* is not a PBZ* negation");
    if (*stone.star != neg_from_equivalence(s.dm, sp.relation())) return std::string("* differs from ¬ of R");
    return std::nullopt;
  });
  s.check("bz.kleene_stone", stone.is_stone, [&]() -> Witness {
    const auto rep = check_bz_axioms(l, inv, *stone.star);
    if (!rep.pbz_star) return std::string("* is not a PBZ* negation");
    return std::nullopt;
  });
  if (sp.flags().quasiorder) {
    std::string detail = "stone=" + yes_no(stone.is_stone) +
                         " R⁻¹∘R=R^e:" + yes_no(stone.inverse_then_r_is_re) +
                         " R∘R⁻¹=R^e:" + yes_no(stone.r_then_inverse_is_re);
    if (stone.star) detail += " ¬(R^e)=*:" + yes_no(*stone.star == neg_from_equivalence(s.dm, s.re));
    s.finding("bz.stone_composition", detail);
  }
}

}  // namespace

TheoremSuiteReport run_theorem_suite(const Relation& r) {
  require_reflexive(r);
  const auto start = std::chrono::steady_clock::now();
  SuiteRun s(r);
  s.report.relation = describe_relation(r);
  const auto f = s.space.flags();
  const std::pair<bool, const char*> named[] = {
      {f.reflexive, "reflexive"},     {f.symmetric, "symmetric"},     {f.transitive, "transitive"},
      {f.tolerance, "tolerance"},     {f.quasiorder, "quasiorder"},   {f.equivalence, "equivalence"},
      {s.irredundant, "irredundant-covering"}};
  for (const auto& [holds, name] : named) {
    if (holds) s.report.classes.emplace_back(name);
  }
  s.report.rs_size = s.rs.size();
  s.report.dm_size = s.dm.size();
  approximation_checks(s);
  rough_set_checks(s);
  a_family_checks(s);
  completion_checks(s);
  kleene_checks(s);
  bz_checks(s);
  s.report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return std::move(s.report);
}

std::vector<TheoremSuiteReport> mine(const MineOptions& options) {
  std::vector<Relation> relations = options.mode == MineMode::exhaustive
                                        ? enumerate_reflexive_relations(options.n, options.filter)
                                        : sample_reflexive_relations(options.n, options.count, options.seed, options.filter);
  std::vector<TheoremSuiteReport> reports(relations.size());
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, relations.size()));
  if (jobs == 1) {
    for (std::size_t i = 0; i < relations.size(); ++i) reports[i] = run_theorem_suite(relations[i]);
    return reports;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w]() {
      try {
        for (std::size_t i = w; i < relations.size(); i += jobs) reports[i] = run_theorem_suite(relations[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

}  // namespace roughdm
