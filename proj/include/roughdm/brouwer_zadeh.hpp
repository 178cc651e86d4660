#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "roughdm/completion.hpp"
#include "roughdm/relation.hpp"

namespace roughdm {

inline constexpr std::size_t kDefaultPartitionCap = 10;
inline constexpr std::size_t kDefaultPbzCap = 512;

/// A candidate Brouwer complement ¬ as an explicit table over lattice indices.
struct NegOperator {
  std::vector<std::size_t> map;
  std::size_t operator()(std::size_t i) const { return map[i]; }
  std::size_t size() const noexcept { return map.size(); }
  friend bool operator==(const NegOperator&, const NegOperator&) = default;
};

/// Pass/fail for one law, with the offending elements when it fails.
struct LawResult {
  bool holds = true;
  std::vector<std::size_t> witness;
};

/// BZ1 a∧¬a = 0, BZ2 a ≤ ¬¬a, BZ3 antitone, BZ4 ∼¬a = ¬¬a,
/// BZ5 ¬a ≤ ∼a, BZ6 ¬¬¬a = ¬a, BZ7 ¬a and ∼¬a complementary,
/// BZ8 ¬(a∧∼a) ≤ ¬a ∨ ¬∼a.
struct BZReport {
  std::array<LawResult, 9> bz;  // index 1..8; slot 0 unused
  LawResult pseudo_kleene;
  LawResult paraorthomodular;
  bool bz_lattice = false;
  bool pbz = false;
  bool bz_star = false;
  bool pbz_star = false;
  bool antiortholattice = false;
  /// BZ5-BZ7 hold whenever BZ1-BZ4 do.
  bool derived_consistent = true;
  std::vector<std::size_t> clopen;
  std::vector<std::size_t> brouwer_sharp;
  std::vector<std::size_t> sharp;
};

BZReport check_bz_axioms(const FiniteLattice& l, const Involution& inv, const NegOperator& neg);

/// ◇a = ¬¬a and ◻a = ¬∼a.
std::size_t diamond(const Involution& inv, const NegOperator& neg, std::size_t x);
std::size_t box(const Involution& inv, const NegOperator& neg, std::size_t x);

/// First law of ◻/◇ (inflation, monotonicity, idempotence, mutual
/// absorption, ∼-duality) violated at some element, if any.
struct ModalLawCheck {
  bool holds = true;
  std::string law;
  std::vector<std::size_t> witness;
};
ModalLawCheck check_modal_laws(const FiniteLattice& l, const Involution& inv, const NegOperator& neg);

/// 𝒩 computed as ¬[L], as the ◇-closed elements and as the ◻-open elements.
struct ClopenFamily {
  std::vector<std::size_t> members;
  bool descriptions_agree = true;
};
ClopenFamily clopen_family(const FiniteLattice& l, const Involution& inv, const NegOperator& neg);

/// ¬(A,B) = (B^{c↓}, B^{c↓}) with ↓ the lower approximation of E.
NegOperator neg_from_equivalence(const DMLattice& dm, const Relation& e);

/// All equivalences containing the relation, finest (R^e) first and U×U
/// last; partitions of U/R^e in restricted-growth order within a block count.
std::vector<Relation> extending_equivalences(const ApproxSpace& space, std::size_t cap = kDefaultPartitionCap);

/// Why a family fails to be a complete subortholattice, or empty.
std::string subortholattice_defect(const FiniteLattice& l, const Involution& inv,
                                   const std::vector<std::size_t>& family);

/// ¬x = ⋁{n ∈ N : n ≤ ∼x}. Throws PreconditionError naming the defect
/// when N is not a complete subortholattice.
NegOperator neg_from_subortholattice(const FiniteLattice& l, const Involution& inv,
                                     const std::vector<std::size_t>& family);

/// The pair-level formula ⋁{(X,Y) ∈ N : X ∩ B = ∅, Y ∩ A = ∅}.
NegOperator neg_from_subortholattice_sets(const DMLattice& dm, const std::vector<std::size_t>& family);

/// The ¬ that is ⊥ ↦ ⊤ and everything else ↦ ⊥.
NegOperator trivial_neg(const FiniteLattice& l);

struct PBZStructure {
  std::vector<std::size_t> clopen;  // ascending
  std::vector<std::size_t> atoms;   // ascending
  NegOperator neg;
};

/// Every ∼-closed atomistic complete Boolean sublattice of sharp elements,
/// with its induced ¬; both round trips N → ¬ → 𝒩 and ¬ → 𝒩 → ¬ are
/// asserted (std::logic_error on failure). Ordered by atom count, then atoms.
std::vector<PBZStructure> enumerate_pbz_structures(const DMLattice& dm, std::size_t cap = kDefaultPbzCap);

/// Partitions of U all of whose block unions lie in 𝒜; their count equals
/// the number of PBZ structures.
std::size_t count_boolean_subalgebras_in_A(const ApproxSpace& space, std::size_t cap = kDefaultPartitionCap);

struct PBZStarCheck {
  bool holds = true;
  std::optional<std::size_t> witness;  // element violating BZ8
  /// (A ∪ B^c)^↓ ⊆ A^↓ ∪ B^{c↓} over RS, evaluated for quasiorders when the
  /// generating equivalence is supplied.
  std::optional<bool> set_condition;
  std::optional<RoughPair> set_witness;
  bool agree = true;
};

PBZStarCheck pbz_star_check(const DMLattice& dm, const NegOperator& neg,
                            const std::optional<Relation>& generating_equivalence = std::nullopt);

/// For a quasiorder and an equivalence E ⊋ R^e: the pair
/// (x/R^e ∪ K, x/R^e ∪ H^c), H an E-class holding several R^e-classes,
/// x ∈ H, K the R^e-closure of the singletons outside H.
RoughPair pbz_star_counterexample(const ApproxSpace& space, const Relation& e);

bool is_antiortholattice(const FiniteLattice& l, const Involution& inv, const NegOperator& neg);

/// Largest y with x ∧ y = 0, when that set has a maximum.
std::optional<std::size_t> pseudocomplement(const FiniteLattice& l, std::size_t x);

struct StoneReport {
  bool pseudocomplemented = false;
  bool stone_identity = false;
  bool distributive = false;
  bool meet_de_morgan = false;  // (a∧b)* = a* ∨ b*
  bool skeleton_boolean = false;
  bool is_stone = false;
  /// Equivalence relations: (A,B)* = (B^c, B^c) everywhere.
  std::optional<bool> equivalence_formula;
  /// R⁻¹∘R = R^e and R∘R⁻¹ = R^e, composition read left to right.
  bool inverse_then_r_is_re = false;
  bool r_then_inverse_is_re = false;
  /// The pseudocomplement table when every element has one.
  std::optional<NegOperator> star;
};

StoneReport stone_analysis(const DMLattice& dm);

}  // namespace roughdm
