#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "roughdm/completion.hpp"

namespace roughdm {

struct ElementAnalysis {
  std::size_t index = 0;
  bool sharp = false;
  bool complemented = false;
  bool neutral = false;
  bool central = false;
  bool exact = false;
  std::vector<std::size_t> complements;
};

/// First (p,q) with p ∧ ∼p ≰ q ∨ ∼q.
std::optional<std::pair<std::size_t, std::size_t>> pseudo_kleene_witness(const FiniteLattice& l,
                                                                         const Involution& inv);
/// First (p,q) with p ≤ q and ∼p ∧ q = 0 but p ≠ q.
std::optional<std::pair<std::size_t, std::size_t>> paraorthomodular_witness(const FiniteLattice& l,
                                                                            const Involution& inv);

/// x ∧ ∼x = 0.
bool is_sharp(const FiniteLattice& l, const Involution& inv, std::size_t x);

/// B^▽ = A^△ for a DM(RS) element; throws PreconditionError otherwise.
bool sharp_criterion(const ApproxSpace& space, const RoughPair& p);

std::vector<std::size_t> complements_of(const FiniteLattice& l, std::size_t x);

/// First (x,y) violating (a∧x)∨(x∧y)∨(y∧a) = (a∨x)∧(x∨y)∧(y∨a).
std::optional<std::pair<std::size_t, std::size_t>> neutrality_witness(const FiniteLattice& l, std::size_t a);
bool is_neutral(const FiniteLattice& l, std::size_t a);

/// Central = complemented and neutral, for any finite lattice.
std::vector<std::size_t> center_by_definition(const FiniteLattice& l);

/// ∀x: x = (x∧a)∨(x∧∼a).
bool splits_by_meets(const FiniteLattice& l, const Involution& inv, std::size_t a);
/// ∀x: x = (x∨a)∧(x∨∼a).
bool splits_by_joins(const FiniteLattice& l, const Involution& inv, std::size_t a);

/// For sharp (A,B): ∀X ∈ ℘(U)^▼, X = ((X∩A) ∪ (X∩B^c))^{△▼}.
bool central_by_definable_sets(const DMLattice& dm, std::size_t i);

struct CenterAnalysis {
  std::vector<bool> by_definition;
  std::vector<bool> by_decomposition;
  std::vector<bool> by_definable_sets;
  bool agree = true;
  std::vector<std::size_t> center;
};

CenterAnalysis analyze_center(const DMLattice& dm);
/// The agreed center; throws std::logic_error when the three routes differ.
std::vector<std::size_t> center(const DMLattice& dm);

std::vector<ElementAnalysis> analyze_elements(const DMLattice& dm);

/// φ(A,B) = A^△ on sharp pairs; ψ(Z) = (Z^▼, Z^▲) on 𝒜.
Subset phi(const ApproxSpace& space, const RoughPair& p);
RoughPair psi(const ApproxSpace& space, const Subset& z);

struct ChajdaWitness {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t lhs = 0;  // x ∧ (∼x ∨ y)
  std::size_t rhs = 0;  // (x ∧ ∼x) ∨ (x ∧ y)
};

struct ChajdaCheck {
  bool holds = true;
  std::optional<ChajdaWitness> witness;
};

/// x ∧ (∼x ∨ y) = (x ∧ ∼x) ∨ (x ∧ y) over all pairs.
ChajdaCheck check_chajda_identity(const FiniteLattice& l, const Involution& inv);

/// Five elements {0,a,b,c,1} forming a pentagon: a < b, c beside both.
struct PentagonWitness {
  std::size_t bottom, a, b, c, top;
};
struct DiamondWitness {
  std::size_t bottom, x, y, z, top;
};

std::optional<PentagonWitness> find_pentagon(const FiniteLattice& l);
std::optional<DiamondWitness> find_diamond(const FiniteLattice& l);

struct CFamilyAnalysis {
  /// DM indices of the sharp elements, ascending.
  std::vector<std::size_t> members;
  bool is_sublattice = false;
  /// The induced order on 𝒞 is itself a lattice.
  bool induced_is_lattice = false;
  bool is_boolean = false;
  bool uniquely_complemented = true;
  /// Member with several complements in the induced lattice (DM indices).
  std::optional<std::pair<std::size_t, std::vector<std::size_t>>> multi_complement;
  /// Pentagon / diamond inside the induced lattice, reported as DM indices.
  std::optional<PentagonWitness> pentagon;
  std::optional<DiamondWitness> diamond;
};

CFamilyAnalysis c_family_analysis(const DMLattice& dm);

/// For a ∼-closed T ⊆ 𝒞: is T a complete sublattice of DM(RS), and is φ[T]
/// a complete sublattice of ℘(U). The two answers are expected to agree.
struct CompleteSublatticeCheck {
  bool lattice_side = false;
  bool powerset_side = false;
};

CompleteSublatticeCheck check_complete_sublattice(const DMLattice& dm, const std::vector<std::size_t>& t);

/// Bottom, top and closure under binary joins and meets.
bool is_complete_sublattice(const FiniteLattice& l, const std::vector<std::size_t>& subset);

}  // namespace roughdm
