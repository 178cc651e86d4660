#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "roughdm/lattice.hpp"
#include "roughdm/rough_structures.hpp"

namespace roughdm {

inline constexpr std::size_t kDefaultDmCap = 10;
inline constexpr std::size_t kDefaultOracleCap = 4096;

/// The completion DM(RS) of the rough-set poset, elements in canonical order.
///
/// Elements are the pairs (A,B) ∈ ℘(U)^▼ × ℘(U)^▲ with A^{△▲} ⊆ B and
/// A ∩ S = B ∩ S, where S is the set of singleton-neighbourhood elements.
/// The lattice operations are
///
///   (A1,B1) ∨ (A2,B2) = ((A1 ∪ A2)^{△▼}, B1 ∪ B2)
///   (A1,B1) ∧ (A2,B2) = (A1 ∩ A2, (B1 ∩ B2)^{▽▲})
class DMLattice {
 public:
  DMLattice(ApproxSpace space, std::vector<RoughPair> elements, FiniteLattice lattice, std::vector<bool> in_rs);

  const ApproxSpace& space() const noexcept { return space_; }
  const FiniteLattice& lattice() const noexcept { return lattice_; }
  const std::vector<RoughPair>& elements() const noexcept { return elements_; }
  const RoughPair& element(std::size_t i) const { return elements_.at(i); }
  std::size_t size() const noexcept { return elements_.size(); }
  std::optional<std::size_t> find(const RoughPair& p) const { return index_.find(p); }
  std::size_t index_of(const RoughPair& p) const { return index_.at(p); }
  /// Whether element i is an actual rough set (as opposed to a pair the
  /// completion added).
  bool in_rs(std::size_t i) const { return in_rs_.at(i); }
  std::size_t rs_count() const;

  /// ∼ as an index map.
  const Involution& involution() const noexcept { return involution_; }

 private:
  ApproxSpace space_;
  std::vector<RoughPair> elements_;
  PairIndex index_;
  FiniteLattice lattice_;
  std::vector<bool> in_rs_;
  Involution involution_;
};

/// The four membership conditions, reported separately for diagnostics.
struct DMConditions {
  bool lower_definable = false;  // A ∈ ℘(U)^▼
  bool upper_definable = false;  // B ∈ ℘(U)^▲
  bool closure_bound = false;    // A^{△▲} ⊆ B
  bool singleton_agree = false;  // A ∩ S = B ∩ S
  bool all() const { return lower_definable && upper_definable && closure_bound && singleton_agree; }
};

DMConditions dm_conditions(const ApproxSpace& space, const Subset& a, const Subset& b);
bool dm_membership(const ApproxSpace& space, const Subset& a, const Subset& b);

RoughPair dm_join(const ApproxSpace& space, const RoughPair& p, const RoughPair& q);
RoughPair dm_meet(const ApproxSpace& space, const RoughPair& p, const RoughPair& q);

DMLattice build_dm(const ApproxSpace& space, std::size_t cap = kDefaultDmCap);

/// Lattice of normal cuts of a finite poset, computed as the intersection
/// closure of the principal down-sets (plus the whole poset).
struct CutCompletion {
  FiniteLattice lattice;
  /// Down-set of each lattice element, over poset indices.
  std::vector<DynBits> cuts;
  /// principal[p] = lattice element of the cut ↓p.
  std::vector<std::size_t> principal;
};

CutCompletion macneille_oracle(const std::vector<std::vector<bool>>& leq, std::size_t cap = kDefaultOracleCap);

struct OracleComparison {
  bool isomorphic = false;
  /// DM index → oracle index, fixing every rough set onto its principal cut.
  std::vector<std::size_t> mapping;
};

/// Checks DM(RS) against the cut completion of RS with an isomorphism that
/// sends each rough set to its own principal cut.
OracleComparison compare_with_oracle(const DMLattice& dm, const RSFamily& rs);

}  // namespace roughdm
