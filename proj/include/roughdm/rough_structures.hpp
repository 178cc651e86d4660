#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "roughdm/approximation.hpp"

namespace roughdm {

inline constexpr std::size_t kDefaultRsCap = 16;

/// An ordered pair (A, B) of subsets, ordered componentwise.
struct RoughPair {
  Subset lower;
  Subset upper;

  bool leq(const RoughPair& other) const {
    return lower.subset_of(other.lower) && upper.subset_of(other.upper);
  }
  bool is_exact() const { return lower == upper; }

  friend bool operator==(const RoughPair&, const RoughPair&) = default;
};

/// Canonical order: (|upper|, upper bits, lower bits).
bool canonical_less(const RoughPair& a, const RoughPair& b);

/// (A,B) ↦ (B^c, A^c).
RoughPair kleene_neg(const RoughPair& p);

inline bool is_exact(const RoughPair& p) { return p.is_exact(); }

std::string format_pair(const Universe& u, const RoughPair& p);

}  // namespace roughdm

template <>
struct std::hash<roughdm::RoughPair> {
  std::size_t operator()(const roughdm::RoughPair& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.lower.bits() * 0x9E3779B97F4A7C15ULL + p.upper.bits());
  }
};

namespace roughdm {

/// Lookup from pair to its position in a canonical list.
class PairIndex {
 public:
  PairIndex() = default;
  explicit PairIndex(const std::vector<RoughPair>& pairs);
  std::optional<std::size_t> find(const RoughPair& p) const;
  std::size_t at(const RoughPair& p) const;

 private:
  std::unordered_map<RoughPair, std::size_t> index_;
};

/// RS = {(X^▼, X^▲) : X ⊆ U}, deduplicated and canonically sorted.
class RSFamily {
 public:
  RSFamily(ApproxSpace space, std::vector<RoughPair> pairs);

  const ApproxSpace& space() const noexcept { return space_; }
  const std::vector<RoughPair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return pairs_[i].leq(pairs_[j]); }
  bool contains(const RoughPair& p) const { return index_.find(p).has_value(); }
  std::optional<std::size_t> find(const RoughPair& p) const { return index_.find(p); }

  /// The order relation as a dense row-major matrix.
  std::vector<std::vector<bool>> order_matrix() const;

 private:
  ApproxSpace space_;
  std::vector<RoughPair> pairs_;
  PairIndex index_;
};

RSFamily build_rs(const ApproxSpace& space, std::size_t cap = kDefaultRsCap);

struct LatticeWitness {
  std::size_t first = 0;
  std::size_t second = 0;
  /// "join" when the pair lacks a least upper bound, "meet" when it lacks a
  /// greatest lower bound.
  std::string missing;
  /// The minimal upper bounds (or maximal lower bounds) of the pair.
  std::vector<std::size_t> extremal_bounds;
};

struct LatticeCheck {
  bool is_lattice = true;
  std::optional<LatticeWitness> witness;
};

LatticeCheck rs_is_lattice(const RSFamily& rs);

/// {(A,A) : A a union of R^e-classes}, canonically sorted. Requires a
/// reflexive relation.
std::vector<RoughPair> exact_family(const ApproxSpace& space);

/// 𝒜 = ℘(U)^▽ ∩ ℘(U)^△, as the sets with Z^{▼△} = Z^{▲▽}, sorted by bits.
struct AFamily {
  std::vector<Subset> sets;
  bool contains(const Subset& z) const;
};

AFamily build_A_family(const ApproxSpace& space, std::size_t cap = kDefaultRsCap);

/// All saturated sets of an equivalence, sorted by bits.
std::vector<Subset> saturated_sets(const Relation& equivalence);

}  // namespace roughdm
