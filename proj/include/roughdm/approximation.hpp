#pragma once

#include <vector>

#include "roughdm/relation.hpp"

namespace roughdm {

/// Which neighbourhoods an approximation scans: R(x) (forward) or R⁻¹(x)
/// (inverse).
enum class Direction { forward, inverse };

/// ℘(U)^▼ (lower_definable: X = X^{△▼}) or ℘(U)^▲ (upper_definable:
/// X = X^{▽▲}).
enum class DefinableFamily { lower_definable, upper_definable };

/// Rough approximation operators for one fixed relation.
///
///   lower(X, forward) = {x : R(x) ⊆ X}          upper(X, forward) = {x : R(x) ∩ X ≠ ∅}
///   lower(X, inverse) = {x : R⁻¹(x) ⊆ X}        upper(X, inverse) = {x : R⁻¹(x) ∩ X ≠ ∅}
///
/// When the relation is an equivalence the forward and inverse operators
/// coincide.
class ApproxSpace {
 public:
  explicit ApproxSpace(Relation relation);

  const Relation& relation() const noexcept { return relation_; }
  const Relation& inverse() const noexcept { return inverse_; }
  const Universe& universe() const noexcept { return relation_.universe(); }
  const UniversePtr& universe_ptr() const noexcept { return relation_.universe_ptr(); }
  std::size_t size() const noexcept { return relation_.size(); }
  const PropertyFlags& flags() const noexcept { return flags_; }

  Subset lower(const Subset& x, Direction dir = Direction::forward) const;
  Subset upper(const Subset& x, Direction dir = Direction::forward) const;

  /// Singleton-neighbourhood elements {x : |R(x)| = 1}.
  const Subset& singletons() const noexcept { return singletons_; }

  bool is_definable(const Subset& x, DefinableFamily family) const;

  /// {X^▼ : X ⊆ U} and {X^▲ : X ⊆ U}, each sorted by bit pattern.
  std::vector<Subset> lower_definable_sets() const;
  std::vector<Subset> upper_definable_sets() const;

  Subset empty_set() const { return universe().empty_set(); }
  Subset full_set() const { return universe().full_set(); }

 private:
  void check(const Subset& x) const;

  Relation relation_;
  Relation inverse_;
  PropertyFlags flags_;
  Subset singletons_;
};

}  // namespace roughdm
