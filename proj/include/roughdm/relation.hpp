#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "roughdm/subset.hpp"
#include "roughdm/universe.hpp"

namespace roughdm {

/// A binary relation on a finite universe as an n×n incidence matrix; row i
/// is the neighbourhood R(x_i) = {y : (x_i, y) ∈ R}.
class Relation {
 public:
  explicit Relation(UniversePtr universe);
  Relation(UniversePtr universe, std::vector<Subset> rows);

  static Relation identity(UniversePtr universe);
  static Relation full(UniversePtr universe);
  static Relation from_pairs(UniversePtr universe,
                             const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  const Universe& universe() const noexcept { return *universe_; }
  const UniversePtr& universe_ptr() const noexcept { return universe_; }
  std::size_t size() const noexcept { return rows_.size(); }

  bool related(std::size_t i, std::size_t j) const { return rows_.at(i).contains(j); }
  /// R(x_i).
  const Subset& neighborhood(std::size_t i) const { return rows_.at(i); }
  const std::vector<Subset>& rows() const noexcept { return rows_; }

  /// Inclusion of relations over the same universe.
  bool subset_of(const Relation& other) const;
  Relation with_pair(std::size_t i, std::size_t j) const;

  friend bool operator==(const Relation& a, const Relation& b);

 private:
  UniversePtr universe_;
  std::vector<Subset> rows_;
};

struct PropertyFlags {
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  bool left_total = false;
  bool right_total = false;
  bool equivalence = false;
  bool quasiorder = false;
  bool tolerance = false;

  friend bool operator==(const PropertyFlags&, const PropertyFlags&) = default;
};

/// A partition of the universe; blocks are ordered by their least element.
class Partition {
 public:
  Partition(UniversePtr universe, std::vector<Subset> blocks);

  const Universe& universe() const noexcept { return *universe_; }
  const UniversePtr& universe_ptr() const noexcept { return universe_; }
  const std::vector<Subset>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const Subset& block_of(std::size_t element) const;

  /// The equivalence whose classes are the blocks.
  Relation to_relation() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.blocks_ == b.blocks_; }

 private:
  UniversePtr universe_;
  std::vector<Subset> blocks_;
};

Relation relation_inverse(const Relation& r);
/// (x,z) ∈ compose(r, s) iff some y has (x,y) ∈ r and (y,z) ∈ s.
Relation relation_compose(const Relation& r, const Relation& s);
Relation relation_union(const Relation& r, const Relation& s);
Relation transitive_closure(const Relation& r);
/// (R ∪ R⁻¹)⁺. The formula is applied as-is to non-reflexive input, where
/// the result need not be reflexive; callers check classify() first.
Relation equivalence_closure(const Relation& r);
PropertyFlags classify(const Relation& r);
Partition equivalence_classes(const Relation& e);
bool is_saturated(const Relation& e, const Subset& x);
bool is_irredundant_covering_tolerance(const Relation& r);

/// Throws PreconditionError unless e is an equivalence.
void require_equivalence(const Relation& e);
void require_reflexive(const Relation& r);

}  // namespace roughdm
