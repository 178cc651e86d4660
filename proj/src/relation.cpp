#include "roughdm/relation.hpp"

#include <algorithm>

namespace roughdm {

namespace {

void check_same_universe(const Relation& a, const Relation& b) {
  if (a.universe_ptr() != b.universe_ptr() && !(a.universe() == b.universe())) {
    throw UniverseMismatch("relations over different universes");
  }
}

}  // namespace

Relation::Relation(UniversePtr universe) : universe_(std::move(universe)) {
  rows_.assign(universe_->size(), universe_->empty_set());
}

Relation::Relation(UniversePtr universe, std::vector<Subset> rows)
    : universe_(std::move(universe)), rows_(std::move(rows)) {
  if (rows_.size() != universe_->size()) throw UniverseMismatch("relation matrix is not n×n");
  for (const auto& row : rows_) {
    if (row.universe_size() != universe_->size()) throw UniverseMismatch("relation row of wrong width");
  }
}

Relation Relation::identity(UniversePtr universe) {
  const auto n = universe->size();
  std::vector<Subset> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(Subset::singleton(n, i));
  return Relation(std::move(universe), std::move(rows));
}

Relation Relation::full(UniversePtr universe) {
  const auto n = universe->size();
  return Relation(universe, std::vector<Subset>(n, Subset::full(n)));
}

Relation Relation::from_pairs(UniversePtr universe,
                              const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const auto n = universe->size();
  std::vector<Subset> rows(n, Subset::empty(n));
  for (auto [i, j] : pairs) {
    if (i >= n || j >= n) throw PreconditionError("pair index outside the universe");
    rows[i] = rows[i].with(j);
  }
  return Relation(std::move(universe), std::move(rows));
}

bool Relation::subset_of(const Relation& other) const {
  check_same_universe(*this, other);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (!rows_[i].subset_of(other.rows_[i])) return false;
  }
  return true;
}

Relation Relation::with_pair(std::size_t i, std::size_t j) const {
  auto rows = rows_;
  rows.at(i) = rows[i].with(j);
  return Relation(universe_, std::move(rows));
}

bool operator==(const Relation& a, const Relation& b) {
  return a.universe() == b.universe() && a.rows_ == b.rows_;
}

Partition::Partition(UniversePtr universe, std::vector<Subset> blocks)
    : universe_(std::move(universe)), blocks_(std::move(blocks)) {
  Subset seen = universe_->empty_set();
  for (const auto& b : blocks_) {
    if (b.is_empty()) throw PreconditionError("partition block is empty");
    if (b.intersects(seen)) throw PreconditionError("partition blocks overlap");
    seen |= b;
  }
  if (!seen.is_full()) throw PreconditionError("partition blocks do not cover the universe");
  std::sort(blocks_.begin(), blocks_.end(), [](const Subset& a, const Subset& b) {
    return std::countr_zero(a.bits()) < std::countr_zero(b.bits());
  });
}

const Subset& Partition::block_of(std::size_t element) const {
  for (const auto& b : blocks_) {
    if (b.contains(element)) return b;
  }
  throw PreconditionError("element outside the universe");
}

Relation Partition::to_relation() const {
  std::vector<Subset> rows(universe_->size(), universe_->empty_set());
  for (const auto& b : blocks_) {
    b.for_each([&](std::size_t i) { rows[i] = b; });
  }
  return Relation(universe_, std::move(rows));
}

Relation relation_inverse(const Relation& r) {
  const auto n = r.size();
  std::vector<Subset> rows(n, Subset::empty(n));
  for (std::size_t i = 0; i < n; ++i) {
    r.neighborhood(i).for_each([&](std::size_t j) { rows[j] = rows[j].with(i); });
  }
  return Relation(r.universe_ptr(), std::move(rows));
}

Relation relation_compose(const Relation& r, const Relation& s) {
  check_same_universe(r, s);
  const auto n = r.size();
  std::vector<Subset> rows(n, Subset::empty(n));
  for (std::size_t i = 0; i < n; ++i) {
    r.neighborhood(i).for_each([&](std::size_t j) { rows[i] |= s.neighborhood(j); });
  }
  return Relation(r.universe_ptr(), std::move(rows));
}

Relation relation_union(const Relation& r, const Relation& s) {
  check_same_universe(r, s);
  std::vector<Subset> rows;
  for (std::size_t i = 0; i < r.size(); ++i) rows.push_back(r.neighborhood(i) | s.neighborhood(i));
  return Relation(r.universe_ptr(), std::move(rows));
}

// Repeated squaring: T ← T ∪ T∘T until nothing changes. After k rounds T
// holds every path of length ≤ 2^k.
Relation transitive_closure(const Relation& r) {
  Relation current = r;
  while (true) {
    Relation next = relation_union(current, relation_compose(current, current));
    if (next == current) return current;
    current = std::move(next);
  }
}

Relation equivalence_closure(const Relation& r) {
  return transitive_closure(relation_union(r, relation_inverse(r)));
}

PropertyFlags classify(const Relation& r) {
  const auto n = r.size();
  PropertyFlags f;
  f.reflexive = true;
  f.symmetric = true;
  f.transitive = true;
  f.left_total = true;
  f.right_total = true;
  Subset has_predecessor = Subset::empty(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = r.neighborhood(i);
    if (!row.contains(i)) f.reflexive = false;
    if (row.is_empty()) f.left_total = false;
    has_predecessor |= row;
    row.for_each([&](std::size_t j) {
      if (!r.related(j, i)) f.symmetric = false;
      if (!r.neighborhood(j).subset_of(row)) f.transitive = false;
    });
  }
  f.right_total = has_predecessor.is_full();
  f.equivalence = f.reflexive && f.symmetric && f.transitive;
  f.quasiorder = f.reflexive && f.transitive;
  f.tolerance = f.reflexive && f.symmetric;
  return f;
}

void require_equivalence(const Relation& e) {
  if (!classify(e).equivalence) throw PreconditionError("relation is not an equivalence");
}

void require_reflexive(const Relation& r) {
  if (!classify(r).reflexive) throw PreconditionError("relation is not reflexive");
}

Partition equivalence_classes(const Relation& e) {
  require_equivalence(e);
  std::vector<Subset> blocks;
  Subset seen = e.universe().empty_set();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (seen.contains(i)) continue;
    blocks.push_back(e.neighborhood(i));
    seen |= e.neighborhood(i);
  }
  return Partition(e.universe_ptr(), std::move(blocks));
}

bool is_saturated(const Relation& e, const Subset& x) {
  require_equivalence(e);
  bool saturated = true;
  x.for_each([&](std::size_t i) {
    if (!e.neighborhood(i).subset_of(x)) saturated = false;
  });
  return saturated;
}

// A tolerance is induced by an irredundant covering iff every related pair
// (a,b) lies in some neighbourhood R(c) that is itself a block, i.e. its
// members are pairwise related.
bool is_irredundant_covering_tolerance(const Relation& r) {
  if (!classify(r).tolerance) return false;
  const auto n = r.size();
  std::vector<bool> is_block(n);
  for (std::size_t c = 0; c < n; ++c) {
    const auto& nc = r.neighborhood(c);
    bool block = true;
    nc.for_each([&](std::size_t y) {
      if (!nc.subset_of(r.neighborhood(y))) block = false;
    });
    is_block[c] = block;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b : r.neighborhood(a).members()) {
      bool found = false;
      for (std::size_t c = 0; c < n && !found; ++c) {
        found = is_block[c] && r.neighborhood(c).contains(a) && r.neighborhood(c).contains(b);
      }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace roughdm
