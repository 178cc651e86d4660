#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace roughdm {

/// Growable bit vector for index sets over posets larger than a word.
class DynBits {
 public:
  DynBits() = default;
  explicit DynBits(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void set_all();
  std::size_t count() const;
  bool subset_of(const DynBits& other) const;
  bool intersects(const DynBits& other) const;
  /// Lowest set position, or size() when empty.
  std::size_t find_first() const;
  DynBits& operator&=(const DynBits& other);
  friend DynBits operator&(DynBits a, const DynBits& b) { return a &= b; }
  friend bool operator==(const DynBits&, const DynBits&) = default;
  std::size_t hash() const noexcept;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Index type for lattice elements; lattices hold at most 65535 elements.
using ElemIndex = std::uint16_t;

/// A finite lattice on elements 0..m-1 with dense order, join and meet
/// tables and the cover relation.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  /// Builds join/meet tables from the order by searching least upper and
  /// greatest lower bounds. Throws PreconditionError when `leq` is not a
  /// partial order or some pair lacks a bound.
  static FiniteLattice from_order(const std::vector<std::vector<bool>>& leq);

  /// Uses caller-supplied tables. The order must be a partial order with a
  /// least and a greatest element; the tables are trusted.
  static FiniteLattice from_tables(const std::vector<std::vector<bool>>& leq, std::vector<ElemIndex> join,
                                   std::vector<ElemIndex> meet);

  std::size_t size() const noexcept { return m_; }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i * m_ + j] != 0; }
  bool lt(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
  std::size_t join(std::size_t i, std::size_t j) const { return join_[i * m_ + j]; }
  std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * m_ + j]; }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return up_covers_[i]; }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return down_covers_[i]; }
  /// Length of the longest chain from bottom to i.
  std::size_t height(std::size_t i) const { return height_[i]; }

  std::vector<std::vector<bool>> order_matrix() const;

  bool is_distributive() const;
  /// Every element of `subset` pairwise joined/met stays inside `subset`.
  bool is_sublattice(const std::vector<std::size_t>& subset) const;

 private:
  void init_order(const std::vector<std::vector<bool>>& leq);
  void init_covers();

  std::size_t m_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<ElemIndex> join_;
  std::vector<ElemIndex> meet_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
  std::vector<std::vector<std::size_t>> up_covers_;
  std::vector<std::vector<std::size_t>> down_covers_;
  std::vector<std::size_t> height_;
};

/// True when `leq` is reflexive, antisymmetric and transitive.
bool is_partial_order(const std::vector<std::vector<bool>>& leq);

/// An antitone involution on a lattice, as an index permutation.
struct Involution {
  std::vector<std::size_t> map;
  std::size_t operator()(std::size_t i) const { return map[i]; }
};

/// map∘map = id and i ≤ j ⟹ map(j) ≤ map(i).
bool is_antitone_involution(const FiniteLattice& l, const Involution& inv);

/// Order-isomorphism search between two finite posets/lattices.
///
/// `fixed` optionally pins part of the mapping: fixed[i] = j forces i ↦ j.
/// Returns the full mapping when one exists.
std::optional<std::vector<std::size_t>> lattice_isomorphic(
    const FiniteLattice& a, const FiniteLattice& b,
    const std::vector<std::optional<std::size_t>>& fixed = {});

}  // namespace roughdm
