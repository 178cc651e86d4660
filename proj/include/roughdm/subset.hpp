#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "roughdm/errors.hpp"

namespace roughdm {

/// Largest carrier a Subset can address; one machine word per set.
inline constexpr std::size_t kMaxUniverse = 64;

/// A subset of a finite carrier {0, ..., n-1}, stored as a single word.
///
/// The carrier size travels with the value so that set algebra between
/// subsets of different universes is rejected instead of silently mixing.
class Subset {
 public:
  Subset() = default;
  Subset(std::size_t universe_size, std::uint64_t bits)
      : bits_(bits & mask_for(universe_size)), n_(static_cast<std::uint8_t>(universe_size)) {
    if (universe_size > kMaxUniverse) {
      throw PreconditionError("universe larger than 64 elements");
    }
  }

  static Subset empty(std::size_t n) { return Subset(n, 0); }
  static Subset full(std::size_t n) { return Subset(n, mask_for(n)); }
  static Subset singleton(std::size_t n, std::size_t i) { return Subset(n, std::uint64_t{1} << i); }

  std::size_t universe_size() const noexcept { return n_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool contains(std::size_t i) const noexcept { return (bits_ >> i) & 1U; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool is_empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == mask_for(n_); }

  Subset complement() const noexcept { return raw(n_, ~bits_ & mask_for(n_)); }
  Subset with(std::size_t i) const noexcept { return raw(n_, bits_ | (std::uint64_t{1} << i)); }

  bool subset_of(const Subset& other) const {
    check_same(other);
    return (bits_ & ~other.bits_) == 0;
  }
  bool intersects(const Subset& other) const {
    check_same(other);
    return (bits_ & other.bits_) != 0;
  }

  friend Subset operator&(const Subset& a, const Subset& b) {
    a.check_same(b);
    return raw(a.n_, a.bits_ & b.bits_);
  }
  friend Subset operator|(const Subset& a, const Subset& b) {
    a.check_same(b);
    return raw(a.n_, a.bits_ | b.bits_);
  }
  /// Set difference.
  friend Subset operator-(const Subset& a, const Subset& b) {
    a.check_same(b);
    return raw(a.n_, a.bits_ & ~b.bits_);
  }
  Subset& operator&=(const Subset& b) { return *this = *this & b; }
  Subset& operator|=(const Subset& b) { return *this = *this | b; }

  friend bool operator==(const Subset&, const Subset&) = default;

  /// Members in ascending index order.
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      f(static_cast<std::size_t>(std::countr_zero(b)));
    }
  }

  static constexpr std::uint64_t mask_for(std::size_t n) noexcept {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

 private:
  static Subset raw(std::uint8_t n, std::uint64_t bits) noexcept {
    Subset s;
    s.n_ = n;
    s.bits_ = bits;
    return s;
  }
  void check_same(const Subset& other) const {
    if (n_ != other.n_) throw UniverseMismatch("subsets over different universes");
  }

  std::uint64_t bits_ = 0;
  std::uint8_t n_ = 0;
};

}  // namespace roughdm

template <>
struct std::hash<roughdm::Subset> {
  std::size_t operator()(const roughdm::Subset& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits() * 0x9E3779B97F4A7C15ULL ^ s.universe_size());
  }
};
