#include "roughdm/approximation.hpp"

#include <algorithm>

namespace roughdm {

ApproxSpace::ApproxSpace(Relation relation)
    : relation_(std::move(relation)),
      inverse_(relation_inverse(relation_)),
      flags_(classify(relation_)),
      singletons_(relation_.universe().empty_set()) {
  for (std::size_t i = 0; i < relation_.size(); ++i) {
    if (relation_.neighborhood(i).size() == 1) singletons_ = singletons_.with(i);
  }
}

void ApproxSpace::check(const Subset& x) const {
  if (x.universe_size() != size()) throw UniverseMismatch("subset does not belong to the approximation space");
}

Subset ApproxSpace::lower(const Subset& x, Direction dir) const {
  check(x);
  const auto& rows = (dir == Direction::forward ? relation_ : inverse_).rows();
  std::uint64_t out = 0;
  const std::uint64_t xb = x.bits();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if ((rows[i].bits() & ~xb) == 0) out |= std::uint64_t{1} << i;
  }
  return Subset(size(), out);
}

Subset ApproxSpace::upper(const Subset& x, Direction dir) const {
  check(x);
  const auto& rows = (dir == Direction::forward ? relation_ : inverse_).rows();
  std::uint64_t out = 0;
  const std::uint64_t xb = x.bits();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if ((rows[i].bits() & xb) != 0) out |= std::uint64_t{1} << i;
  }
  return Subset(size(), out);
}

bool ApproxSpace::is_definable(const Subset& x, DefinableFamily family) const {
  if (family == DefinableFamily::lower_definable) {
    return lower(upper(x, Direction::inverse), Direction::forward) == x;
  }
  return upper(lower(x, Direction::inverse), Direction::forward) == x;
}

namespace {

template <typename F>
std::vector<Subset> image_of_powerset(std::size_t n, F&& f) {
  if (n > 24) throw CapExceeded("powerset image", 24, n);
  std::vector<std::uint64_t> seen;
  seen.reserve(std::size_t{1} << n);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) seen.push_back(f(Subset(n, b)).bits());
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  std::vector<Subset> out;
  out.reserve(seen.size());
  for (auto b : seen) out.emplace_back(n, b);
  return out;
}

}  // namespace

std::vector<Subset> ApproxSpace::lower_definable_sets() const {
  return image_of_powerset(size(), [&](const Subset& x) { return lower(x); });
}

std::vector<Subset> ApproxSpace::upper_definable_sets() const {
  return image_of_powerset(size(), [&](const Subset& x) { return upper(x); });
}

}  // namespace roughdm
