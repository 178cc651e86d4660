#include "roughdm/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "roughdm/errors.hpp"

namespace roughdm {

void DynBits::set_all() {
  std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
  if (size_ % 64 != 0 && !words_.empty()) words_.back() = (std::uint64_t{1} << (size_ % 64)) - 1;
}

std::size_t DynBits::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool DynBits::subset_of(const DynBits& other) const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if ((words_[k] & ~other.words_[k]) != 0) return false;
  }
  return true;
}

bool DynBits::intersects(const DynBits& other) const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if ((words_[k] & other.words_[k]) != 0) return true;
  }
  return false;
}

std::size_t DynBits::find_first() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return size_;
}

DynBits& DynBits::operator&=(const DynBits& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

std::size_t DynBits::hash() const noexcept {
  std::size_t h = size_;
  for (auto w : words_) h = h * 0x100000001B3ULL ^ std::hash<std::uint64_t>{}(w);
  return h;
}

bool is_partial_order(const std::vector<std::vector<bool>>& leq) {
  const auto m = leq.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (leq[i].size() != m || !leq[i][i]) return false;
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) return false;
      if (!leq[i][j]) continue;
      for (std::size_t k = 0; k < m; ++k) {
        if (leq[j][k] && !leq[i][k]) return false;
      }
    }
  }
  return true;
}

namespace {

// Positions of the elements in a linear extension (ascending number of
// elements below, ties by index).
std::vector<std::size_t> linear_extension(const std::vector<std::vector<bool>>& leq) {
  const auto m = leq.size();
  std::vector<std::size_t> below(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) below[j] += leq[i][j] ? 1 : 0;
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return below[a] < below[b]; });
  return order;
}

std::size_t first_member(const DynBits& bits) {
  const auto f = bits.find_first();
  return f == bits.size() ? static_cast<std::size_t>(-1) : f;
}

}  // namespace

void FiniteLattice::init_order(const std::vector<std::vector<bool>>& leq) {
  m_ = leq.size();
  if (m_ == 0) throw PreconditionError("lattice must be non-empty");
  if (m_ > 65535) throw CapExceeded("lattice size", 65535, m_);
  leq_.assign(m_ * m_, 0);
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < m_; ++j) leq_[i * m_ + j] = leq[i][j] ? 1 : 0;
  }
  bool found_bottom = false;
  bool found_top = false;
  for (std::size_t i = 0; i < m_; ++i) {
    bool is_bottom = true;
    bool is_top = true;
    for (std::size_t j = 0; j < m_; ++j) {
      is_bottom = is_bottom && leq[i][j];
      is_top = is_top && leq[j][i];
    }
    if (is_bottom) bottom_ = i, found_bottom = true;
    if (is_top) top_ = i, found_top = true;
  }
  if (!found_bottom || !found_top) throw PreconditionError("order has no least or greatest element");
}

void FiniteLattice::init_covers() {
  up_covers_.assign(m_, {});
  down_covers_.assign(m_, {});
  std::vector<DynBits> strict_up(m_, DynBits(m_));
  std::vector<DynBits> strict_down(m_, DynBits(m_));
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < m_; ++j) {
      if (lt(i, j)) {
        strict_up[i].set(j);
        strict_down[j].set(i);
      }
    }
  }
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < m_; ++j) {
      if (!lt(i, j)) continue;
      if (!strict_up[i].intersects(strict_down[j])) {
        up_covers_[i].push_back(j);
        down_covers_[j].push_back(i);
      }
    }
  }
  const auto order = linear_extension(order_matrix());
  height_.assign(m_, 0);
  for (auto j : order) {
    for (auto i : down_covers_[j]) height_[j] = std::max(height_[j], height_[i] + 1);
  }
}

std::vector<std::vector<bool>> FiniteLattice::order_matrix() const {
  std::vector<std::vector<bool>> out(m_, std::vector<bool>(m_));
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < m_; ++j) out[i][j] = leq(i, j);
  }
  return out;
}

FiniteLattice FiniteLattice::from_order(const std::vector<std::vector<bool>>& leq) {
  if (!is_partial_order(leq)) throw PreconditionError("relation is not a partial order");
  FiniteLattice l;
  l.init_order(leq);
  const auto m = l.m_;
  // Up-sets and down-sets with bits laid out in linear-extension order, so
  // the first member of a bound set is the only candidate for its least
  // element (and the last member for the greatest).
  const auto order = linear_extension(leq);
  std::vector<std::size_t> pos(m);
  for (std::size_t p = 0; p < m; ++p) pos[order[p]] = p;
  std::vector<DynBits> up(m, DynBits(m));
  std::vector<DynBits> down(m, DynBits(m));
  std::vector<DynBits> down_rev(m, DynBits(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (leq[i][j]) {
        up[i].set(pos[j]);
        down[j].set(pos[i]);
        down_rev[j].set(m - 1 - pos[i]);
      }
    }
  }
  l.join_.assign(m * m, 0);
  l.meet_.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const auto ub = up[i] & up[j];
      const auto first = first_member(ub);
      if (first == static_cast<std::size_t>(-1) || !ub.subset_of(up[order[first]])) {
        throw PreconditionError("order is not a lattice: missing join");
      }
      const auto lb_rev = down_rev[i] & down_rev[j];
      const auto last_rev = first_member(lb_rev);
      if (last_rev == static_cast<std::size_t>(-1)) throw PreconditionError("order is not a lattice: missing meet");
      const auto g = order[m - 1 - last_rev];
      if (!(down[i] & down[j]).subset_of(down[g])) throw PreconditionError("order is not a lattice: missing meet");
      const auto jn = static_cast<ElemIndex>(order[first]);
      const auto mt = static_cast<ElemIndex>(g);
      l.join_[i * m + j] = l.join_[j * m + i] = jn;
      l.meet_[i * m + j] = l.meet_[j * m + i] = mt;
    }
  }
  l.init_covers();
  return l;
}

FiniteLattice FiniteLattice::from_tables(const std::vector<std::vector<bool>>& leq, std::vector<ElemIndex> join,
                                         std::vector<ElemIndex> meet) {
  FiniteLattice l;
  l.init_order(leq);
  if (join.size() != l.m_ * l.m_ || meet.size() != l.m_ * l.m_) {
    throw PreconditionError("join/meet tables have the wrong size");
  }
  l.join_ = std::move(join);
  l.meet_ = std::move(meet);
  l.init_covers();
  return l;
}

bool FiniteLattice::is_distributive() const {
  for (std::size_t x = 0; x < m_; ++x) {
    for (std::size_t y = 0; y < m_; ++y) {
      for (std::size_t z = 0; z < m_; ++z) {
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return false;
      }
    }
  }
  return true;
}

bool FiniteLattice::is_sublattice(const std::vector<std::size_t>& subset) const {
  std::vector<bool> in(m_, false);
  for (auto i : subset) in[i] = true;
  for (auto i : subset) {
    for (auto j : subset) {
      if (!in[join(i, j)] || !in[meet(i, j)]) return false;
    }
  }
  return true;
}

bool is_antitone_involution(const FiniteLattice& l, const Involution& inv) {
  if (inv.map.size() != l.size()) return false;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (inv(i) >= l.size() || inv(inv(i)) != i) return false;
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (l.leq(i, j) && !l.leq(inv(j), inv(i))) return false;
    }
  }
  return true;
}

namespace {

struct Profile {
  std::size_t height;
  std::size_t ups;
  std::size_t downs;
  friend bool operator==(const Profile&, const Profile&) = default;
  friend auto operator<=>(const Profile&, const Profile&) = default;
};

std::vector<Profile> profiles(const FiniteLattice& l) {
  std::vector<Profile> out;
  for (std::size_t i = 0; i < l.size(); ++i) {
    out.push_back({l.height(i), l.upper_covers(i).size(), l.lower_covers(i).size()});
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const FiniteLattice& a, const FiniteLattice& b, const std::vector<std::optional<std::size_t>>& fixed)
      : a_(a), b_(b), fixed_(fixed), pa_(profiles(a)), pb_(profiles(b)) {
    order_ = linear_extension(a.order_matrix());
    // Pinned elements first so conflicts surface immediately.
    std::stable_partition(order_.begin(), order_.end(),
                          [&](std::size_t i) { return i < fixed_.size() && fixed_[i].has_value(); });
    map_.assign(a.size(), kUnset);
    used_.assign(b.size(), false);
  }

  std::optional<std::vector<std::size_t>> run() {
    auto sa = pa_;
    auto sb = pb_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
    if (assign(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool consistent(std::size_t x, std::size_t y, std::size_t depth) const {
    if (pa_[x] != pb_[y]) return false;
    for (std::size_t d = 0; d < depth; ++d) {
      const auto p = order_[d];
      const auto q = map_[p];
      if (a_.leq(p, x) != b_.leq(q, y) || a_.leq(x, p) != b_.leq(y, q)) return false;
    }
    return true;
  }

  bool assign(std::size_t depth) {
    if (depth == order_.size()) return true;
    const auto x = order_[depth];
    if (x < fixed_.size() && fixed_[x]) {
      const auto y = *fixed_[x];
      if (y >= b_.size() || used_[y] || !consistent(x, y, depth)) return false;
      return place(x, y, depth);
    }
    for (std::size_t y = 0; y < b_.size(); ++y) {
      if (used_[y] || !consistent(x, y, depth)) continue;
      if (place(x, y, depth)) return true;
    }
    return false;
  }

  bool place(std::size_t x, std::size_t y, std::size_t depth) {
    map_[x] = y;
    used_[y] = true;
    if (assign(depth + 1)) return true;
    map_[x] = kUnset;
    used_[y] = false;
    return false;
  }

  const FiniteLattice& a_;
  const FiniteLattice& b_;
  const std::vector<std::optional<std::size_t>>& fixed_;
  std::vector<Profile> pa_;
  std::vector<Profile> pb_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> lattice_isomorphic(const FiniteLattice& a, const FiniteLattice& b,
                                                           const std::vector<std::optional<std::size_t>>& fixed) {
  if (a.size() != b.size()) return std::nullopt;
  return IsoSearch(a, b, fixed).run();
}

}  // namespace roughdm
