#pragma once

// Brute-force reference implementations used only by the tests. They work
// on raw bitmasks and boolean matrices straight from the definitions and do
// not call into the library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;
using Matrix = std::vector<std::vector<bool>>;

inline Mask full(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline bool in(Mask s, int i) { return (s >> i) & 1U; }

inline Matrix transpose(const Matrix& r) {
  const int n = static_cast<int>(r.size());
  Matrix t(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[j][i] = r[i][j];
  return t;
}

inline Mask row(const Matrix& r, int x) {
  Mask m = 0;
  for (int y = 0; y < static_cast<int>(r.size()); ++y)
    if (r[x][y]) m |= Mask{1} << y;
  return m;
}

// {x : R(x) ⊆ X}
inline Mask lower(const Matrix& r, Mask x) {
  Mask out = 0;
  for (int i = 0; i < static_cast<int>(r.size()); ++i) {
    bool all = true;
    for (int j = 0; j < static_cast<int>(r.size()); ++j)
      if (r[i][j] && !in(x, j)) all = false;
    if (all) out |= Mask{1} << i;
  }
  return out;
}

// {x : R(x) ∩ X ≠ ∅}
inline Mask upper(const Matrix& r, Mask x) {
  Mask out = 0;
  for (int i = 0; i < static_cast<int>(r.size()); ++i) {
    for (int j = 0; j < static_cast<int>(r.size()); ++j) {
      if (r[i][j] && in(x, j)) {
        out |= Mask{1} << i;
        break;
      }
    }
  }
  return out;
}

using Pair = std::pair<Mask, Mask>;

inline std::set<Pair> rough_sets(const Matrix& r) {
  std::set<Pair> out;
  const int n = static_cast<int>(r.size());
  for (Mask x = 0; x <= full(n); ++x) out.insert({lower(r, x), upper(r, x)});
  return out;
}

inline bool pair_leq(const Pair& a, const Pair& b) {
  return (a.first & ~b.first) == 0 && (a.second & ~b.second) == 0;
}

inline Pair neg(const Pair& p, int n) { return {~p.second & full(n), ~p.first & full(n)}; }

inline bool reflexive(const Matrix& r) {
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!r[i][i]) return false;
  return true;
}
inline bool symmetric(const Matrix& r) {
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[i][j] != r[j][i]) return false;
  return true;
}
inline bool transitive(const Matrix& r) {
  const auto n = r.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (r[i][j] && r[j][k] && !r[i][k]) return false;
  return true;
}

// Warshall over R ∪ R⁻¹.
inline Matrix equivalence_closure(const Matrix& r) {
  const auto n = r.size();
  Matrix e(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i][j] = r[i][j] || r[j][i] || i == j;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (e[i][k] && e[k][j]) e[i][j] = true;
  return e;
}

// Reflexive relation on n points from a row-major off-diagonal bit pattern.
inline Matrix from_bits(int n, Mask bits) {
  Matrix r(n, std::vector<bool>(n));
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        r[i][j] = true;
        continue;
      }
      r[i][j] = (bits >> k) & 1U;
      ++k;
    }
  }
  return r;
}

inline Matrix random_reflexive(int n, std::mt19937_64& rng, double density = 0.35) {
  std::bernoulli_distribution coin(density);
  Matrix r(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i][j] = i == j || coin(rng);
  return r;
}

inline Matrix random_equivalence(int n, std::mt19937_64& rng) {
  std::vector<int> block(n);
  for (int i = 0; i < n; ++i) block[i] = std::uniform_int_distribution<int>(0, i)(rng);
  Matrix r(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i][j] = block[i] == block[j];
  return r;
}

// Order on an explicit list of elements.
template <class T, class Leq>
Matrix order_of(const std::vector<T>& xs, Leq leq) {
  Matrix m(xs.size(), std::vector<bool>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) m[i][j] = leq(xs[i], xs[j]);
  return m;
}

// Least upper bound by scanning all upper bounds; -1 when there is none.
inline int order_join(const Matrix& leq, int a, int b) {
  const int n = static_cast<int>(leq.size());
  for (int c = 0; c < n; ++c) {
    if (!leq[a][c] || !leq[b][c]) continue;
    bool least = true;
    for (int d = 0; d < n; ++d)
      if (leq[a][d] && leq[b][d] && !leq[c][d]) least = false;
    if (least) return c;
  }
  return -1;
}

inline int order_meet(const Matrix& leq, int a, int b) {
  const int n = static_cast<int>(leq.size());
  for (int c = 0; c < n; ++c) {
    if (!leq[c][a] || !leq[c][b]) continue;
    bool greatest = true;
    for (int d = 0; d < n; ++d)
      if (leq[d][a] && leq[d][b] && !leq[d][c]) greatest = false;
    if (greatest) return c;
  }
  return -1;
}

// Normal cuts of a poset with at most 26 elements: every cut is the set of
// common lower bounds of some subset, so take the lower-bound set of all
// 2^n subsets (incremental AND over the lowest bit).
inline std::set<Mask> normal_cuts(const Matrix& leq) {
  const int n = static_cast<int>(leq.size());
  std::vector<Mask> down(n, 0);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      if (leq[x][y]) down[y] |= Mask{1} << x;
  std::vector<Mask> lb(std::size_t{1} << n);
  lb[0] = full(n);
  std::set<Mask> cuts{lb[0]};
  for (std::size_t s = 1; s < lb.size(); ++s) {
    const int low = __builtin_ctzll(s);
    lb[s] = lb[s & (s - 1)] & down[low];
    cuts.insert(lb[s]);
  }
  return cuts;
}

}  // namespace oracle
