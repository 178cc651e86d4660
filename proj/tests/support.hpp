#pragma once

#include <string>
#include <vector>

#include "oracles.hpp"
#include "roughdm/approximation.hpp"
#include "roughdm/rough_structures.hpp"

namespace testing_support {

inline oracle::Matrix to_matrix(const roughdm::Relation& r) {
  oracle::Matrix m(r.size(), std::vector<bool>(r.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) m[i][j] = r.related(i, j);
  return m;
}

inline roughdm::Relation from_matrix(const oracle::Matrix& m) {
  auto u = roughdm::Universe::letters(m.size());
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j]) pairs.emplace_back(i, j);
  return roughdm::Relation::from_pairs(u, pairs);
}

inline oracle::Pair to_pair(const roughdm::RoughPair& p) { return {p.lower.bits(), p.upper.bits()}; }

// "(a,ab)" style, with ∅ for the empty set.
inline roughdm::RoughPair pair(const roughdm::Universe& u, const std::string& lower, const std::string& upper) {
  return {u.parse(lower), u.parse(upper)};
}

}  // namespace testing_support
