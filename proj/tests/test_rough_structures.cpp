#include <doctest.h>

#include <random>

#include "roughdm/errors.hpp"
#include "roughdm/harness.hpp"
#include "roughdm/rough_structures.hpp"
#include "support.hpp"

using namespace roughdm;
using testing_support::from_matrix;
using testing_support::pair;
using testing_support::to_pair;

namespace {

std::set<oracle::Pair> as_set(const RSFamily& rs) {
  std::set<oracle::Pair> out;
  for (const auto& p : rs.pairs()) out.insert(to_pair(p));
  return out;
}

bool oracle_is_lattice(const std::set<oracle::Pair>& rs) {
  std::vector<oracle::Pair> xs(rs.begin(), rs.end());
  const auto leq = oracle::order_of(xs, oracle::pair_leq);
  for (int a = 0; a < static_cast<int>(xs.size()); ++a)
    for (int b = 0; b < static_cast<int>(xs.size()); ++b)
      if (oracle::order_join(leq, a, b) < 0 || oracle::order_meet(leq, a, b) < 0) return false;
  return true;
}

}  // namespace

TEST_CASE("RS matches the brute-force family on every reflexive relation over three points") {
  for (oracle::Mask bits = 0; bits < 64; ++bits) {
    const auto m = oracle::from_bits(3, bits);
    const auto rs = build_rs(ApproxSpace(from_matrix(m)));
    CHECK(as_set(rs) == oracle::rough_sets(m));
    CHECK(rs_is_lattice(rs).is_lattice == oracle_is_lattice(oracle::rough_sets(m)));
  }
}

TEST_CASE("RS matches the brute-force family on random relations up to six points") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto m = oracle::random_reflexive(n, rng);
    const auto rs = build_rs(ApproxSpace(from_matrix(m)));
    const auto expected = oracle::rough_sets(m);
    REQUIRE(as_set(rs) == expected);
    for (std::size_t i = 0; i + 1 < rs.size(); ++i) CHECK(canonical_less(rs.pairs()[i], rs.pairs()[i + 1]));
    for (const auto& p : expected) CHECK(expected.count(oracle::neg(p, n)) == 1);
  }
}

TEST_CASE("quasiorder fixture lists eight pairs in canonical order") {
  const auto rs = build_rs(ApproxSpace(fixture_3()));
  const auto r = fixture_3();
  const auto& u = r.universe();
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"∅", "∅"}, {"∅", "a"}, {"c", "c"}, {"b", "ab"}, {"ab", "ab"}, {"c", "ac"}, {"bc", "abc"}, {"abc", "abc"}};
  REQUIRE(rs.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(rs.pairs()[i] == pair(u, expected[i].first, expected[i].second));
  }
  CHECK(rs_is_lattice(rs).is_lattice);
}

TEST_CASE("fix1 has eight rough sets") {
  const auto rs = build_rs(ApproxSpace(fixture_1()));
  const auto r = fixture_1();
  const auto& u = r.universe();
  CHECK(rs.size() == 8);
  for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{
           {"∅", "∅"}, {"∅", "a"}, {"c", "bc"}, {"∅", "ab"}, {"c", "abc"}, {"a", "ab"}, {"bc", "abc"}, {"abc", "abc"}}) {
    CHECK(rs.contains(pair(u, a, b)));
  }
}

TEST_CASE("five-element tolerance: RS is not a lattice") {
  const auto rs = build_rs(ApproxSpace(fixture_2()));
  CHECK(rs.size() == 23);
  const auto lc = rs_is_lattice(rs);
  REQUIRE_FALSE(lc.is_lattice);
  REQUIRE(lc.witness);
  const auto& w = *lc.witness;
  CHECK(w.extremal_bounds.size() >= 2);
  // the witness is replayable: every listed bound is a bound of the pair
  for (auto b : w.extremal_bounds) {
    if (w.missing == "join") {
      CHECK(rs.leq(w.first, b));
      CHECK(rs.leq(w.second, b));
    } else {
      CHECK(rs.leq(b, w.first));
      CHECK(rs.leq(b, w.second));
    }
  }
  CHECK_FALSE(oracle_is_lattice(as_set(rs)));
}

TEST_CASE("exact family equals pairs of unions of closure classes") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto m = oracle::random_reflexive(n, rng, 0.2);
    const auto e = oracle::equivalence_closure(m);
    std::set<oracle::Pair> expected;
    for (oracle::Mask x = 0; x <= oracle::full(n); ++x) {
      bool saturated = true;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (e[i][j] && oracle::in(x, i) && !oracle::in(x, j)) saturated = false;
      if (saturated) expected.insert({x, x});
    }
    std::set<oracle::Pair> got;
    for (const auto& p : exact_family(ApproxSpace(from_matrix(m)))) got.insert(to_pair(p));
    CHECK(got == expected);
  }
}

TEST_CASE("the A family: sets fixed by both inverse operators' images") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto m = oracle::random_reflexive(n, rng);
    const auto mt = oracle::transpose(m);
    std::set<oracle::Mask> lower_img, upper_img;
    for (oracle::Mask x = 0; x <= oracle::full(n); ++x) {
      lower_img.insert(oracle::lower(mt, x));
      upper_img.insert(oracle::upper(mt, x));
    }
    std::vector<oracle::Mask> expected;
    for (auto z : lower_img)
      if (upper_img.count(z)) expected.push_back(z);
    std::vector<oracle::Mask> got;
    for (const auto& z : build_A_family(ApproxSpace(from_matrix(m))).sets) got.push_back(z.bits());
    CHECK(got == expected);
  }
}

TEST_CASE("the universe cap is enforced") {
  const ApproxSpace sp(Relation::identity(Universe::letters(5)));
  CHECK_THROWS_AS(build_rs(sp, 4), CapExceeded);
  CHECK_NOTHROW(build_rs(sp, 5));
}

TEST_CASE("kleene negation and canonical order") {
  auto u = Universe::letters(3);
  CHECK(kleene_neg(pair(*u, "a", "ab")) == pair(*u, "c", "bc"));
  CHECK(kleene_neg(kleene_neg(pair(*u, "∅", "a"))) == pair(*u, "∅", "a"));
  CHECK(canonical_less(pair(*u, "∅", "c"), pair(*u, "∅", "ab")));
  CHECK(format_pair(*u, pair(*u, "∅", "ab")) == "(∅,ab)");
}
