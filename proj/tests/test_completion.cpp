#include <doctest.h>

#include <random>

#include "roughdm/completion.hpp"
#include "roughdm/errors.hpp"
#include "roughdm/harness.hpp"
#include "support.hpp"

using namespace roughdm;
using testing_support::from_matrix;
using testing_support::pair;
using testing_support::to_pair;

namespace {

// DM(RS) against the normal cuts of RS computed by brute force: the map
// d ↦ {r ∈ RS : r ≤ d} must be an order-isomorphism onto the cuts and send
// each rough set to its principal cut.
void check_against_cuts(const Relation& r) {
  const ApproxSpace sp(r);
  const auto rs = build_rs(sp);
  const auto dm = build_dm(sp);
  REQUIRE(rs.size() <= 23);
  const auto cuts = oracle::normal_cuts(rs.order_matrix());
  REQUIRE(cuts.size() == dm.size());
  std::vector<oracle::Mask> image(dm.size());
  std::set<oracle::Mask> seen;
  for (std::size_t d = 0; d < dm.size(); ++d) {
    oracle::Mask cut = 0;
    for (std::size_t k = 0; k < rs.size(); ++k)
      if (rs.pairs()[k].leq(dm.element(d))) cut |= oracle::Mask{1} << k;
    image[d] = cut;
    CHECK(cuts.count(cut) == 1);
    seen.insert(cut);
  }
  CHECK(seen.size() == dm.size());
  for (std::size_t a = 0; a < dm.size(); ++a)
    for (std::size_t b = 0; b < dm.size(); ++b)
      CHECK(dm.lattice().leq(a, b) == ((image[a] & ~image[b]) == 0));
  for (std::size_t k = 0; k < rs.size(); ++k) {
    auto d = dm.find(rs.pairs()[k]);
    REQUIRE(d);
    CHECK(dm.in_rs(*d));
    oracle::Mask principal = 0;
    for (std::size_t j = 0; j < rs.size(); ++j)
      if (rs.leq(j, k)) principal |= oracle::Mask{1} << j;
    CHECK(image[*d] == principal);
  }
}

}  // namespace

TEST_CASE("completion equals the brute-force cut lattice on all relations over three points") {
  for (oracle::Mask bits = 0; bits < 64; ++bits) check_against_cuts(from_matrix(oracle::from_bits(3, bits)));
}

TEST_CASE("completion equals the brute-force cut lattice on random four-point relations") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 200; ++trial) check_against_cuts(from_matrix(oracle::random_reflexive(4, rng)));
}

TEST_CASE("completion equals the brute-force cut lattice on the five-element tolerance") {
  check_against_cuts(fixture_2());
}

TEST_CASE("five-element tolerance gains exactly two pairs") {
  const auto dm = build_dm(ApproxSpace(fixture_2()));
  const auto r = fixture_2();
  const auto& u = r.universe();
  CHECK(dm.size() == 25);
  CHECK(dm.rs_count() == 23);
  std::vector<RoughPair> added;
  for (std::size_t i = 0; i < dm.size(); ++i)
    if (!dm.in_rs(i)) added.push_back(dm.element(i));
  REQUIRE(added.size() == 2);
  CHECK(std::find(added.begin(), added.end(), pair(u, "1", "1,2,3,4")) != added.end());
  CHECK(std::find(added.begin(), added.end(), pair(u, "5", "2,3,4,5")) != added.end());
}

TEST_CASE("formula joins and meets are the order's bounds") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const ApproxSpace sp(from_matrix(oracle::random_reflexive(n, rng)));
    const auto dm = build_dm(sp);
    std::vector<oracle::Pair> xs;
    for (const auto& p : dm.elements()) xs.push_back(to_pair(p));
    const auto leq = oracle::order_of(xs, oracle::pair_leq);
    for (std::size_t a = 0; a < xs.size(); ++a) {
      for (std::size_t b = 0; b < xs.size(); ++b) {
        CHECK(dm.lattice().join(a, b) == static_cast<std::size_t>(oracle::order_join(leq, a, b)));
        CHECK(dm.lattice().meet(a, b) == static_cast<std::size_t>(oracle::order_meet(leq, a, b)));
        CHECK(dm_join(sp, dm.element(a), dm.element(b)) == dm.element(dm.lattice().join(a, b)));
      }
    }
  }
}

TEST_CASE("membership conditions are reported one by one") {
  const ApproxSpace sp(fixture_1());
  const auto& u = sp.universe();
  const auto ok = dm_conditions(sp, u.parse("a"), u.parse("ab"));
  CHECK(ok.all());
  // (∅,c) violates the singleton condition: c is a singleton neighbourhood
  const auto bad = dm_conditions(sp, u.parse("∅"), u.parse("c"));
  CHECK_FALSE(bad.singleton_agree);
  CHECK_FALSE(dm_membership(sp, u.parse("∅"), u.parse("c")));
}

TEST_CASE("library oracle agrees on the fixtures") {
  for (auto name : {"fix1", "fix2", "fix3", "fix4"}) {
    const ApproxSpace sp(fixture(name));
    const auto dm = build_dm(sp);
    const auto rs = build_rs(sp);
    const auto cmp = compare_with_oracle(dm, rs);
    CHECK(cmp.isomorphic);
    CHECK(cmp.mapping.size() == dm.size());
  }
}

TEST_CASE("negation is an antitone involution on the completion") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const auto dm = build_dm(ApproxSpace(from_matrix(oracle::random_reflexive(n, rng))));
    CHECK(is_antitone_involution(dm.lattice(), dm.involution()));
    for (std::size_t i = 0; i < dm.size(); ++i) CHECK(dm.element(dm.involution()(i)) == kleene_neg(dm.element(i)));
  }
}

TEST_CASE("completion cap") {
  CHECK_THROWS_AS(build_dm(ApproxSpace(Relation::identity(Universe::letters(6))), 5), CapExceeded);
}
