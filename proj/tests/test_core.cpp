#include <doctest.h>

#include <random>

#include "roughdm/errors.hpp"
#include "roughdm/relation.hpp"
#include "support.hpp"

using namespace roughdm;
using testing_support::from_matrix;
using testing_support::to_matrix;

TEST_CASE("subset algebra") {
  auto u = Universe::letters(4);
  const auto ab = u->parse("ab");
  const auto bc = u->parse("bc");
  CHECK((ab & bc) == u->parse("b"));
  CHECK((ab | bc) == u->parse("abc"));
  CHECK((ab - bc) == u->parse("a"));
  CHECK(ab.complement() == u->parse("cd"));
  CHECK(ab.size() == 2);
  CHECK(u->parse("b").subset_of(ab));
  CHECK_FALSE(ab.subset_of(bc));
  CHECK(ab.members() == std::vector<std::size_t>{0, 1});
  CHECK(u->parse("∅").is_empty());
  CHECK(u->format(u->empty_set()) == "∅");
  CHECK(u->format(u->parse("dba")) == "abd");
}

TEST_CASE("subsets of different universes do not mix") {
  auto u3 = Universe::letters(3);
  auto u4 = Universe::letters(4);
  CHECK_THROWS_AS((void)(u3->parse("a") | u4->parse("a")), UniverseMismatch);
  CHECK_THROWS_AS((void)u3->parse("a").subset_of(u4->parse("ab")), UniverseMismatch);
}

TEST_CASE("multi-character labels") {
  auto u = Universe::numbered(12);
  const auto s = u->parse("1,10,12");
  CHECK(s.size() == 3);
  CHECK(u->format(s) == "1,10,12");
  CHECK_THROWS_AS(u->parse("1,13"), ParseError);
  CHECK(u->labels_of(s) == std::vector<std::string>{"1", "10", "12"});
}

TEST_CASE("classify agrees with the definitions on every relation over three points") {
  for (oracle::Mask bits = 0; bits < (oracle::Mask{1} << 9); ++bits) {
    oracle::Matrix m(3, std::vector<bool>(3));
    for (int k = 0; k < 9; ++k) m[k / 3][k % 3] = (bits >> k) & 1U;
    const auto f = classify(from_matrix(m));
    const bool refl = oracle::reflexive(m);
    const bool sym = oracle::symmetric(m);
    const bool trans = oracle::transitive(m);
    CHECK(f.reflexive == refl);
    CHECK(f.symmetric == sym);
    CHECK(f.transitive == trans);
    CHECK(f.tolerance == (refl && sym));
    CHECK(f.quasiorder == (refl && trans));
    CHECK(f.equivalence == (refl && sym && trans));
    bool left = true, right = true;
    for (int i = 0; i < 3; ++i) {
      bool row = false, col = false;
      for (int j = 0; j < 3; ++j) {
        row = row || m[i][j];
        col = col || m[j][i];
      }
      left = left && row;
      right = right && col;
    }
    CHECK(f.left_total == left);
    CHECK(f.right_total == right);
  }
}

TEST_CASE("classify agrees with the definitions on all reflexive relations over four points") {
  for (oracle::Mask bits = 0; bits < (oracle::Mask{1} << 12); ++bits) {
    const auto m = oracle::from_bits(4, bits);
    const auto f = classify(from_matrix(m));
    REQUIRE(f.symmetric == oracle::symmetric(m));
    REQUIRE(f.transitive == oracle::transitive(m));
  }
}

TEST_CASE("equivalence closure matches Warshall on random relations") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const auto m = oracle::random_reflexive(n, rng, 0.25);
    const auto e = equivalence_closure(from_matrix(m));
    CHECK(to_matrix(e) == oracle::equivalence_closure(m));
    CHECK(classify(e).equivalence);
  }
}

TEST_CASE("composition and inverse") {
  auto u = Universe::letters(3);
  const auto r = Relation::from_pairs(u, {{0, 1}, {1, 2}});
  const auto rr = relation_compose(r, r);
  CHECK(rr.related(0, 2));
  CHECK_FALSE(rr.related(0, 1));
  const auto inv = relation_inverse(r);
  CHECK(inv.related(1, 0));
  CHECK(inv.related(2, 1));
  // (x,z) when some y has y R x and y R z
  const auto c = relation_compose(inv, r);
  CHECK(c.related(1, 1));
  CHECK(c.related(2, 2));
  CHECK_FALSE(c.related(0, 0));
  CHECK(transitive_closure(r).related(0, 2));
}

TEST_CASE("composition matches the brute-force definition") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto a = oracle::random_reflexive(n, rng);
    const auto b = oracle::random_reflexive(n, rng);
    const auto c = to_matrix(relation_compose(from_matrix(a), from_matrix(b)));
    for (int x = 0; x < n; ++x) {
      for (int z = 0; z < n; ++z) {
        bool expect = false;
        for (int y = 0; y < n; ++y) expect = expect || (a[x][y] && b[y][z]);
        CHECK(c[x][z] == expect);
      }
    }
  }
}

TEST_CASE("equivalence classes partition the universe and define saturation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto e = from_matrix(oracle::random_equivalence(n, rng));
    const auto p = equivalence_classes(e);
    Subset seen = e.universe().empty_set();
    for (const auto& b : p.blocks()) {
      CHECK_FALSE(b.intersects(seen));
      seen = seen | b;
    }
    CHECK(seen.is_full());
    CHECK(p.to_relation() == e);
    for (oracle::Mask x = 0; x <= oracle::full(n); ++x) {
      const Subset s(n, x);
      Subset hull = e.universe().empty_set();
      for (const auto& b : p.blocks())
        if (b.intersects(s)) hull = hull | b;
      CHECK(is_saturated(e, s) == (hull == s));
    }
  }
}

TEST_CASE("partitions validate their blocks") {
  auto u = Universe::letters(3);
  CHECK_THROWS_AS(Partition(u, {u->parse("ab"), u->parse("bc")}), PreconditionError);
  CHECK_THROWS_AS(Partition(u, {u->parse("ab")}), PreconditionError);
  const Partition p(u, {u->parse("c"), u->parse("ab")});
  CHECK(p.blocks().front() == u->parse("ab"));
  CHECK(p.block_of(2) == u->parse("c"));
}

TEST_CASE("require helpers reject outside the domain") {
  auto u = Universe::letters(2);
  const auto r = Relation::from_pairs(u, {{0, 1}});
  CHECK_THROWS_AS(require_reflexive(r), PreconditionError);
  CHECK_THROWS_AS(require_equivalence(Relation::from_pairs(u, {{0, 0}, {1, 1}, {0, 1}})), PreconditionError);
  CHECK_NOTHROW(require_equivalence(Relation::full(u)));
}

TEST_CASE("irredundant covering tolerances") {
  auto u = Universe::letters(3);
  // blocks {a,b} and {b,c}: neither removable
  const auto path = Relation::from_pairs(u, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}, {1, 2}, {2, 1}});
  CHECK(is_irredundant_covering_tolerance(path));
  CHECK(is_irredundant_covering_tolerance(Relation::full(u)));
  // not symmetric
  CHECK_FALSE(is_irredundant_covering_tolerance(Relation::from_pairs(u, {{0, 0}, {1, 1}, {2, 2}, {0, 1}})));
  // 4-cycle: no neighbourhood is a block
  auto u4 = Universe::letters(4);
  std::vector<std::pair<std::size_t, std::size_t>> cycle;
  for (std::size_t i = 0; i < 4; ++i) {
    cycle.emplace_back(i, i);
    cycle.emplace_back(i, (i + 1) % 4);
    cycle.emplace_back((i + 1) % 4, i);
  }
  CHECK_FALSE(is_irredundant_covering_tolerance(Relation::from_pairs(u4, cycle)));
}
