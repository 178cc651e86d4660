#include <doctest.h>

#include <map>
#include <set>

#include "roughdm/errors.hpp"
#include "roughdm/harness.hpp"
#include "support.hpp"

using namespace roughdm;

namespace {

bool has_finding(const TheoremSuiteReport& r, const std::string& id) {
  return std::any_of(r.findings.begin(), r.findings.end(), [&](const Finding& f) { return f.id == id; });
}

}  // namespace

TEST_CASE("enumeration counts") {
  CHECK(enumerate_reflexive_relations(1).size() == 1);
  CHECK(enumerate_reflexive_relations(2).size() == 4);
  CHECK(enumerate_reflexive_relations(3).size() == 64);
  CHECK(enumerate_reflexive_relations(4).size() == 4096);
  CHECK_THROWS_AS(enumerate_reflexive_relations(5), CapExceeded);
}

TEST_CASE("enumeration is deterministic and duplicate-free") {
  const auto a = enumerate_reflexive_relations(3);
  const auto b = enumerate_reflexive_relations(3);
  REQUIRE(a.size() == b.size());
  std::set<std::string> seen;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    CHECK(seen.insert(describe_relation(a[i])).second);
  }
  CHECK(describe_relation(a.front()) == "a:a b:b c:c");
}

TEST_CASE("filters keep exactly the matching classes") {
  for (auto f : {RelationFilter::tolerance, RelationFilter::quasiorder, RelationFilter::equivalence}) {
    std::size_t expected = 0;
    for (oracle::Mask bits = 0; bits < 4096; ++bits) {
      const auto m = oracle::from_bits(4, bits);
      const bool sym = oracle::symmetric(m);
      const bool trans = oracle::transitive(m);
      if ((f == RelationFilter::tolerance && sym) || (f == RelationFilter::quasiorder && trans) ||
          (f == RelationFilter::equivalence && sym && trans)) {
        ++expected;
      }
    }
    CHECK(enumerate_reflexive_relations(4, f).size() == expected);
  }
  // 15 partitions of four points, 355 quasiorders, 64 tolerances
  CHECK(enumerate_reflexive_relations(4, RelationFilter::equivalence).size() == 15);
  CHECK(enumerate_reflexive_relations(4, RelationFilter::quasiorder).size() == 355);
  CHECK(enumerate_reflexive_relations(4, RelationFilter::tolerance).size() == 64);
  CHECK(parse_filter("quasiorder") == RelationFilter::quasiorder);
  CHECK_THROWS_AS(parse_filter("lattice"), ParseError);
}

TEST_CASE("seeded samples are reproducible and respect filters") {
  const auto a = sample_reflexive_relations(5, 50, 7);
  const auto b = sample_reflexive_relations(5, 50, 7);
  const auto c = sample_reflexive_relations(5, 50, 8);
  REQUIRE(a.size() == 50);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    differs = differs || !(a[i] == c[i]);
  }
  CHECK(differs);
  for (const auto& r : sample_reflexive_relations(5, 20, 3, RelationFilter::tolerance)) CHECK(classify(r).tolerance);
}

TEST_CASE("fixtures pass the suite with the expected findings") {
  const auto r1 = run_theorem_suite(fixture_1());
  CHECK(r1.passed());
  CHECK(r1.rs_size == 8);
  CHECK(has_finding(r1, "kleene.chajda"));
  CHECK_FALSE(has_finding(r1, "kleene.c_not_sublattice"));

  const auto r2 = run_theorem_suite(fixture_2());
  CHECK(r2.passed());
  CHECK(r2.dm_size - r2.rs_size == 2);
  CHECK(has_finding(r2, "kleene.c_not_sublattice"));

  const auto r3 = run_theorem_suite(fixture_3());
  CHECK(r3.passed());
  CHECK(has_finding(r3, "bz.stone_composition"));

  CHECK(run_theorem_suite(fixture_4()).passed());
}

TEST_CASE("every catalogued check is emitted once, in catalogue order") {
  const auto& cat = suite_catalogue();
  for (auto name : {"fix1", "fix2", "fix3", "fix4"}) {
    const auto r = run_theorem_suite(fixture(name));
    REQUIRE(r.checks.size() == cat.size());
    for (std::size_t i = 0; i < cat.size(); ++i) CHECK(r.checks[i].id == cat[i].id);
    for (const auto& f : r.findings) {
      CHECK(std::any_of(finding_catalogue().begin(), finding_catalogue().end(),
                        [&](const SuiteEntry& e) { return e.id == f.id; }));
    }
  }
}

TEST_CASE("every class-restricted check applies somewhere on three points") {
  std::map<std::string, bool> applied;
  for (const auto& r : mine(MineOptions{3, MineMode::exhaustive, 0, 1, RelationFilter::any, 1})) {
    for (const auto& c : r.checks) applied[c.id] = applied[c.id] || c.applicable;
  }
  for (const auto& e : suite_catalogue()) {
    if (e.id == "bz.kleene_stone") continue;  // checked below on four points
    CHECK_MESSAGE(applied[e.id], e.id);
  }
  bool stone = false;
  for (const auto& r : mine(MineOptions{4, MineMode::exhaustive, 0, 1, RelationFilter::quasiorder, 2})) {
    for (const auto& c : r.checks) stone = stone || (c.id == "bz.kleene_stone" && c.applicable);
  }
  CHECK(stone);
}

TEST_CASE("failed checks carry witnesses") {
  for (const auto& r : mine(MineOptions{3, MineMode::exhaustive, 0, 1, RelationFilter::any, 2})) {
    for (const auto& c : r.checks) {
      if (c.applicable && !c.passed) CHECK_FALSE(c.witness.empty());
    }
  }
}

TEST_CASE("the suite rejects non-reflexive input") {
  auto u = Universe::letters(2);
  CHECK_THROWS_AS(run_theorem_suite(Relation::from_pairs(u, {{0, 1}})), PreconditionError);
}

TEST_CASE("mining merges worker results in enumeration order") {
  MineOptions one{3, MineMode::exhaustive, 0, 1, RelationFilter::any, 1};
  MineOptions many = one;
  many.jobs = 5;
  const auto a = mine(one);
  const auto b = mine(many);
  REQUIRE(a.size() == 64);
  REQUIRE(b.size() == 64);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].relation == b[i].relation);
    CHECK(a[i].violations() == b[i].violations());
    CHECK(a[i].findings.size() == b[i].findings.size());
  }
  MineOptions s{5, MineMode::sample, 40, 1, RelationFilter::any, 3};
  const auto x = mine(s);
  s.jobs = 1;
  const auto y = mine(s);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(x[i].relation == y[i].relation);
}
