#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "roughdm/relation.hpp"

namespace roughdm {

/// Named fixtures shared by tests, the suite and the CLI.
///   fix1: a→{a,b}, b→{b,c}, c→{c}
///   fix2: five-element tolerance 1..5 with R(i) = {i-1, i, i+1}
///   fix3: quasiorder a→{a,b}, b→{b}, c→{c}
///   fix4: equivalence with classes {a,b}, {c}
Relation fixture_1();
Relation fixture_2();
Relation fixture_3();
Relation fixture_4();
/// "fix1".."fix4"; throws PreconditionError for other names.
Relation fixture(const std::string& name);

enum class RelationFilter { any, tolerance, quasiorder, equivalence };

RelationFilter parse_filter(const std::string& name);
std::string filter_name(RelationFilter f);
bool passes_filter(const Relation& r, RelationFilter f);

inline constexpr std::size_t kExhaustiveLimit = 4;

/// All reflexive relations on n letters in ascending order of their
/// off-diagonal bit pattern (row-major, diagonal skipped). Throws
/// CapExceeded above n = 4.
std::vector<Relation> enumerate_reflexive_relations(std::size_t n, RelationFilter filter = RelationFilter::any);

/// Reflexive relation from an off-diagonal bit pattern.
Relation reflexive_relation_from_bits(std::size_t n, std::uint64_t bits);

/// `count` seeded samples on n letters, rejecting those outside the filter.
std::vector<Relation> sample_reflexive_relations(std::size_t n, std::size_t count, std::uint64_t seed,
                                                 RelationFilter filter = RelationFilter::any);

/// One suite assertion. A failed check always carries a witness in terms
/// of labelled elements, pairs or sets.
struct CheckResult {
  std::string id;
  bool applicable = true;
  bool passed = true;
  std::string witness;
};

/// A predicted non-theorem observed on the instance (for example an
/// identity that does not hold in general); never a violation.
struct Finding {
  std::string id;
  std::string detail;
};

struct TheoremSuiteReport {
  std::string relation;  // neighbourhood descriptor "a:ab b:bc c:c"
  std::vector<std::string> classes;  // classification flags that hold
  std::size_t rs_size = 0;
  std::size_t dm_size = 0;
  std::vector<CheckResult> checks;
  std::vector<Finding> findings;
  double elapsed_ms = 0.0;

  std::size_t violations() const;
  bool passed() const { return violations() == 0; }
};

struct SuiteEntry {
  std::string id;
  std::string claim;
};

/// Every check id the suite can emit, with the claim it asserts.
const std::vector<SuiteEntry>& suite_catalogue();
/// Every finding id the suite can emit.
const std::vector<SuiteEntry>& finding_catalogue();

/// Runs every check on one reflexive relation; throws PreconditionError for
/// a non-reflexive input.
TheoremSuiteReport run_theorem_suite(const Relation& r);

/// "a:ab b:bc c:c".
std::string describe_relation(const Relation& r);

enum class MineMode { exhaustive, sample };

struct MineOptions {
  std::size_t n = 3;
  MineMode mode = MineMode::exhaustive;
  std::size_t count = 0;
  std::uint64_t seed = 1;
  RelationFilter filter = RelationFilter::any;
  std::size_t jobs = 1;
};

/// Reports in enumeration order regardless of `jobs`.
std::vector<TheoremSuiteReport> mine(const MineOptions& options);

}  // namespace roughdm
