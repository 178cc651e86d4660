#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "roughdm/brouwer_zadeh.hpp"
#include "roughdm/completion.hpp"
#include "roughdm/harness.hpp"
#include "roughdm/relation.hpp"

namespace roughdm {

inline constexpr const char* kToolVersion = "1.0.0";

using ReportDocument = nlohmann::ordered_json;

/// Input format:
///   {"universe": ["a","b","c"],
///    "pairs": [["a","b"], ...]            -- or --
///    "neighborhoods": {"a": ["a","b"], ...},
///    "closures": {"reflexive": true}}     -- optional
struct RelationDocument {
  std::vector<std::string> universe;
  std::optional<std::vector<std::pair<std::string, std::string>>> pairs;
  /// In document order; labels without an entry have an empty neighbourhood.
  std::optional<std::vector<std::pair<std::string, std::vector<std::string>>>> neighborhoods;
  std::optional<bool> reflexive_closure;

  friend bool operator==(const RelationDocument&, const RelationDocument&) = default;
};

/// Throws ParseError naming the offending field (and JSON line/column for
/// syntax errors).
RelationDocument parse_relation_document(const std::string& text);
ReportDocument relation_document_json(const RelationDocument& doc);
std::string serialize_relation_document(const RelationDocument& doc);

/// Resolves labels, drops duplicate pairs and applies the closure.
Relation to_relation(const RelationDocument& doc);
/// Neighbourhood form of a relation.
RelationDocument document_from_relation(const Relation& r);

ReportDocument parse_report(const std::string& text);
std::string serialize_report(const ReportDocument& report);
/// Indented "key: value" rendering for --format text.
std::string render_text(const ReportDocument& report);

/// [[lower labels], [upper labels]].
ReportDocument pair_json(const Universe& u, const RoughPair& p);

/// "ab|c" or "{ab|c}"; blocks split on '|', labels as in Universe::parse.
Relation parse_partition_spec(const UniversePtr& u, const std::string& spec);
/// "a/ab;c/bc"; an empty side or ∅ is the empty set.
std::vector<RoughPair> parse_element_list(const Universe& u, const std::string& spec);

struct CommandOptions {
  std::optional<std::size_t> cap;
  /// from-equivalence:<partition> or from-subortholattice:<elements>; empty
  /// means ¬ from R^e.
  std::string neg;
};

struct CommandResult {
  ReportDocument report;
  bool violation = false;
};

CommandResult cmd_info(const RelationDocument& doc, const CommandOptions& options);
CommandResult cmd_rs(const RelationDocument& doc, const CommandOptions& options);
CommandResult cmd_dm(const RelationDocument& doc, const CommandOptions& options);

const std::vector<std::string>& check_properties();
/// Throws ParseError for an unknown property or malformed --neg.
CommandResult cmd_check(const RelationDocument& doc, const std::string& property, const CommandOptions& options);

/// target ∈ {rs, dm, center, clopen}.
std::string cmd_dot(const RelationDocument& doc, const std::string& target, const CommandOptions& options);

CommandResult cmd_mine(const MineOptions& options);

/// The ¬ selected by a --neg spec (R^e when empty), with a description.
std::pair<NegOperator, std::string> select_negation(const DMLattice& dm, const std::string& spec);

}  // namespace roughdm
