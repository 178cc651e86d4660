#include <doctest.h>

#include <regex>

#include "roughdm/errors.hpp"
#include "roughdm/io.hpp"
#include "support.hpp"

using namespace roughdm;
using testing_support::pair;

namespace {

std::string parse_message(const std::string& text) {
  try {
    parse_relation_document(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

std::size_t node_count(const std::string& dot) {
  const std::regex node(R"(^  n\d+ \[label=)");
  std::size_t n = 0;
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);) n += std::regex_search(line, node);
  return n;
}

}  // namespace

TEST_CASE("parse errors name the offending field") {
  CHECK(parse_message(R"({"universe": ["a","b"], "pairs": [["a","b"],["a","z"]]})").find("pairs[1][1]") == 0);
  CHECK(parse_message(R"({"universe": ["a","a"], "pairs": []})").find("universe[1]") == 0);
  CHECK(parse_message(R"({"universe": [], "pairs": []})").find("universe") == 0);
  CHECK(parse_message(R"({"universe": ["a"]})").find("relation") == 0);
  CHECK(parse_message(R"({"universe": ["a"], "pairs": [], "neighborhoods": {}})").find("relation") == 0);
  CHECK(parse_message(R"({"universe": ["a"], "pairs": [["a"]]})").find("pairs[0]") == 0);
  CHECK(parse_message(R"({"universe": ["a"], "neighborhoods": {"a": ["q"]}})").find("neighborhoods.a[0]") == 0);
  CHECK(parse_message(R"({"universe": ["a"], "pairs": [], "closures": {"transitive": true}})")
            .find("closures.transitive") == 0);
  CHECK(parse_message(R"({"universe": ["a"], "pairs": [], "extra": 1})").find("extra") == 0);
  const auto syntax = parse_message("{\"universe\": [\"a\",\n  \"b\" \"c\"]}");
  CHECK(syntax.find("line 2") != std::string::npos);
  CHECK(syntax.find("column") != std::string::npos);
  CHECK_FALSE(parse_message(R"({"universe": ["a"], "pairs": [["a","a"]]})").size());
}

TEST_CASE("relation documents round-trip") {
  for (auto name : {"fix1", "fix2", "fix3", "fix4"}) {
    const auto r = fixture(name);
    const auto doc = document_from_relation(r);
    const auto text = serialize_relation_document(doc);
    const auto again = parse_relation_document(text);
    CHECK(again == doc);
    CHECK(serialize_relation_document(again) == text);
    CHECK(to_relation(again) == r);
  }
  RelationDocument pairs_doc;
  pairs_doc.universe = {"x", "y"};
  pairs_doc.pairs = std::vector<std::pair<std::string, std::string>>{{"x", "y"}, {"y", "y"}};
  pairs_doc.reflexive_closure = false;
  CHECK(parse_relation_document(serialize_relation_document(pairs_doc)) == pairs_doc);
}

TEST_CASE("duplicate pairs are ignored") {
  const auto a = to_relation(parse_relation_document(R"({"universe": ["a","b"], "pairs": [["a","b"],["a","b"]]})"));
  const auto b = to_relation(parse_relation_document(R"({"universe": ["a","b"], "pairs": [["a","b"]]})"));
  CHECK(a == b);
}

TEST_CASE("empty relation with reflexive closure gives only exact pairs") {
  const auto doc =
      parse_relation_document(R"({"universe": ["a","b","c"], "pairs": [], "closures": {"reflexive": true}})");
  const auto res = cmd_rs(doc, {});
  CHECK(res.report["rs"]["size"] == 8);
  for (const auto& e : res.report["rs"]["elements"]) CHECK(e[0] == e[1]);
  CHECK(res.report["rs"]["is_lattice"] == true);
}

TEST_CASE("reports survive dump and parse byte for byte") {
  const auto doc = document_from_relation(fixture_2());
  for (const auto& rep : {cmd_info(doc, {}).report, cmd_rs(doc, {}).report, cmd_dm(doc, {}).report,
                          cmd_check(doc, "bz", {}).report}) {
    const auto text = serialize_report(rep);
    CHECK(serialize_report(parse_report(text)) == text);
    CHECK(rep["tool"] == "roughdm");
    CHECK(rep["version"] == kToolVersion);
    CHECK(rep["input"] == relation_document_json(doc));
    CHECK_FALSE(render_text(rep).empty());
  }
  CHECK(serialize_report(cmd_dm(doc, {}).report) == serialize_report(cmd_dm(doc, {}).report));
}

TEST_CASE("info on a non-reflexive relation stops after classification") {
  const auto rep = cmd_info(parse_relation_document(R"({"universe": ["a","b"], "pairs": [["a","b"]]})"), {}).report;
  CHECK(rep["classification"]["reflexive"] == false);
  CHECK(rep.contains("note"));
  CHECK_FALSE(rep.contains("rs_size"));
  const auto doc = parse_relation_document(R"({"universe": ["a","b"], "pairs": [["a","b"]]})");
  // RS is defined for any relation; the completion and the checks are not
  CHECK(cmd_rs(doc, {}).report["rs"]["size"] == 2);
  CHECK_THROWS_AS(cmd_dm(doc, {}), PreconditionError);
  CHECK_THROWS_AS(cmd_check(doc, "bz", {}), PreconditionError);
  CHECK_THROWS_AS(cmd_check(doc, "suite", {}), PreconditionError);
  CHECK_THROWS_AS(cmd_dot(doc, "rs", {}), PreconditionError);
}

TEST_CASE("completion report on the five-element tolerance") {
  const auto rep = cmd_dm(document_from_relation(fixture_2()), {}).report;
  CHECK(rep["dm"]["size"] == 25);
  CHECK(rep["dm"]["rs_size"] == 23);
  CHECK(rep["dm"]["completion_added"].size() == 2);
  CHECK(rep["oracle"]["isomorphic"] == true);
  std::size_t added = 0;
  for (const auto& e : rep["dm"]["elements"]) added += e["completion_added"].get<bool>();
  CHECK(added == 2);
}

TEST_CASE("rs report names a witness when RS is not a lattice") {
  const auto rep = cmd_rs(document_from_relation(fixture_2()), {}).report;
  CHECK(rep["rs"]["size"] == 23);
  CHECK(rep["rs"]["is_lattice"] == false);
  CHECK(rep["rs"].contains("witness"));
}

TEST_CASE("DOT output") {
  const auto fix1 = document_from_relation(fixture_1());
  const auto dot = cmd_dot(fix1, "dm", {});
  CHECK(dot == cmd_dot(fix1, "dm", {}));
  CHECK(dot.rfind("digraph DM {\n", 0) == 0);
  CHECK(node_count(dot) == 8);
  CHECK(count(dot, "shape=box") == 0);
  CHECK(count(dot, "fillcolor=gray75") == 4);

  const auto fix2 = document_from_relation(fixture_2());
  const auto dot2 = cmd_dot(fix2, "dm", {});
  CHECK(node_count(dot2) == 25);
  CHECK(count(dot2, "shape=box") == 2);
  CHECK(node_count(cmd_dot(fix2, "rs", {})) == 23);
  CHECK(count(cmd_dot(fix1, "center", {}), "peripheries=2") == 2);

  const auto single = parse_relation_document(R"({"universe": ["a"], "pairs": [["a","a"]]})");
  const auto d1 = cmd_dot(single, "dm", {});
  CHECK(node_count(d1) == 2);
  CHECK(count(d1, " -> ") == 1);
  CHECK_THROWS_AS(cmd_dot(single, "lattice", {}), ParseError);
}

TEST_CASE("check command verdicts") {
  const auto fix1 = document_from_relation(fixture_1());
  const auto fix3 = document_from_relation(fixture_3());
  for (const auto& p : {"pseudo-kleene", "paraorthomodular", "sharp", "central", "bz", "suite"}) {
    const auto r = cmd_check(fix1, p, {});
    CHECK_MESSAGE(r.report["check"]["holds"] == true, p);
    CHECK_FALSE(r.violation);
  }
  const auto chajda = cmd_check(fix1, "chajda", {});
  CHECK(chajda.report["check"]["holds"] == false);
  CHECK(chajda.report["check"]["informational"] == true);
  CHECK_FALSE(chajda.violation);

  CommandOptions split;
  split.neg = "from-equivalence:ab|c";
  const auto star = cmd_check(fix3, "pbz-star", split);
  CHECK(star.report["check"]["holds"] == true);
  CHECK_FALSE(star.violation);

  CommandOptions whole;
  whole.neg = "from-equivalence:{abc}";
  const auto trivial = cmd_check(fix3, "pbz-star", whole);
  CHECK(trivial.violation);
  CHECK(cmd_check(fix3, "antiortholattice", whole).violation);

  CHECK_THROWS_AS(cmd_check(fix1, "modular", {}), ParseError);
  CommandOptions narrow;
  narrow.neg = "from-equivalence:a|b|c";  // does not contain R
  CHECK_THROWS_AS(cmd_check(fix1, "bz", narrow), ParseError);
  CommandOptions garbage;
  garbage.neg = "from-nowhere";
  CHECK_THROWS_AS(cmd_check(fix1, "bz", garbage), ParseError);
  CHECK(cmd_check(document_from_relation(fixture_4()), "stone", {}).report["check"]["holds"] == true);
  CHECK(cmd_check(document_from_relation(fixture_2()), "stone", {}).violation);
}

TEST_CASE("partition and element-list syntax") {
  const auto u = Universe::letters(3);
  const auto e = parse_partition_spec(u, "{ab|c}");
  CHECK(e == parse_partition_spec(u, "ab|c"));
  CHECK(e.related(0, 1));
  CHECK_FALSE(e.related(0, 2));
  CHECK_THROWS_AS(parse_partition_spec(u, "ab|b|c"), Error);
  CHECK_THROWS_AS(parse_partition_spec(u, "ab"), Error);
  const auto els = parse_element_list(*u, "a/ab;∅/");
  REQUIRE(els.size() == 2);
  CHECK(els[0] == pair(*u, "a", "ab"));
  CHECK(els[1] == pair(*u, "∅", "∅"));
  CHECK_THROWS_AS(parse_element_list(*u, "a-ab"), ParseError);
}

TEST_CASE("negation selection") {
  const auto dm = build_dm(ApproxSpace(fixture_1()));
  const auto [neg, desc] = select_negation(dm, "");
  CHECK_FALSE(desc.empty());
  const auto& u = dm.space().universe();
  // R^e is everything on this relation, so ¬ sends all but the top to the top
  CHECK(neg(dm.index_of(pair(u, "∅", "∅"))) == dm.lattice().top());
  CHECK(neg(dm.lattice().top()) == dm.lattice().bottom());
  const auto sub = select_negation(dm, "from-subortholattice:∅/;abc/abc;a/ab;c/bc");
  CHECK(sub.first(dm.index_of(pair(u, "a", "ab"))) == dm.index_of(pair(u, "c", "bc")));
  CHECK_THROWS_AS(select_negation(dm, "from-subortholattice:a/ab"), ParseError);
}

TEST_CASE("mine command summary") {
  const auto res = cmd_mine(MineOptions{3, MineMode::exhaustive, 0, 1, RelationFilter::any, 2});
  CHECK(res.report["summary"]["instances"] == 64);
  CHECK(res.report["summary"]["violations"] == 0);
  CHECK_FALSE(res.violation);
  CHECK(serialize_report(res.report) ==
        serialize_report(cmd_mine(MineOptions{3, MineMode::exhaustive, 0, 1, RelationFilter::any, 1}).report));
}
