#include "roughdm/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "roughdm/kleene.hpp"

namespace roughdm {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw ParseError(field + ": " + message);
}

std::string expect_string(const json& j, const std::string& field) {
  if (!j.is_string()) fail(field, "expected a string label");
  return j.get<std::string>();
}

std::vector<std::string> expect_labels(const json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(expect_string(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

void check_label(const std::set<std::string>& known, const std::string& label, const std::string& field) {
  if (!known.count(label)) fail(field, "unknown label \"" + label + "\"");
}

}  // namespace

RelationDocument parse_relation_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) fail("document", "expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "universe" && key != "pairs" && key != "neighborhoods" && key != "closures") {
      fail(key, "unknown field");
    }
  }
  RelationDocument doc;
  if (!j.contains("universe")) fail("universe", "missing");
  doc.universe = expect_labels(j["universe"], "universe");
  if (doc.universe.empty()) fail("universe", "must list at least one label");
  if (doc.universe.size() > kMaxUniverse) fail("universe", "more than " + std::to_string(kMaxUniverse) + " labels");
  std::set<std::string> known;
  for (std::size_t i = 0; i < doc.universe.size(); ++i) {
    if (doc.universe[i].empty()) fail("universe[" + std::to_string(i) + "]", "empty label");
    if (!known.insert(doc.universe[i]).second) fail("universe[" + std::to_string(i) + "]", "duplicate label \"" + doc.universe[i] + "\"");
  }

  const bool has_pairs = j.contains("pairs");
  const bool has_neighborhoods = j.contains("neighborhoods");
  if (has_pairs == has_neighborhoods) fail("relation", "give exactly one of \"pairs\" or \"neighborhoods\"");
  if (has_pairs) {
    const auto& p = j["pairs"];
    if (!p.is_array()) fail("pairs", "expected an array of [label, label]");
    doc.pairs.emplace();
    for (std::size_t i = 0; i < p.size(); ++i) {
      const std::string field = "pairs[" + std::to_string(i) + "]";
      if (!p[i].is_array() || p[i].size() != 2) fail(field, "expected [label, label]");
      auto x = expect_string(p[i][0], field + "[0]");
      auto y = expect_string(p[i][1], field + "[1]");
      check_label(known, x, field + "[0]");
      check_label(known, y, field + "[1]");
      doc.pairs->emplace_back(std::move(x), std::move(y));
    }
  } else {
    const auto& nb = j["neighborhoods"];
    if (!nb.is_object()) fail("neighborhoods", "expected an object mapping labels to label arrays");
    doc.neighborhoods.emplace();
    for (const auto& [key, value] : nb.items()) {
      const std::string field = "neighborhoods." + key;
      check_label(known, key, field);
      auto labels = expect_labels(value, field);
      for (std::size_t i = 0; i < labels.size(); ++i) check_label(known, labels[i], field + "[" + std::to_string(i) + "]");
      doc.neighborhoods->emplace_back(key, std::move(labels));
    }
  }
  if (j.contains("closures")) {
    const auto& c = j["closures"];
    if (!c.is_object()) fail("closures", "expected an object");
    for (const auto& [key, value] : c.items()) {
      if (key != "reflexive") fail("closures." + key, "unknown closure");
      if (!value.is_boolean()) fail("closures.reflexive", "expected true or false");
      doc.reflexive_closure = value.get<bool>();
    }
  }
  return doc;
}

ReportDocument relation_document_json(const RelationDocument& doc) {
  json j;
  j["universe"] = doc.universe;
  if (doc.pairs) {
    j["pairs"] = json::array();
    for (const auto& [x, y] : *doc.pairs) j["pairs"].push_back({x, y});
  }
  if (doc.neighborhoods) {
    j["neighborhoods"] = json::object();
    for (const auto& [x, ys] : *doc.neighborhoods) j["neighborhoods"][x] = ys;
  }
  if (doc.reflexive_closure) j["closures"] = {{"reflexive", *doc.reflexive_closure}};
  return j;
}

std::string serialize_relation_document(const RelationDocument& doc) {
  return relation_document_json(doc).dump(2) + "\n";
}

Relation to_relation(const RelationDocument& doc) {
  auto u = Universe::make(doc.universe);
  std::vector<Subset> rows(u->size(), u->empty_set());
  auto idx = [&](const std::string& label) {
    auto i = u->index_of(label);
    if (!i) throw ParseError("unknown label \"" + label + "\"");
    return *i;
  };
  if (doc.pairs) {
    for (const auto& [x, y] : *doc.pairs) rows[idx(x)] = rows[idx(x)].with(idx(y));
  }
  if (doc.neighborhoods) {
    for (const auto& [x, ys] : *doc.neighborhoods) {
      for (const auto& y : ys) rows[idx(x)] = rows[idx(x)].with(idx(y));
    }
  }
  if (doc.reflexive_closure.value_or(false)) {
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = rows[i].with(i);
  }
  return Relation(u, std::move(rows));
}

RelationDocument document_from_relation(const Relation& r) {
  RelationDocument doc;
  const auto& u = r.universe();
  doc.universe = u.labels();
  doc.neighborhoods.emplace();
  for (std::size_t i = 0; i < r.size(); ++i) doc.neighborhoods->emplace_back(u.label(i), u.labels_of(r.neighborhood(i)));
  return doc;
}

ReportDocument parse_report(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string serialize_report(const ReportDocument& report) { return report.dump(2) + "\n"; }

namespace {

bool is_flat(const json& j) {
  if (!j.is_structured()) return true;
  if (j.is_object()) return false;
  return std::all_of(j.begin(), j.end(), [](const json& e) { return is_flat(e); });
}

std::string inline_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  if (!j.is_array()) return j.dump();
  std::string out = "[";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i > 0) out += ", ";
    out += inline_text(j[i]);
  }
  return out + "]";
}

void render(const json& j, int depth, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_flat(value)) {
        out << pad << key << ": " << inline_text(value) << "\n";
      } else {
        out << pad << key << ":\n";
        render(value, depth + 1, out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (is_flat(e)) {
        out << pad << "- " << inline_text(e) << "\n";
      } else {
        out << pad << "-\n";
        render(e, depth + 1, out);
      }
    }
  } else {
    out << pad << inline_text(j) << "\n";
  }
}

}  // namespace

std::string render_text(const ReportDocument& report) {
  std::ostringstream out;
  render(report, 0, out);
  return out.str();
}

ReportDocument pair_json(const Universe& u, const RoughPair& p) {
  return json::array({u.labels_of(p.lower), u.labels_of(p.upper)});
}

Relation parse_partition_spec(const UniversePtr& u, const std::string& spec) {
  std::string body = spec;
  if (body.size() >= 2 && body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
  if (body.empty()) throw ParseError("empty partition spec");
  std::vector<Subset> blocks;
  Subset seen = u->empty_set();
  std::size_t pos = 0;
  while (true) {
    auto bar = body.find('|', pos);
    auto token = body.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
    if (token.empty()) throw ParseError("partition spec \"" + spec + "\" has an empty block");
    auto block = u->parse(token);
    if (seen.intersects(block)) throw ParseError("partition spec \"" + spec + "\" repeats an element");
    seen = seen | block;
    blocks.push_back(block);
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  if (!seen.is_full()) throw ParseError("partition spec \"" + spec + "\" does not cover the universe");
  return Partition(u, std::move(blocks)).to_relation();
}

std::vector<RoughPair> parse_element_list(const Universe& u, const std::string& spec) {
  std::vector<RoughPair> out;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    auto semi = spec.find(';', pos);
    auto token = spec.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    auto slash = token.find('/');
    if (slash == std::string::npos) throw ParseError("element \"" + token + "\" is not of the form lower/upper");
    out.push_back({u.parse(token.substr(0, slash)), u.parse(token.substr(slash + 1))});
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return out;
}

namespace {

std::string partition_spec(const Relation& e) {
  std::string out;
  const auto classes = equivalence_classes(e);
  for (const auto& block : classes.blocks()) {
    if (!out.empty()) out += '|';
    out += e.universe().format(block);
  }
  return out;
}

// Everything a command needs about one input relation.
struct Context {
  explicit Context(const RelationDocument& d) : doc(d), relation(to_relation(d)) {}

  const Universe& u() const { return relation.universe(); }
  ApproxSpace space() const { return ApproxSpace(relation); }
  const DMLattice& dm(const CommandOptions& options) {
    if (!classify(relation).reflexive) {
      throw PreconditionError("the completion needs a reflexive relation (set closures.reflexive)");
    }
    if (!dm_) dm_.emplace(build_dm(space(), options.cap.value_or(kDefaultDmCap)));
    return *dm_;
  }
  RSFamily rs(const CommandOptions& options) const { return build_rs(space(), options.cap.value_or(kDefaultRsCap)); }

  RelationDocument doc;
  Relation relation;
  std::optional<DMLattice> dm_;
};

json header(const std::string& command, const Context& c) {
  json j;
  j["tool"] = "roughdm";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["input"] = relation_document_json(c.doc);
  return j;
}

json classification(const Relation& r) {
  const auto f = classify(r);
  json j;
  j["reflexive"] = f.reflexive;
  j["symmetric"] = f.symmetric;
  j["transitive"] = f.transitive;
  j["left_total"] = f.left_total;
  j["right_total"] = f.right_total;
  j["tolerance"] = f.tolerance;
  j["quasiorder"] = f.quasiorder;
  j["equivalence"] = f.equivalence;
  j["irredundant_covering_tolerance"] = is_irredundant_covering_tolerance(r);
  return j;
}

json pairs_json(const Universe& u, const std::vector<RoughPair>& pairs) {
  json j = json::array();
  for (const auto& p : pairs) j.push_back(pair_json(u, p));
  return j;
}

json elements_json(const DMLattice& dm, const std::vector<std::size_t>& indices) {
  json j = json::array();
  for (auto i : indices) j.push_back(pair_json(dm.space().universe(), dm.element(i)));
  return j;
}

json element_json(const DMLattice& dm, std::size_t i) { return pair_json(dm.space().universe(), dm.element(i)); }

}  // namespace

CommandResult cmd_info(const RelationDocument& doc, const CommandOptions& options) {
  Context c(doc);
  json j = header("info", c);
  j["classification"] = classification(c.relation);
  j["universe_size"] = c.u().size();
  if (!classify(c.relation).reflexive) {
    j["note"] = "relation is not reflexive; rough-set sections need a reflexive relation";
    return {j, false};
  }
  const auto space = c.space();
  j["singletons"] = c.u().labels_of(space.singletons());
  json classes = json::array();
  const auto re_classes = equivalence_classes(equivalence_closure(c.relation));
  for (const auto& b : re_classes.blocks()) classes.push_back(c.u().labels_of(b));
  j["equivalence_closure_classes"] = classes;
  const auto rs = c.rs(options);
  const auto& dm = c.dm(options);
  j["rs_size"] = rs.size();
  j["dm_size"] = dm.size();
  j["rs_is_lattice"] = rs_is_lattice(rs).is_lattice;
  return {j, false};
}

CommandResult cmd_rs(const RelationDocument& doc, const CommandOptions& options) {
  Context c(doc);
  json j = header("rs", c);
  j["classification"] = classification(c.relation);
  const auto rs = c.rs(options);
  const auto& u = c.u();
  json s;
  s["size"] = rs.size();
  s["elements"] = pairs_json(u, rs.pairs());
  std::vector<RoughPair> exact;
  for (const auto& p : rs.pairs()) {
    if (p.is_exact()) exact.push_back(p);
  }
  s["exact"] = pairs_json(u, exact);
  const auto lc = rs_is_lattice(rs);
  s["is_lattice"] = lc.is_lattice;
  if (lc.witness) {
    const auto& w = *lc.witness;
    json wj;
    wj["first"] = pair_json(u, rs.pairs()[w.first]);
    wj["second"] = pair_json(u, rs.pairs()[w.second]);
    wj["missing"] = w.missing;
    json bounds = json::array();
    for (auto b : w.extremal_bounds) bounds.push_back(pair_json(u, rs.pairs()[b]));
    wj[w.missing == "join" ? "minimal_upper_bounds" : "maximal_lower_bounds"] = bounds;
    s["witness"] = wj;
  }
  j["rs"] = s;
  return {j, false};
}

CommandResult cmd_dm(const RelationDocument& doc, const CommandOptions& options) {
  Context c(doc);
  json j = header("dm", c);
  j["classification"] = classification(c.relation);
  const auto& dm = c.dm(options);
  const auto& u = c.u();
  const auto space = c.space();
  const auto analysis = analyze_elements(dm);
  json elements = json::array();
  std::vector<std::size_t> sharp, complemented, central, exact, added;
  for (std::size_t i = 0; i < dm.size(); ++i) {
    const auto& p = dm.element(i);
    const auto& a = analysis[i];
    const auto cond = dm_conditions(space, p.lower, p.upper);
    json e;
    e["pair"] = pair_json(u, p);
    e["completion_added"] = !dm.in_rs(i);
    e["conditions"] = {{"lower_definable", cond.lower_definable},
                       {"upper_definable", cond.upper_definable},
                       {"closure_bound", cond.closure_bound},
                       {"singleton_agree", cond.singleton_agree}};
    e["negation"] = element_json(dm, dm.involution()(i));
    e["sharp"] = a.sharp;
    e["complemented"] = a.complemented;
    e["central"] = a.central;
    e["exact"] = a.exact;
    elements.push_back(e);
    if (a.sharp) sharp.push_back(i);
    if (a.complemented) complemented.push_back(i);
    if (a.central) central.push_back(i);
    if (a.exact) exact.push_back(i);
    if (!dm.in_rs(i)) added.push_back(i);
  }
  json d;
  d["size"] = dm.size();
  d["rs_size"] = dm.rs_count();
  d["completion_added"] = elements_json(dm, added);
  d["elements"] = elements;
  j["dm"] = d;
  j["analysis"] = {{"sharp", elements_json(dm, sharp)},
                   {"complemented", elements_json(dm, complemented)},
                   {"central", elements_json(dm, central)},
                   {"exact", elements_json(dm, exact)}};
  const auto rs = c.rs(options);
  j["oracle"] = {{"isomorphic", compare_with_oracle(dm, rs).isomorphic}};
  return {j, false};
}

const std::vector<std::string>& check_properties() {
  static const std::vector<std::string> names = {"pseudo-kleene", "paraorthomodular", "sharp", "central",
                                                 "chajda", "bz", "pbz", "pbz-star",
                                                 "stone", "antiortholattice", "suite"};
  return names;
}

std::pair<NegOperator, std::string> select_negation(const DMLattice& dm, const std::string& spec) {
  const auto& space = dm.space();
  const std::string eq_prefix = "from-equivalence:";
  const std::string ol_prefix = "from-subortholattice:";
  if (spec.empty()) {
    const auto re = equivalence_closure(space.relation());
    return {neg_from_equivalence(dm, re), eq_prefix + partition_spec(re)};
  }
  if (spec.rfind(eq_prefix, 0) == 0) {
    const auto e = parse_partition_spec(space.universe_ptr(), spec.substr(eq_prefix.size()));
    if (!space.relation().subset_of(e)) throw ParseError("--neg: the equivalence does not contain the relation");
    return {neg_from_equivalence(dm, e), eq_prefix + partition_spec(e)};
  }
  if (spec.rfind(ol_prefix, 0) == 0) {
    std::vector<std::size_t> family;
    for (const auto& p : parse_element_list(space.universe(), spec.substr(ol_prefix.size()))) {
      auto i = dm.find(p);
      if (!i) throw ParseError("--neg: " + format_pair(space.universe(), p) + " is not an element of the completion");
      family.push_back(*i);
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    std::string desc;
    for (auto i : family) {
      const auto& p = dm.element(i);
      if (!desc.empty()) desc += ';';
      desc += space.universe().format(p.lower) + "/" + space.universe().format(p.upper);
    }
    const auto defect = subortholattice_defect(dm.lattice(), dm.involution(), family);
    if (!defect.empty()) throw ParseError("--neg: " + defect);
    return {neg_from_subortholattice(dm.lattice(), dm.involution(), family), ol_prefix + desc};
  }
  throw ParseError("--neg: expected from-equivalence:<partition> or from-subortholattice:<elements>");
}

namespace {

json law_json(const DMLattice& dm, const LawResult& r) {
  json j;
  j["holds"] = r.holds;
  if (!r.holds) j["witness"] = elements_json(dm, r.witness);
  return j;
}

json bz_json(const DMLattice& dm, const NegOperator& neg, const std::string& desc, const BZReport& rep) {
  const auto& inv = dm.involution();
  json j;
  j["negation"] = desc;
  json table = json::array();
  for (std::size_t i = 0; i < dm.size(); ++i) {
    table.push_back({{"element", element_json(dm, i)},
                     {"neg", element_json(dm, neg(i))},
                     {"diamond", element_json(dm, diamond(inv, neg, i))},
                     {"box", element_json(dm, box(inv, neg, i))}});
  }
  j["table"] = table;
  json laws;
  for (std::size_t k = 1; k <= 8; ++k) laws["BZ" + std::to_string(k)] = law_json(dm, rep.bz[k]);
  laws["pseudo_kleene"] = law_json(dm, rep.pseudo_kleene);
  laws["paraorthomodular"] = law_json(dm, rep.paraorthomodular);
  j["laws"] = laws;
  j["bz_lattice"] = rep.bz_lattice;
  j["pbz"] = rep.pbz;
  j["bz_star"] = rep.bz_star;
  j["pbz_star"] = rep.pbz_star;
  j["antiortholattice"] = rep.antiortholattice;
  j["clopen"] = elements_json(dm, rep.clopen);
  j["brouwer_sharp"] = elements_json(dm, rep.brouwer_sharp);
  j["sharp"] = elements_json(dm, rep.sharp);
  return j;
}

json suite_json(const TheoremSuiteReport& r, bool all_checks) {
  json j;
  j["relation"] = r.relation;
  j["classes"] = r.classes;
  j["rs_size"] = r.rs_size;
  j["dm_size"] = r.dm_size;
  json checks = json::array();
  for (const auto& c : r.checks) {
    if (!all_checks && (!c.applicable || c.passed)) continue;
    json e;
    e["id"] = c.id;
    if (all_checks) e["status"] = !c.applicable ? "n/a" : c.passed ? "pass" : "fail";
    if (c.applicable && !c.passed) e["witness"] = c.witness;
    checks.push_back(e);
  }
  j[all_checks ? "checks" : "violations"] = checks;
  json findings = json::array();
  for (const auto& f : r.findings) findings.push_back({{"id", f.id}, {"detail", f.detail}});
  j["findings"] = findings;
  return j;
}

}  // namespace

CommandResult cmd_check(const RelationDocument& doc, const std::string& property, const CommandOptions& options) {
  const auto& props = check_properties();
  if (std::find(props.begin(), props.end(), property) == props.end()) {
    throw ParseError("unknown property \"" + property + "\"");
  }
  Context c(doc);
  json j = header("check", c);
  j["classification"] = classification(c.relation);
  json out;
  out["property"] = property;
  bool holds = true;
  bool informational = false;

  if (property == "suite") {
    const auto r = run_theorem_suite(c.relation);
    holds = r.passed();
    out["holds"] = holds;
    out["suite"] = suite_json(r, true);
    j["check"] = out;
    return {j, !holds};
  }

  const auto& dm = c.dm(options);
  const auto& l = dm.lattice();
  const auto& inv = dm.involution();

  if (property == "pseudo-kleene" || property == "paraorthomodular") {
    const auto w = property == "pseudo-kleene" ? pseudo_kleene_witness(l, inv) : paraorthomodular_witness(l, inv);
    holds = !w;
    if (w) out["witness"] = {{"p", element_json(dm, w->first)}, {"q", element_json(dm, w->second)}};
  } else if (property == "sharp") {
    const auto analysis = analyze_elements(dm);
    std::vector<std::size_t> sharp;
    json mismatches = json::array();
    for (std::size_t i = 0; i < dm.size(); ++i) {
      const bool crit = sharp_criterion(dm.space(), dm.element(i));
      if (analysis[i].sharp) sharp.push_back(i);
      if (crit != analysis[i].sharp || crit != analysis[i].complemented) mismatches.push_back(element_json(dm, i));
    }
    holds = mismatches.empty();
    out["sharp"] = elements_json(dm, sharp);
    if (!holds) out["mismatches"] = mismatches;
    const auto cf = c_family_analysis(dm);
    out["sharp_is_sublattice"] = cf.is_sublattice;
  } else if (property == "central") {
    const auto cen = analyze_center(dm);
    holds = cen.agree;
    out["center"] = elements_json(dm, cen.center);
    out["routes_agree"] = cen.agree;
  } else if (property == "chajda") {
    informational = true;
    const auto ch = check_chajda_identity(l, inv);
    holds = ch.holds;
    if (ch.witness) {
      const auto& w = *ch.witness;
      out["witness"] = {{"x", element_json(dm, w.x)},
                        {"y", element_json(dm, w.y)},
                        {"lhs", element_json(dm, w.lhs)},
                        {"rhs", element_json(dm, w.rhs)}};
    }
  } else if (property == "stone") {
    const auto s = stone_analysis(dm);
    holds = s.is_stone;
    out["pseudocomplemented"] = s.pseudocomplemented;
    out["stone_identity"] = s.stone_identity;
    out["distributive"] = s.distributive;
    out["meet_de_morgan"] = s.meet_de_morgan;
    out["skeleton_boolean"] = s.skeleton_boolean;
    if (s.equivalence_formula) out["equivalence_formula"] = *s.equivalence_formula;
    out["inverse_then_relation_is_closure"] = s.inverse_then_r_is_re;
    out["relation_then_inverse_is_closure"] = s.r_then_inverse_is_re;
    if (s.star) {
      json table = json::array();
      for (std::size_t i = 0; i < dm.size(); ++i) {
        table.push_back({{"element", element_json(dm, i)}, {"star", element_json(dm, (*s.star)(i))}});
      }
      out["pseudocomplements"] = table;
    }
  } else {
    const auto [neg, desc] = select_negation(dm, options.neg);
    const auto rep = check_bz_axioms(l, inv, neg);
    if (property == "bz") holds = rep.bz_lattice;
    if (property == "pbz") holds = rep.pbz;
    if (property == "pbz-star") holds = rep.pbz_star;
    if (property == "antiortholattice") holds = rep.antiortholattice;
    out["bz"] = bz_json(dm, neg, desc, rep);
    if (property == "pbz-star") {
      std::optional<Relation> e;
      const std::string prefix = "from-equivalence:";
      if (desc.rfind(prefix, 0) == 0) e = parse_partition_spec(c.relation.universe_ptr(), desc.substr(prefix.size()));
      const auto sc = pbz_star_check(dm, neg, e);
      json s;
      s["holds"] = sc.holds;
      if (sc.witness) s["witness"] = element_json(dm, *sc.witness);
      if (sc.set_condition) {
        s["set_condition"] = *sc.set_condition;
        if (sc.set_witness) s["set_witness"] = pair_json(c.u(), *sc.set_witness);
        s["agree"] = sc.agree;
      }
      out["star"] = s;
    }
  }
  out["holds"] = holds;
  if (informational) out["informational"] = true;
  j["check"] = out;
  return {j, !holds && !informational};
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

struct DotNode {
  std::string label;
  bool filled = false;
  bool boxed = false;
  bool highlighted = false;
};

std::string hasse_dot(const std::string& name, const std::vector<DotNode>& nodes,
                      const std::vector<std::vector<bool>>& leq) {
  const auto n = nodes.size();
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << "  n" << i << " [label=\"" << dot_escape(nodes[i].label) << "\"";
    if (nodes[i].boxed) out << ", shape=box";
    if (nodes[i].filled) out << ", style=filled, fillcolor=gray75";
    if (nodes[i].highlighted) out << ", peripheries=2, color=red";
    out << "];\n";
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k) {
        if (k != i && k != j && leq[i][k] && leq[k][j]) cover = false;
      }
      if (cover) out << "  n" << i << " -> n" << j << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string cmd_dot(const RelationDocument& doc, const std::string& target, const CommandOptions& options) {
  if (target != "rs" && target != "dm" && target != "center" && target != "clopen") {
    throw ParseError("unknown DOT target \"" + target + "\"; expected rs, dm, center or clopen");
  }
  Context c(doc);
  const auto& dm = c.dm(options);
  const auto& l = dm.lattice();
  const auto& u = c.u();
  const auto analysis = analyze_elements(dm);
  if (target == "rs") {
    const auto rs = c.rs(options);
    std::vector<DotNode> nodes;
    for (const auto& p : rs.pairs()) {
      DotNode node{format_pair(u, p)};
      node.filled = analysis[dm.index_of(p)].complemented;
      nodes.push_back(node);
    }
    return hasse_dot("RS", nodes, rs.order_matrix());
  }
  std::vector<bool> highlight(dm.size(), false);
  if (target == "center") {
    for (std::size_t i = 0; i < dm.size(); ++i) highlight[i] = analysis[i].central;
  } else if (target == "clopen") {
    const auto [neg, desc] = select_negation(dm, options.neg);
    for (auto i : clopen_family(l, dm.involution(), neg).members) highlight[i] = true;
  }
  std::vector<DotNode> nodes;
  for (std::size_t i = 0; i < dm.size(); ++i) {
    DotNode node{format_pair(u, dm.element(i))};
    node.filled = analysis[i].complemented;
    node.boxed = !dm.in_rs(i);
    node.highlighted = highlight[i];
    nodes.push_back(node);
  }
  const std::string name = target == "dm" ? "DM" : target == "center" ? "Center" : "Clopen";
  return hasse_dot(name, nodes, l.order_matrix());
}

CommandResult cmd_mine(const MineOptions& options) {
  const auto reports = mine(options);
  json j;
  j["tool"] = "roughdm";
  j["version"] = kToolVersion;
  j["command"] = "mine";
  json opts;
  opts["n"] = options.n;
  opts["mode"] = options.mode == MineMode::exhaustive ? "exhaustive" : "sample";
  if (options.mode == MineMode::sample) {
    opts["count"] = options.count;
    opts["seed"] = options.seed;
  }
  opts["filter"] = filter_name(options.filter);
  j["options"] = opts;

  std::size_t violations = 0;
  std::size_t violating = 0;
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_check;
  std::map<std::string, std::size_t> per_finding;
  for (const auto& e : suite_catalogue()) per_check[e.id] = {0, 0};
  for (const auto& e : finding_catalogue()) per_finding[e.id] = 0;
  json instances = json::array();
  for (const auto& r : reports) {
    violations += r.violations();
    if (!r.passed()) ++violating;
    for (const auto& ch : r.checks) {
      if (ch.applicable) ++per_check[ch.id].first;
      if (ch.applicable && !ch.passed) ++per_check[ch.id].second;
    }
    for (const auto& f : r.findings) ++per_finding[f.id];
    instances.push_back(suite_json(r, false));
  }
  json summary;
  summary["instances"] = reports.size();
  summary["violations"] = violations;
  summary["violating_instances"] = violating;
  json checks;
  for (const auto& e : suite_catalogue()) {
    checks[e.id] = {{"applicable", per_check[e.id].first}, {"failed", per_check[e.id].second}};
  }
  summary["checks"] = checks;
  json findings;
  for (const auto& e : finding_catalogue()) findings[e.id] = per_finding[e.id];
  summary["findings"] = findings;
  j["summary"] = summary;
  j["instances"] = instances;
  return {j, violations > 0};
}

}  // namespace roughdm
