// roughdm: rough-set lattices, their completion and BZ negations from the
// command line. Exit status: 0 ok, 1 check failed, 2 usage or input error,
// 3 a size cap was hit.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "roughdm/errors.hpp"
#include "roughdm/harness.hpp"
#include "roughdm/io.hpp"

namespace {

using namespace roughdm;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

// "builtin:fix1" names a shared fixture, "-" reads stdin.
RelationDocument load(const std::string& path) {
  const std::string builtin = "builtin:";
  if (path.rfind(builtin, 0) == 0) return document_from_relation(fixture(path.substr(builtin.size())));
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return parse_relation_document(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw ParseError("cannot write " + out);
  f << text;
}

int finish(const CommandResult& r, const std::string& format, const std::string& out) {
  emit(format == "text" ? render_text(r.report) : serialize_report(r.report), out);
  return r.violation ? kExitViolation : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rough-set lattices, Dedekind-MacNeille completion and Brouwer-Zadeh negations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string file;
  std::string format = "json";
  std::string out;
  std::size_t cap = 0;
  std::string neg;

  auto add_common = [&](CLI::App* sub, bool with_file) {
    if (with_file) sub->add_option("file", file, "relation document, - for stdin, builtin:fix1..fix4")->required();
    sub->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", out, "write output here instead of stdout");
    sub->add_option("--cap", cap, "largest universe to expand (0 keeps the default)");
  };

  auto* info = app.add_subcommand("info", "classification and sizes");
  add_common(info, true);
  auto* rs = app.add_subcommand("rs", "list the rough sets and test the lattice property");
  add_common(rs, true);
  auto* dm = app.add_subcommand("dm", "build the completion with per-element analysis");
  add_common(dm, true);

  std::string property;
  auto* check = app.add_subcommand("check", "run one named check");
  add_common(check, true);
  check->add_option("property", property, "property to check")->required()->check(CLI::IsMember(check_properties()));
  check->add_option("--neg", neg, "from-equivalence:<ab|c> or from-subortholattice:<a/ab;c/bc>");

  std::string target;
  auto* dot = app.add_subcommand("dot", "Hasse diagram in DOT");
  add_common(dot, true);
  dot->add_option("target", target, "diagram")->required()->check(CLI::IsMember({"rs", "dm", "center", "clopen"}));
  dot->add_option("--neg", neg, "negation whose clopen elements are marked (clopen target)");

  MineOptions mo;
  std::string filter = "any";
  std::size_t sample = 0;
  bool exhaustive = false;
  auto* mine_cmd = app.add_subcommand("mine", "run the theorem suite over many relations");
  add_common(mine_cmd, false);
  mine_cmd->add_option("--n", mo.n, "universe size")->required();
  auto* ex_flag = mine_cmd->add_flag("--exhaustive", exhaustive, "every reflexive relation (n <= 4)");
  auto* sample_opt = mine_cmd->add_option("--sample", sample, "number of seeded samples");
  ex_flag->excludes(sample_opt);
  mine_cmd->add_option("--seed", mo.seed, "sampling seed");
  mine_cmd->add_option("--filter", filter, "relation class")
      ->check(CLI::IsMember({"any", "tolerance", "quasiorder", "equivalence"}));
  mine_cmd->add_option("--jobs", mo.jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  CommandOptions options;
  if (cap > 0) options.cap = cap;
  options.neg = neg;

  try {
    if (info->parsed()) return finish(cmd_info(load(file), options), format, out);
    if (rs->parsed()) return finish(cmd_rs(load(file), options), format, out);
    if (dm->parsed()) return finish(cmd_dm(load(file), options), format, out);
    if (check->parsed()) return finish(cmd_check(load(file), property, options), format, out);
    if (dot->parsed()) {
      emit(cmd_dot(load(file), target, options), out);
      return 0;
    }
    if (mine_cmd->parsed()) {
      mo.filter = parse_filter(filter);
      if (sample > 0) {
        mo.mode = MineMode::sample;
        mo.count = sample;
      } else {
        mo.mode = MineMode::exhaustive;
      }
      return finish(cmd_mine(mo), format, out);
    }
  } catch (const CapExceeded& e) {
    std::cerr << "roughdm: " << e.what() << "\n";
    return kExitCap;
  } catch (const Error& e) {
    std::cerr << "roughdm: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "roughdm: internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
