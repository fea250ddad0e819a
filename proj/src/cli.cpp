#include "cground/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cground/report.hpp"

namespace cground::cli {

namespace {

struct Failure {
  int code;
};

std::string read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << path << ": error: cannot open file\n";
    throw Failure{1};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RuleFile load(const std::string& path, bool strict, std::ostream& err) {
  const auto outcome = parse_rules(read_file(path, err), {strict});
  for (const auto& d : outcome.diagnostics) err << format_diagnostic(d, path) << '\n';
  if (!outcome.ok()) throw Failure{1};
  return *outcome.file;
}

void write_to(const std::optional<std::string>& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file || !(file << text)) {
    err << *path << ": error: cannot write file\n";
    throw Failure{1};
  }
}

int cmd_check(const RuleFile& rf, std::ostream& out) {
  const auto f = rf.united();
  const auto pre = check_preconditions(f, rf.background);
  out << check_report(f, rf.background, pre).dump(2) << '\n';
  return pre.ok() ? 0 : 2;
}

int cmd_merge(const RuleFile& rf, const std::optional<std::string>& out_path,
              const std::optional<std::string>& trace_path, std::ostream& out, std::ostream& err) {
  const auto outcome = merge(rf);
  if (const auto* refused = std::get_if<Refused>(&outcome)) {
    out << refusal_json(*refused, rf.background).dump(2) << '\n';
    return 2;
  }
  const auto& ground = std::get<Ground>(outcome);
  write_to(out_path, serialize(to_rule_file(ground.expression, rf.background, rf.stakeholders.size())), out, err);
  if (trace_path) write_to(*trace_path, trace_json(ground.trace, rf.background).dump(2) + "\n", out, err);
  return 0;
}

int cmd_verify(const RuleFile& rf, const RuleFile& candidate, std::ostream& out) {
  const auto inputs = rf.expressions();
  const auto report = check_all(inputs, candidate.united(), rf.background);
  out << postulate_json(report, rf.background).dump(2) << '\n';
  return report.all_pass() ? 0 : 2;
}

int cmd_oracle(const RuleFile& rf, const SearchBounds& bounds, std::ostream& out, std::ostream& err) {
  const auto pre = check_preconditions(rf.united(), rf.background);
  SearchResult result;
  try {
    result = search(rf, bounds);
  } catch (const BoundsExplosion& e) {
    err << "error: " << e.what() << "; narrow the bounds with --max-atoms, --max-weakenings or raise --cap\n";
    return 4;
  }
  auto report = oracle_json(result, rf.background);
  if (!pre.ok()) {
    Json reasons = Json::array();
    for (auto r : pre.reasons()) reasons.push_back(to_string(r));
    report["refused"] = std::move(reasons);
  }
  out << report.dump(2) << '\n';
  if (!result.found.empty() || !pre.ok()) return 0;
  return result.exhausted ? 3 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Merge stakeholders' definite Horn rules into a common ground"};
  app.require_subcommand(1);
  bool strict = false;
  app.add_flag("--strict", strict, "Treat trivial rules as errors");

  std::string file, candidate_file;
  std::optional<std::string> out_path, trace_path;
  SearchBounds bounds;

  auto* check = app.add_subcommand("check", "Report coherence, cycles, redundancy and conflicts as JSON");
  check->add_option("file", file, "Rule file")->required();

  auto* merge_cmd = app.add_subcommand("merge", "Compute a common ground");
  merge_cmd->add_option("file", file, "Rule file")->required();
  merge_cmd->add_option("--out", out_path, "Write the rule file here instead of stdout");
  merge_cmd->add_option("--trace", trace_path, "Write the iteration trace as JSON here");

  auto* verify = app.add_subcommand("verify", "Check a candidate against the postulates");
  verify->add_option("file", file, "Rule file with the stakeholders' rules")->required();
  verify->add_option("candidate", candidate_file, "Rule file with the candidate")->required();

  auto* graph = app.add_subcommand("graph", "Write the dependency graph as DOT");
  graph->add_option("file", file, "Rule file")->required();
  graph->add_option("--out", out_path, "Write here instead of stdout");

  auto* oracle = app.add_subcommand("oracle", "Search the bounded space of weakenings for common grounds");
  oracle->add_option("file", file, "Rule file")->required();
  oracle->add_option("--max-atoms", bounds.max_added_atoms, "Atoms added per weakening")->capture_default_str();
  oracle->add_option("--max-weakenings", bounds.max_weakenings, "Weakenings kept per input clause")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  oracle->add_option("--cap", bounds.cap, "Maximum partial candidates visited")->capture_default_str();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  if (!argv.empty()) argv.pop_back();  // program name
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const RuleFile rf = load(file, strict, err);
    if (check->parsed()) return cmd_check(rf, out);
    if (merge_cmd->parsed()) return cmd_merge(rf, out_path, trace_path, out, err);
    if (verify->parsed()) return cmd_verify(rf, load(candidate_file, strict, err), out);
    if (graph->parsed()) {
      write_to(out_path, dependency_dot(dependency_graph(rf.united(), rf.background), rf.background), out, err);
      return 0;
    }
    return cmd_oracle(rf, bounds, out, err);
  } catch (const Failure& f) {
    return f.code;
  } catch (const InternalInvariantViolation& e) {
    err << file << ": error: merge invariant violated: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << file << ": error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace cground::cli
