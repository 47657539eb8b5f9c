#include "relsg/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "relsg/classify.hpp"
#include "relsg/io.hpp"
#include "relsg/powers.hpp"
#include "relsg/rees.hpp"
#include "relsg/relational.hpp"
#include "relsg/solver.hpp"
#include "relsg/words.hpp"

namespace relsg::cli {

using nlohmann::json;

namespace {

/// Raised for mathematically meaningless requests (bad flags, missing inputs).
class UsageError : public Error {
 public:
  using Error::Error;
};

json to_json(const QiResult& r) {
  json j{{"side", to_string(r.side)}, {"holds", r.holds}, {"witness", nullptr}};
  if (r.witness) {
    const auto& w = *r.witness;
    j["witness"] = {{"a", w.a},
                    {"b", w.b},
                    {"alpha", w.alpha},
                    {"beta", w.beta},
                    {"premise", {w.premise_alpha, w.premise_beta}},
                    {"conclusion", {w.conclusion_alpha, w.conclusion_beta}}};
  }
  return j;
}

json optional_id(const std::optional<ElementId>& id) {
  return id ? json(*id) : json(nullptr);
}

json tables_json(const std::vector<CayleyTable>& tables) {
  json arr = json::array();
  for (const auto& t : tables) arr.push_back(io::format_table(t));
  return arr;
}

json power_point(const std::vector<PowerTuple>& point) {
  json arr = json::array();
  for (const auto& t : point) arr.push_back(t.coords);
  return arr;
}

RelationalStructure load_structure(const std::string& path, bool group) {
  if (path.empty()) throw UsageError("--structure is required");
  const auto s = io::parse_table_file(path);
  return group ? predicatize_group(as_group(s)) : predicatize_semigroup(s);
}

void check_exponent(const Invocation& inv, std::size_t n) {
  if (n == 0) throw UsageError("--N must be at least 1");
  if (n > inv.budgets.max_exponent) {
    throw BudgetExceededError("exponent", inv.budgets.max_exponent, n);
  }
}

void check_universe(const Invocation& inv, const RelationalStructure& a) {
  if (a.universe_size() > inv.budgets.max_universe) {
    throw BudgetExceededError("universe size", inv.budgets.max_universe, a.universe_size());
  }
}

SolveOptions library_options() {
  SolveOptions o;
  o.max_variables = 64;
  return o;
}

json cmd_check(const Invocation& inv, bool& negative) {
  const auto s = io::parse_table_file(inv.input);
  const auto r = classify(s);
  negative = r.verdict == Verdict::hard;
  return {{"order", s.size()},
          {"verdict", to_string(r.verdict)},
          {"qi_left", to_json(r.qi_left)},
          {"qi_right", to_json(r.qi_right)},
          {"kernel", r.kernel.members},
          {"reducible", r.reducible.members},
          {"kernel_equals_reducible", r.kernel_equals_reducible()},
          {"is_homogroup", r.is_homogroup},
          {"kernel_identity", optional_id(r.kernel_identity)},
          {"is_rect_band_kernel", r.is_rect_band_kernel}};
}

json cmd_rees(const Invocation& inv) {
  const auto spec = io::parse_rees_spec(io::read_file(inv.input));
  const auto labeled = rees_construct(spec);
  json labels = json::array();
  for (const auto& t : labeled.labels) labels.push_back({t.lambda, t.g, t.i});
  return {{"order", labeled.semigroup.size()},
          {"table", io::format_table(labeled.semigroup.table())},
          {"labels", labels},
          {"simple", is_simple(labeled.semigroup)},
          {"rectangular_band_of_groups", is_rectangular_band_of_groups(labeled.semigroup)}};
}

json cmd_kernel(const Invocation& inv) {
  const auto s = io::parse_table_file(inv.input);
  const auto hg = is_homogroup(s);
  json j{{"order", s.size()},
         {"kernel", kernel(s).members},
         {"reducible", reducible(s).members},
         {"idempotents", idempotents(s).members},
         {"is_simple", is_simple(s)},
         {"is_homogroup", hg.homogroup},
         {"kernel_identity", optional_id(hg.kernel_identity)},
         {"kernel_identity_central", nullptr}};
  if (hg.homogroup) j["kernel_identity_central"] = verify_homogroup_center(s).holds;
  return j;
}

json cmd_predicatize(const Invocation& inv) {
  const auto s = io::parse_table_file(inv.input);
  const auto a = inv.group ? predicatize_group(as_group(s)) : predicatize_semigroup(s);
  json rels = json::object();
  for (const auto& [name, rel] : a.relations()) {
    rels[name] = {{"arity", rel.arity()}, {"tuples", rel.tuples()}};
  }
  return {{"universe_size", a.universe_size()}, {"relations", rels}};
}

struct LoadedSystem {
  EquationSystem system;
  std::vector<std::string> visible;  // variables counted against the budget
};

LoadedSystem load_system(const Invocation& inv) {
  if (!inv.system.empty() && !inv.words.empty()) {
    throw UsageError("give either --system or --words, not both");
  }
  if (!inv.system.empty()) {
    auto sys = parse_system(io::read_file(inv.system));
    auto vars = sys.variables();
    return {std::move(sys), std::move(vars)};
  }
  if (!inv.words.empty()) {
    auto compiled = compile_word_equations(parse_word_equations(io::read_file(inv.words)),
                                           inv.group ? Language::group : Language::semigroup);
    return {std::move(compiled.system), std::move(compiled.projection)};
  }
  throw UsageError("one of --system or --words is required");
}

json cmd_solve(const Invocation& inv, bool& negative) {
  const auto a = load_structure(inv.structure, inv.group);
  check_universe(inv, a);
  auto loaded = load_system(inv);
  if (loaded.visible.size() > inv.budgets.max_variables) {
    throw BudgetExceededError("variables", inv.budgets.max_variables, loaded.visible.size());
  }
  // Compiled word systems are reported on their own variables by default.
  std::vector<std::string> project = inv.project;
  if (project.empty() && !inv.words.empty()) project = loaded.visible;

  json j;
  if (inv.exponent) {
    check_exponent(inv, *inv.exponent);
    const PowerStructure p(a, *inv.exponent);
    PowerSolveOptions options;
    options.base = library_options();
    auto sol = solve_power(p, loaded.system, options);
    if (!project.empty()) sol = sol.project(project);
    j = {{"exponent", *inv.exponent}, {"variables", sol.variables()}, {"count", sol.count()}};
    j["coordinate_counts"] = json::array();
    for (const auto& c : sol.coordinates()) j["coordinate_counts"].push_back(c.size());
    if (!inv.count_only) {
      json pts = json::array();
      for (const auto& pt : sol.points(inv.sample_limit)) pts.push_back(power_point(pt));
      j["points"] = pts;
    }
    negative = sol.empty();
  } else {
    auto sol = solve(a, loaded.system, library_options());
    if (!project.empty()) sol = project_solutions(sol, project);
    j = {{"exponent", nullptr}, {"variables", sol.variables()}, {"count", sol.size()}};
    if (!inv.count_only) {
      json pts = json::array();
      for (std::size_t k = 0; k < sol.size() && k < inv.sample_limit; ++k) pts.push_back(sol.points()[k]);
      j["points"] = pts;
    }
    negative = sol.empty();
  }
  j["consistent"] = !negative;
  return j;
}

json cmd_reduce(const Invocation& inv, bool& negative) {
  const auto a = load_structure(inv.structure, inv.group);
  check_universe(inv, a);
  if (!inv.exponent) throw UsageError("--N is required");
  check_exponent(inv, *inv.exponent);
  if (inv.system.empty()) throw UsageError("--system is required");
  const auto sys = parse_system(io::read_file(inv.system));
  if (sys.variables().size() > inv.budgets.max_variables) {
    throw BudgetExceededError("variables", inv.budgets.max_variables, sys.variables().size());
  }
  const PowerStructure p(a, *inv.exponent);
  PowerSolveOptions options;
  options.base = library_options();
  const auto r = reduce_to_finite(p, sys, options);
  json buckets = json::array();
  for (const auto& b : decompose(sys)) {
    buckets.push_back({{"tag", to_string(b.tag)}, {"variables", b.variables}, {"size", b.atoms.size()}});
  }
  negative = r.inconsistent;
  json j{{"exponent", *inv.exponent},
         {"input_atoms", sys.size()},
         {"reduced_atoms", r.reduced.size()},
         {"kept_positions", r.kept_positions},
         {"system", to_string(r.reduced)},
         {"buckets", buckets},
         {"inconsistent", r.inconsistent},
         {"inconsistent_coordinate", nullptr}};
  if (r.inconsistent) j["inconsistent_coordinate"] = r.consistency.coordinate;
  return j;
}

json cmd_chain(const Invocation& inv) {
  if (!inv.exponent) throw UsageError("--N is required");
  check_exponent(inv, *inv.exponent);
  const auto s = io::parse_table_file(inv.input);
  if (s.size() > inv.budgets.max_universe) {
    throw BudgetExceededError("universe size", inv.budgets.max_universe, s.size());
  }
  PowerSolveOptions options;
  options.base = library_options();
  const auto r = counterexample_chain(s, *inv.exponent, options);
  json equations = json::array();
  for (const auto& e : r.equations) equations.push_back(to_string(e));
  json points = json::array();
  for (const auto& pt : r.points) {
    points.push_back({{"n", pt.n}, {"point", pt.point.coords}, {"failing_coordinate", pt.failing_coordinate}});
  }
  const auto& w = r.witness;
  return {{"exponent", r.exponent},
          {"side", to_string(r.side)},
          {"witness", {{"a", w.a}, {"b", w.b}, {"alpha", w.alpha}, {"beta", w.beta}, {"c", r.c}}},
          {"equations", equations},
          {"counts", r.counts},
          {"strictly_decreasing", r.strictly_decreasing},
          {"points", points}};
}

json cmd_survey(const Invocation& inv, bool& negative) {
  EnumerationOptions options;
  options.mode = inv.iso ? EnumerationMode::up_to_isomorphism : EnumerationMode::labeled;
  options.max_order = inv.budgets.max_order;
  const auto o = survey(inv.order, options);
  negative = !o.theorem3_violations.empty() || !o.theorem4_violations.empty() ||
             !o.theorem5_violations.empty() || !o.conjecture_counterexamples.empty();
  return {{"order", o.order},
          {"mode", inv.iso ? "up_to_isomorphism" : "labeled"},
          {"total_tables", o.total_tables},
          {"qi_pass_count", o.qi_pass_count},
          {"homogroup_count", o.homogroup_count},
          {"conjecture_premise_count", o.conjecture_premise_count},
          {"theorem3_violations", tables_json(o.theorem3_violations)},
          {"theorem4_violations", tables_json(o.theorem4_violations)},
          {"theorem5_violations", tables_json(o.theorem5_violations)},
          {"conjecture_counterexamples", tables_json(o.conjecture_counterexamples)}};
}

json error_payload(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

Report run(const Invocation& inv) {
  Report report{inv.command, json::object(), exit_ok};
  bool negative = false;
  try {
    const auto& c = inv.command;
    if ((c == "check" || c == "rees" || c == "kernel" || c == "predicatize" || c == "chain") &&
        inv.input.empty()) {
      throw UsageError("an input file is required");
    }
    if (c == "check") {
      report.payload = cmd_check(inv, negative);
    } else if (c == "rees") {
      report.payload = cmd_rees(inv);
    } else if (c == "kernel") {
      report.payload = cmd_kernel(inv);
    } else if (c == "predicatize") {
      report.payload = cmd_predicatize(inv);
    } else if (c == "solve") {
      report.payload = cmd_solve(inv, negative);
    } else if (c == "reduce") {
      report.payload = cmd_reduce(inv, negative);
    } else if (c == "chain") {
      report.payload = cmd_chain(inv);
    } else if (c == "survey") {
      report.payload = cmd_survey(inv, negative);
    } else {
      throw UsageError("unknown command '" + c + "'");
    }
    report.exit_status = negative && inv.strict ? exit_negative : exit_ok;
  } catch (const BudgetExceededError& e) {
    report.payload = error_payload("budget", e.what());
    report.exit_status = exit_budget;
  } catch (const QiViolatedError& e) {
    report.payload = error_payload("qi_violated", e.what());
    report.payload["qi"] = to_json(e.result());
    report.exit_status = inv.strict ? exit_negative : exit_ok;
  } catch (const QiHoldsError& e) {
    report.payload = error_payload("qi_holds", e.what());
    report.exit_status = inv.strict ? exit_negative : exit_ok;
  } catch (const Error& e) {
    report.payload = error_payload("input", e.what());
    report.exit_status = exit_usage;
  }
  return report;
}

namespace {

void flatten(const json& j, const std::string& path, std::ostream& os) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [key, value] : j.items()) flatten(value, path.empty() ? key : path + "." + key, os);
  } else if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.find('\n') == std::string::npos) {
      os << path << ": " << s << '\n';
    } else {
      os << path << ":\n";
      std::istringstream lines(s);
      for (std::string line; std::getline(lines, line);) os << "  " << line << '\n';
    }
  } else if (j.is_array() && !j.empty() && (j.front().is_string() || j.front().is_object())) {
    for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], path + "[" + std::to_string(k) + "]", os);
  } else {
    os << path << ": " << j.dump() << '\n';
  }
}

}  // namespace

std::string emit_report(const Report& report, OutputFormat format) {
  if (format == OutputFormat::structured) {
    const json doc{{"command", report.command},
                   {"exit_status", report.exit_status},
                   {"payload", report.payload}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "command: " << report.command << '\n';
  flatten(report.payload, "", os);
  os << "exit_status: " << report.exit_status << '\n';
  return os.str();
}

Report parse_report(std::string_view structured) {
  const auto doc = json::parse(structured);
  return {doc.at("command").get<std::string>(), doc.at("payload"), doc.at("exit_status").get<int>()};
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite semigroups as relational structures: quasi-identities, direct powers, surveys",
               "relsg"};
  app.require_subcommand(1);
  app.fallthrough();

  Invocation inv;
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--strict", inv.strict, "Exit 1 on mathematical negatives");
  app.add_option("--max-vars", inv.budgets.max_variables, "Variable budget for solve/reduce");
  app.add_option("--max-universe", inv.budgets.max_universe, "Structure order budget for solving");
  app.add_option("--max-exponent", inv.budgets.max_exponent, "Exponent budget");
  app.add_option("--max-order", inv.budgets.max_order, "Order budget for surveys");

  auto* check = app.add_subcommand("check", "Classify a semigroup by the two quasi-identities");
  check->add_option("table", inv.input, "Cayley table file")->required();

  auto* rees = app.add_subcommand("rees", "Build a Rees matrix semigroup from a JSON spec");
  rees->add_option("spec", inv.input, "Rees spec file")->required();

  auto* kern = app.add_subcommand("kernel", "Kernel, reducible elements and idempotents");
  kern->add_option("table", inv.input, "Cayley table file")->required();

  auto* pred = app.add_subcommand("predicatize", "Relations M (and I, E with --group)");
  pred->add_option("table", inv.input, "Cayley table file")->required();
  pred->add_flag("--group", inv.group, "Use the group language M, I, E");

  auto* solve_cmd = app.add_subcommand("solve", "Solve a relational or word equation system");
  solve_cmd->add_option("--structure", inv.structure, "Cayley table file")->required();
  solve_cmd->add_flag("--group", inv.group, "Use the group language M, I, E");
  auto* sys_opt = solve_cmd->add_option("--system", inv.system, "Equation file");
  auto* words_opt = solve_cmd->add_option("--words", inv.words, "Word equation file");
  sys_opt->excludes(words_opt);
  solve_cmd->add_option("--N", inv.exponent, "Exponent of the direct power");
  solve_cmd->add_option("--project", inv.project, "Comma-separated variables")->delimiter(',');
  solve_cmd->add_flag("--count", inv.count_only, "Report only the count");
  solve_cmd->add_option("--limit", inv.sample_limit, "Number of sample points");

  auto* reduce_cmd = app.add_subcommand("reduce", "Finite equivalent subsystem over a power");
  reduce_cmd->add_option("--structure", inv.structure, "Cayley table file")->required();
  reduce_cmd->add_flag("--group", inv.group, "Use the group language M, I, E");
  reduce_cmd->add_option("--system", inv.system, "Equation file")->required();
  reduce_cmd->add_option("--N", inv.exponent, "Exponent of the direct power")->required();

  auto* chain = app.add_subcommand("chain", "Strictly shrinking prefix chain for a failing law");
  chain->add_option("table", inv.input, "Cayley table file")->required();
  chain->add_option("--N", inv.exponent, "Exponent of the direct power")->required();

  auto* survey_cmd = app.add_subcommand("survey", "Check the structure theorems on all semigroups of an order");
  survey_cmd->add_option("--order", inv.order, "Order")->required();
  survey_cmd->add_flag("--iso", inv.iso, "Only one table per isomorphism class");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  inv.command = app.get_subcommands().front()->get_name();

  const Report report = run(inv);
  out << emit_report(report, format == "text" ? OutputFormat::text : OutputFormat::structured);
  if (report.payload.contains("error")) err << "error: " << report.payload["error"]["message"].get<std::string>() << '\n';
  return report.exit_status;
}

}  // namespace relsg::cli
