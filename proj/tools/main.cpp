#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "parhiggs/errors.hpp"

using namespace parhiggs;
using namespace parhiggs::cli;

namespace {

int emit_error(const std::string& command, const std::vector<std::string>& args, const std::string& type,
               const std::string& message, std::optional<int> wall) {
  Json error = {{"type", type}, {"message", message}};
  if (wall) error["wall"] = *wall;
  Json out = {{"schema", kReportSchema}, {"command", command}, {"arguments", args}, {"error", error}};
  std::cout << out.dump(2) << '\n';
  return 1;
}

// Name of the most derived library error, for reports.
std::string error_type(const Error& e) {
  if (dynamic_cast<const OnWall*>(&e)) return "OnWall";
  if (dynamic_cast<const InvalidInput*>(&e)) return "InvalidInput";
  if (dynamic_cast<const PoleOrderTooHigh*>(&e)) return "PoleOrderTooHigh";
  if (dynamic_cast<const NoSolution*>(&e)) return "NoSolution";
  if (dynamic_cast<const NonUnique*>(&e)) return "NonUnique";
  if (dynamic_cast<const EigenvalueNotInField*>(&e)) return "EigenvalueNotInField";
  if (dynamic_cast<const FlagNotEigenline*>(&e)) return "FlagNotEigenline";
  if (dynamic_cast<const ConditionViolated*>(&e)) return "ConditionViolated";
  if (dynamic_cast<const DegenerateResidue*>(&e)) return "DegenerateResidue";
  if (dynamic_cast<const SemistableInput*>(&e)) return "SemistableInput";
  if (dynamic_cast<const IterationBound*>(&e)) return "IterationBound";
  if (dynamic_cast<const NegativeArea*>(&e)) return "NegativeArea";
  return "Error";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with rank-2 parabolic Higgs bundles and λ-connections on P^1 minus 4 points"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOptions common;
  bool timing = false;
  app.add_option("--points", common.points, "Marked points p1..p4, comma-separated")->capture_default_str();
  app.add_option("--seed", common.seed, "Seed of the sampler used by verification subcommands")
      ->capture_default_str();
  app.add_flag("--timing", timing, "Add wall-clock timing to the report");

  TablesOptions tables;
  auto* tables_cmd = app.add_subcommand("tables", "Transform (weights, masses) by one of the tables");
  tables_cmd->add_option("--rule", tables.rule, "nah | lambda | family | cl")
      ->required()
      ->check(CLI::IsMember({"nah", "lambda", "family", "cl"}));
  tables_cmd->add_option("--alpha", tables.alpha, "Weights a1,a2,a3,a4")->required();
  tables_cmd->add_option("--mu", tables.mu, "Complex masses m1,m2,m3,m4")->required();
  tables_cmd->add_option("--lambda", tables.lambda, "λ for the lambda rule")->capture_default_str();
  tables_cmd->add_option("--hbar", tables.hbar, "ħ for the family and cl rules")->capture_default_str();
  tables_cmd->add_option("--R", tables.radius, "R for the family rule")->capture_default_str();
  tables_cmd->add_option("--samples", tables.samples, "Also check the identities on this many random pairs");

  ChambersOptions chambers;
  auto* chambers_cmd = app.add_subcommand("chambers", "Chamber census on a rational grid");
  chambers_cmd->add_option("--grid", chambers.grid, "Grid denominator")->capture_default_str();
  chambers_cmd->add_option("--slice", chambers.slice, "Fix alpha3,alpha4 and write an atlas slice");
  chambers_cmd->add_option("--csv", chambers.csv, "Output path of the atlas slice");
  chambers_cmd->add_option("--golden-dir", chambers.golden_dir, "Directory of golden census files");

  FixedPointsOptions fixed;
  auto* fixed_cmd = app.add_subcommand("fixed-points", "Fixed components of the nilpotent cone");
  fixed_cmd->add_option("--alpha", fixed.alpha, "Weights a1,a2,a3,a4")->required();

  HitchinOptions hitchin;
  auto* hitchin_cmd = app.add_subcommand("hitchin-section", "Hitchin section through the fixed point D_I");
  hitchin_cmd->add_option("--alpha", hitchin.alpha, "Weights a1,a2,a3,a4")->required();
  hitchin_cmd->add_option("--I", hitchin.subset, "Points of D_I, one-based, comma-separated")->required();
  hitchin_cmd->add_option("--mu", hitchin.mu, "Complex masses m1,m2,m3,m4")->required();
  hitchin_cmd->add_option("--t", hitchin.t, "Coordinate on B(mu); drawn from --seed when omitted");
  hitchin_cmd->add_option("--kernel-point", hitchin.kernel_point, "Degree-2 case: kernel point in I");

  StabilityOptions stability;
  auto* stability_cmd = app.add_subcommand("stability", "Stability of a λ-connection with certificate");
  stability_cmd->add_option("--input", stability.input, "Connection JSON file, - for stdin")->required();

  ClimitOptions climit;
  auto* climit_cmd = app.add_subcommand("climit", "Limit of ξ·∇ as ξ -> 0 by iterated Griffiths filtrations");
  climit_cmd->add_option("--input", climit.input, "Connection JSON file, - for stdin")->required();
  climit_cmd->add_option("--filtration", climit.filtration, "Initial filtration")
      ->check(CLI::IsMember({"trivial", "hn"}))
      ->capture_default_str();

  ConeOptions cone;
  auto* cone_cmd = app.add_subcommand("cone", "Cone angles and area of the conical metric");
  cone_cmd->add_option("--alpha", cone.alpha, "Weights a1,a2,a3,a4")->required();
  cone_cmd->add_option("--I", cone.subset, "Points of D_I, one-based, comma-separated")->required();

  OperOptions oper;
  auto* oper_cmd = app.add_subcommand("oper-check", "Parabolic oper condition for a line subbundle");
  oper_cmd->add_option("--input", oper.input, "Connection JSON file, - for stdin")->required();
  oper_cmd->add_option("--sub", oper.sub, "first | second summand")->capture_default_str();
  oper_cmd->add_option("--line", oper.line, "Line subbundle JSON file, overrides --sub");
  oper_cmd->add_option("--I", oper.subset, "Points of D_I, one-based, comma-separated")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::vector<std::string> args(argv + 1, argv + argc);
  const std::string command = app.get_subcommands().front()->get_name();
  auto start = std::chrono::steady_clock::now();
  try {
    RunReport report;
    if (command == "tables") report = run_tables(common, tables);
    if (command == "chambers") report = run_chambers(common, chambers);
    if (command == "fixed-points") report = run_fixed_points(common, fixed);
    if (command == "hitchin-section") report = run_hitchin_section(common, hitchin);
    if (command == "stability") report = run_stability(common, stability);
    if (command == "climit") report = run_climit(common, climit);
    if (command == "cone") report = run_cone(common, cone);
    if (command == "oper-check") report = run_oper_check(common, oper);
    std::optional<long long> ms;
    if (timing) {
      ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }
    std::cout << report.to_json(ms).dump(2) << '\n';
    return report.verified() ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "parhiggs " << command << ": " << e.what() << '\n';
    return 2;
  } catch (const OnWall& e) {
    return emit_error(command, args, "OnWall", e.what(), e.wall());
  } catch (const Error& e) {
    return emit_error(command, args, error_type(e), e.what(), std::nullopt);
  }
}
