// Command-line front end: solve an instance file, run one of the bundled
// studies, or emit a canned instance. Exit codes: 0 solved/ran, 1 usage,
// 2 invalid input, 3 infeasible, 4 node limit reached.
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rsvplan/domain/instance_json.hpp"
#include "rsvplan/domain/plan.hpp"
#include "rsvplan/experiments/csv.hpp"
#include "rsvplan/experiments/instances.hpp"
#include "rsvplan/experiments/sweeps.hpp"
#include "rsvplan/model/formulation.hpp"

namespace {

using nlohmann::ordered_json;
using namespace rsvplan;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInvalidInput = 2;
constexpr int kInfeasible = 3;
constexpr int kNodeLimit = 4;

std::string fmt6(double v) {
  if (v == 0.0) v = 0.0;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// JSON carries numbers, not strings; round them to the same six decimals
// the text output uses.
double r6(double v) {
  const double r = std::round(v * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;
}

ordered_json units_json(const std::vector<std::vector<std::int64_t>>& m) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : m) rows.push_back(row);
  return rows;
}

ordered_json flags_json(const std::vector<std::vector<std::uint8_t>>& m) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : m) {
    ordered_json r = ordered_json::array();
    for (auto v : row) r.push_back(static_cast<int>(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

ordered_json plan_json(const domain::AllocationPlan& plan) {
  ordered_json first;
  first["cyber_units"] = units_json(plan.first.cyber_units);
  first["physical_units"] = units_json(plan.first.physical_units);
  first["people_units"] = units_json(plan.first.people_units);
  first["edge_reserved"] = flags_json(plan.first.edge_reserved);

  ordered_json scenarios = ordered_json::array();
  for (const auto& stage : plan.second) {
    ordered_json s;
    s["cyber_units"] = units_json(stage.cyber_units);
    s["physical_units"] = units_json(stage.physical_units);
    s["edge_ondemand"] = flags_json(stage.edge_ondemand);
    s["outsource_units"] = stage.outsource_units;
    scenarios.push_back(std::move(s));
  }

  ordered_json out;
  out["first_stage"] = std::move(first);
  out["scenarios"] = std::move(scenarios);
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw domain::ValidationError("cannot open output file '" + path + "'");
  f << text;
  f.flush();
  if (!f.good())
    throw domain::ValidationError("failed writing output file '" + path + "'");
}

int report_solver_stop(milp::SolveStatus status,
                       const std::vector<std::string>& diagnostics,
                       std::int64_t node_limit) {
  for (const auto& d : diagnostics) std::fprintf(stderr, "note: %s\n", d.c_str());
  if (status == milp::SolveStatus::node_limit) {
    std::fprintf(stderr,
                 "error: stopped at the node limit (%lld) without proving an "
                 "optimum\n",
                 static_cast<long long>(node_limit));
    return kNodeLimit;
  }
  std::fprintf(stderr, "error: no feasible plan exists (solver status '%s')\n",
               std::string(milp::to_string(status)).c_str());
  return kInfeasible;
}

struct SolveArgs {
  std::string mode;
  std::string instance_path;
  std::string out_path;
  double quantum = 0.0;
  bool quantum_set = false;
  std::int64_t node_limit = milp::SolverConfig{}.node_limit;
};

int run_solve(const SolveArgs& args) {
  auto file = domain::load_instance(args.instance_path);
  domain::Instance in = file.instance;
  if (args.quantum_set) {
    in.quantum.hours = args.quantum;
    domain::validate(in);
  }
  milp::SolverConfig cfg;
  cfg.node_limit = args.node_limit;

  ordered_json out;
  out["mode"] = args.mode;

  domain::AllocationPlan plan;
  domain::CostBreakdown cost;
  std::vector<std::string> diagnostics;
  double objective = 0.0;

  if (args.mode == "dip") {
    // The reservation-only program needs one demand; the instance carries
    // scenarios, so it plans for their probability-weighted mean.
    const auto demand = domain::expected_demand(in.scenarios);
    auto built = model::build_dip(in.catalog, demand, in.quantum);
    diagnostics = built.diagnostics;
    const auto res = milp::solve_milp(built.problem, cfg);
    if (res.status != milp::SolveStatus::optimal)
      return report_solver_stop(res.status, diagnostics, cfg.node_limit);
    plan = model::extract_plan(res, built.map);
    objective = res.objective;

    domain::Instance expected = in;
    expected.scenarios.scenarios = {domain::DemandScenario{demand.users}};
    expected.scenarios.probabilities = {1.0};
    auto priced = plan;
    priced.second = domain::make_empty_plan(expected).second;
    cost = domain::evaluate_plan(priced, expected);
    cost.stage2_per_scenario.clear();  // synthetic scenario, not the user's
  } else {
    auto built = model::build_sip(in);
    diagnostics = built.diagnostics;
    const auto res = milp::solve_milp(built.problem, cfg);
    if (res.status != milp::SolveStatus::optimal)
      return report_solver_stop(res.status, diagnostics, cfg.node_limit);
    plan = model::extract_plan(res, built.map);
    objective = res.objective;
    cost = domain::evaluate_plan(plan, in);
  }

  out["status"] = "optimal";
  out["objective"] = r6(objective);
  ordered_json cost_json;
  cost_json["stage1"] = r6(cost.stage1);
  cost_json["stage2_expected"] = r6(cost.stage2_expected);
  ordered_json per = ordered_json::array();
  for (double c : cost.stage2_per_scenario) per.push_back(r6(c));
  cost_json["stage2_per_scenario"] = std::move(per);
  cost_json["total"] = r6(cost.total);
  out["cost"] = std::move(cost_json);
  out["plan"] = plan_json(plan);

  ordered_json meta;
  meta["instance"] = args.instance_path;
  if (args.mode == "dip") meta["demand"] = "expected";
  meta["quantum_hours"] = in.quantum.hours;
  meta["node_limit"] = cfg.node_limit;
  meta["diagnostics"] = diagnostics;
  out["metadata"] = std::move(meta);

  const std::string text = out.dump(2) + "\n";
  if (!args.out_path.empty()) {
    write_text(args.out_path, text);
    std::printf("objective %s\n", fmt6(objective).c_str());
  } else {
    std::fputs(text.c_str(), stdout);
  }
  return kOk;
}

struct ExperimentArgs {
  std::string kind;
  std::string instance_path;
  std::string out_path;
  std::string target;
  bool target_set = false;
  std::vector<double> grid;
  bool grid_set = false;
  double step = 0.0;
  bool step_set = false;
  std::vector<double> multipliers;
  bool multipliers_set = false;
  std::vector<std::uint64_t> seeds;
  bool seeds_set = false;
  std::uint64_t seed = 0;
  bool seed_set = false;
  double quantum = 0.0;
  bool quantum_set = false;
  std::int64_t node_limit = milp::SolverConfig{}.node_limit;
};

std::vector<double> default_reservation_grid(const domain::Instance& in,
                                             experiments::ResourceId target) {
  if (target.cls == experiments::ResourceClass::edge) return {0.0, 1.0};
  std::int64_t top = 0;
  for (const auto& scenario : in.scenarios.scenarios)
    for (const auto& u : scenario.users) {
      double hours = 0.0;
      switch (target.cls) {
        case experiments::ResourceClass::cyber:
          hours = u.cyber_hours[target.index];
          break;
        case experiments::ResourceClass::physical:
          hours = u.physical_hours[target.index];
          break;
        case experiments::ResourceClass::people:
          hours = u.people_hours[target.index];
          break;
        case experiments::ResourceClass::edge: break;
      }
      top = std::max(top, domain::quantize(hours, in.quantum));
    }
  top += 2;  // show the flat stage-2 tail past the largest demand
  if (target.cls == experiments::ResourceClass::people) {
    const auto cap = static_cast<std::int64_t>(std::floor(
        in.catalog.people[target.index].capacity_hours / in.quantum.hours +
        1e-9));
    top = std::min(top, cap);
  }
  std::vector<double> grid;
  for (std::int64_t g = 0; g <= top; ++g)
    grid.push_back(static_cast<double>(g));
  return grid;
}

int run_experiment(const ExperimentArgs& args) {
  auto file = domain::load_instance(args.instance_path);
  domain::Instance in = file.instance;
  if (args.quantum_set) {
    in.quantum.hours = args.quantum;
    domain::validate(in);
  }
  milp::SolverConfig cfg;
  cfg.node_limit = args.node_limit;

  std::string csv;
  std::string summary;

  if (args.kind == "cost-structure") {
    const auto target = experiments::parse_resource_id(
        args.target_set ? args.target : "cyber:0");
    const auto grid = args.grid_set ? args.grid
                                    : default_reservation_grid(in, target);
    auto series = experiments::sweep_reservation(in, target, grid, cfg);
    csv = experiments::to_csv(series);
  } else if (args.kind == "prob-sweep") {
    std::vector<double> grid = {0.0, 0.25, 0.5, 0.75, 1.0};
    if (file.experiments.probability_grid)
      grid = *file.experiments.probability_grid;
    if (args.grid_set) grid = args.grid;
    auto series = experiments::sweep_probability(in, grid, cfg);
    csv = experiments::to_csv(series);
  } else if (args.kind == "threshold") {
    const auto target = experiments::parse_resource_id(
        args.target_set ? args.target : "edge:0");
    double step = file.experiments.threshold_step.value_or(0.01);
    if (args.step_set) step = args.step;
    auto result = experiments::find_threshold(in, target, step, cfg);
    summary = result.threshold ? "threshold " + fmt6(*result.threshold)
                               : "threshold none";
    result.series.metadata.push_back(
        result.threshold ? "threshold=" + fmt6(*result.threshold)
                         : "threshold=none");
    csv = experiments::to_csv(result.series);
  } else {  // compare
    std::vector<double> multipliers = {0.5, 1.0, 2.0, 3.0, 4.0};
    if (file.experiments.multipliers) multipliers = *file.experiments.multipliers;
    if (args.multipliers_set) multipliers = args.multipliers;

    std::vector<std::uint64_t> seeds;
    if (args.seeds_set) {
      seeds = args.seeds;
    } else if (file.experiments.random_seeds && !args.seed_set) {
      seeds = *file.experiments.random_seeds;
    } else {
      std::uint64_t base = 1;
      if (file.experiments.base_seed) base = *file.experiments.base_seed;
      if (args.seed_set) base = args.seed;
      for (std::uint64_t i = 0; i < 20; ++i) seeds.push_back(base + i);
    }
    auto series = experiments::compare_schemes(in, multipliers, seeds, cfg);
    csv = experiments::to_csv(series);
  }

  if (!args.out_path.empty()) {
    write_text(args.out_path, csv);
    if (!summary.empty()) std::printf("%s\n", summary.c_str());
  } else {
    std::fputs(csv.c_str(), stdout);
  }
  return kOk;
}

int run_gen(const std::string& variant, const std::string& out_path) {
  domain::InstanceFile file;
  if (variant == "cost-structure") {
    file = experiments::cost_structure_instance();
  } else if (variant == "prob-sweep") {
    file = experiments::probability_sweep_instance();
  } else {
    file = experiments::default_instance();
  }
  const std::string text = domain::serialize_instance(file);
  if (!out_path.empty())
    write_text(out_path, text);
  else
    std::fputs(text.c_str(), stdout);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reservation and on-demand subscription planning under demand "
               "uncertainty"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand(
      "solve", "solve one instance and write the optimal plan as JSON");
  solve->add_option("--mode", solve_args.mode,
                    "dip (reservation-only, mean demand) or sip (two-stage)")
      ->required()
      ->check(CLI::IsMember({"dip", "sip"}));
  solve->add_option("--instance", solve_args.instance_path,
                    "instance JSON file")
      ->required();
  solve->add_option("--out", solve_args.out_path,
                    "write the plan here instead of stdout");
  auto* sq = solve->add_option("--quantum", solve_args.quantum,
                               "override the instance's hour quantum");
  solve->add_option("--node-limit", solve_args.node_limit,
                    "branch-and-bound node budget")
      ->check(CLI::PositiveNumber);

  ExperimentArgs ex_args;
  auto* ex = app.add_subcommand("experiment", "run one of the bundled studies");
  ex->add_option("--kind", ex_args.kind, "which study to run")
      ->required()
      ->check(CLI::IsMember(
          {"cost-structure", "prob-sweep", "threshold", "compare"}));
  ex->add_option("--instance", ex_args.instance_path, "instance JSON file")
      ->required();
  ex->add_option("--out", ex_args.out_path,
                 "write the CSV here instead of stdout");
  auto* et = ex->add_option("--target", ex_args.target,
                            "resource to sweep or test, '<class>[:<index>]'");
  auto* eg = ex->add_option("--grid", ex_args.grid,
                            "grid values (reserved units or probabilities)")
                 ->delimiter(',');
  auto* es = ex->add_option("--step", ex_args.step,
                            "probability increment for threshold scans");
  auto* em = ex->add_option("--multipliers", ex_args.multipliers,
                            "on-demand price multipliers for compare")
                 ->delimiter(',');
  auto* exseeds = ex->add_option("--seeds", ex_args.seeds,
                                 "explicit seed list for the random scheme")
                      ->delimiter(',');
  auto* exseed = ex->add_option(
      "--seed", ex_args.seed, "base seed; compare uses 20 consecutive seeds");
  auto* eq = ex->add_option("--quantum", ex_args.quantum,
                            "override the instance's hour quantum");
  ex->add_option("--node-limit", ex_args.node_limit,
                 "branch-and-bound node budget per solve")
      ->check(CLI::PositiveNumber);

  std::string variant = "default";
  std::string gen_out;
  auto* gen = app.add_subcommand("gen-default",
                                 "emit a canned instance file as JSON");
  gen->add_option("--variant", variant,
                  "default, cost-structure, or prob-sweep")
      ->check(CLI::IsMember({"default", "cost-structure", "prob-sweep"}));
  gen->add_option("--out", gen_out, "write the instance here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  solve_args.quantum_set = sq->count() > 0;
  ex_args.target_set = et->count() > 0;
  ex_args.grid_set = eg->count() > 0;
  ex_args.step_set = es->count() > 0;
  ex_args.multipliers_set = em->count() > 0;
  ex_args.seeds_set = exseeds->count() > 0;
  ex_args.seed_set = exseed->count() > 0;
  ex_args.quantum_set = eq->count() > 0;

  try {
    if (solve->parsed()) return run_solve(solve_args);
    if (ex->parsed()) return run_experiment(ex_args);
    if (gen->parsed()) return run_gen(variant, gen_out);
    return kUsage;
  } catch (const experiments::SolveFailure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.status() == milp::SolveStatus::node_limit ? kNodeLimit
                                                       : kInfeasible;
  } catch (const model::ExtractError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.status() == milp::SolveStatus::node_limit ? kNodeLimit
                                                       : kInfeasible;
  } catch (const domain::InfeasiblePlanError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInfeasible;
  } catch (const domain::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInvalidInput;
  } catch (const milp::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  }
}
