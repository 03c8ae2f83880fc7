#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "rsvplan/domain/plan.hpp"
#include "rsvplan/experiments/sweeps.hpp"
#include "rsvplan/model/formulation.hpp"

namespace rsvplan::experiments {

namespace {

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void check_grid(const std::vector<double>& grid, const std::string& label) {
  if (grid.empty())
    throw domain::ValidationError(label + " grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]))
      throw domain::ValidationError(label + " grid value is not finite");
    if (i > 0 && grid[i] <= grid[i - 1])
      throw domain::ValidationError(label + " grid must be strictly " +
                                    "increasing (" + fmt(grid[i - 1]) +
                                    " then " + fmt(grid[i]) + ")");
  }
}

void check_class_index(const domain::ResourceCatalog& cat, ResourceId id) {
  std::size_t size = 0;
  switch (id.cls) {
    case ResourceClass::cyber: size = cat.cyber.size(); break;
    case ResourceClass::physical: size = cat.physical.size(); break;
    case ResourceClass::people: size = cat.people.size(); break;
    case ResourceClass::edge: size = cat.edge.size(); break;
  }
  if (id.index >= size)
    throw domain::ValidationError("target " + to_string(id) +
                                  " is outside the catalog (" +
                                  std::to_string(size) + " entries)");
}

milp::SolveResult solve_or_throw(const milp::MilpProblem& p,
                                 const milp::SolverConfig& cfg,
                                 const std::string& what) {
  auto res = milp::solve_milp(p, cfg);
  if (res.status != milp::SolveStatus::optimal)
    throw SolveFailure(res.status, what + ": solver stopped with '" +
                                       std::string(milp::to_string(res.status)) +
                                       "'");
  return res;
}

domain::Instance with_busy_probability(const domain::Instance& in, double p) {
  domain::Instance probed = in;
  probed.scenarios.probabilities = {p, 1.0 - p};
  return probed;
}

std::int64_t total_reserved(const domain::FirstStage& first, ResourceId id) {
  std::int64_t total = 0;
  switch (id.cls) {
    case ResourceClass::cyber:
      for (const auto& row : first.cyber_units) total += row[id.index];
      break;
    case ResourceClass::physical:
      for (const auto& row : first.physical_units) total += row[id.index];
      break;
    case ResourceClass::people:
      for (const auto& row : first.people_units) total += row[id.index];
      break;
    case ResourceClass::edge:
      // one pool: any server counts, whichever ones the solver picked
      for (const auto& row : first.edge_reserved)
        for (auto flag : row) total += flag;
      break;
  }
  return total;
}

std::string safe_label(std::string name) {
  for (char& c : name)
    if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '"') c = '_';
  return name;
}

}  // namespace

ResourceId parse_resource_id(const std::string& text) {
  const auto colon = text.find(':');
  const std::string cls = text.substr(0, colon);
  ResourceId id;
  if (cls == "cyber") id.cls = ResourceClass::cyber;
  else if (cls == "physical") id.cls = ResourceClass::physical;
  else if (cls == "people") id.cls = ResourceClass::people;
  else if (cls == "edge") id.cls = ResourceClass::edge;
  else
    throw domain::ValidationError(
        "unknown resource class '" + cls +
        "' (expected cyber, physical, people, or edge)");
  if (colon != std::string::npos) {
    const std::string tail = text.substr(colon + 1);
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
      throw domain::ValidationError("bad resource index '" + tail +
                                    "' in target '" + text + "'");
    id.index = std::stoul(tail);
  }
  return id;
}

std::string to_string(const ResourceId& id) {
  const char* cls = "";
  switch (id.cls) {
    case ResourceClass::cyber: cls = "cyber"; break;
    case ResourceClass::physical: cls = "physical"; break;
    case ResourceClass::people: cls = "people"; break;
    case ResourceClass::edge: cls = "edge"; break;
  }
  return std::string(cls) + ":" + std::to_string(id.index);
}

SweepSeries sweep_reservation(const domain::Instance& in, ResourceId target,
                              const std::vector<double>& grid,
                              const milp::SolverConfig& cfg) {
  domain::validate(in);
  if (domain::num_users(in.scenarios) != 1)
    throw domain::ValidationError(
        "reservation sweep expects a single-user instance");
  check_class_index(in.catalog, target);
  check_grid(grid, "reservation");
  for (double g : grid) {
    if (g < 0.0 || std::abs(g - std::llround(g)) > 1e-9)
      throw domain::ValidationError("reserved quantity " + fmt(g) +
                                    " is not a whole number of units");
  }

  auto built = model::build_sip(in);
  int var = -1;
  std::int64_t cap = -1;  // -1: unbounded above
  switch (target.cls) {
    case ResourceClass::cyber:
      var = built.map.cyber_r(0, target.index);
      break;
    case ResourceClass::physical:
      var = built.map.physical_r(0, target.index);
      break;
    case ResourceClass::people:
      var = built.map.people_r(0, target.index);
      cap = static_cast<std::int64_t>(std::floor(
          in.catalog.people[target.index].capacity_hours / in.quantum.hours +
          1e-9));
      break;
    case ResourceClass::edge:
      var = built.map.edge_r(0, target.index);
      cap = 1;
      break;
  }

  SweepSeries series;
  series.grid_label = "reserved_units";
  series.metadata = {"experiment=cost-structure", "target=" + to_string(target)};
  for (double g : grid) {
    const auto units = std::llround(g);
    if (cap >= 0 && units > cap)
      throw domain::ValidationError("reserved quantity " + fmt(g) +
                                    " exceeds the bound of " +
                                    std::to_string(cap) + " for target " +
                                    to_string(target));
    const auto fixed = built.problem.with_bounds(
        var, static_cast<double>(units), static_cast<double>(units));
    const auto res =
        solve_or_throw(fixed, cfg, "reservation sweep at " + fmt(g));
    const auto plan = model::extract_plan(res, built.map);
    const auto cost = domain::evaluate_plan(plan, in);
    series.points.push_back(
        {g, cost.stage1, cost.stage2_expected, cost.total, {}});
  }
  return series;
}

SweepSeries sweep_probability(const domain::Instance& in,
                              const std::vector<double>& grid,
                              const milp::SolverConfig& cfg) {
  domain::validate(in);
  if (in.scenarios.scenarios.size() != 2)
    throw domain::ValidationError(
        "probability sweep expects exactly two scenarios, got " +
        std::to_string(in.scenarios.scenarios.size()));
  check_grid(grid, "probability");
  for (double p : grid)
    if (p < 0.0 || p > 1.0)
      throw domain::ValidationError("probability " + fmt(p) +
                                    " is outside [0, 1]");

  SweepSeries series;
  series.grid_label = "p_busy";
  series.metadata = {"experiment=prob-sweep"};
  for (const auto& c : in.catalog.cyber)
    series.extra_labels.push_back("reserved_" + safe_label(c.name));
  for (const auto& x : in.catalog.physical)
    series.extra_labels.push_back("reserved_" + safe_label(x.name));
  for (const auto& y : in.catalog.people)
    series.extra_labels.push_back("reserved_" + safe_label(y.name));
  series.extra_labels.push_back("reserved_edge_servers");

  for (double p : grid) {
    const auto probed = with_busy_probability(in, p);
    auto built = model::build_sip(probed);
    const auto res =
        solve_or_throw(built.problem, cfg, "probability sweep at " + fmt(p));
    const auto plan = model::extract_plan(res, built.map);
    const auto cost = domain::evaluate_plan(plan, probed);

    SweepPoint point{p, cost.stage1, cost.stage2_expected, cost.total, {}};
    for (std::size_t v = 0; v < in.catalog.cyber.size(); ++v)
      point.extras.push_back(
          total_reserved(plan.first, {ResourceClass::cyber, v}) > 0 ? 1.0
                                                                    : 0.0);
    for (std::size_t x = 0; x < in.catalog.physical.size(); ++x)
      point.extras.push_back(
          total_reserved(plan.first, {ResourceClass::physical, x}) > 0 ? 1.0
                                                                       : 0.0);
    for (std::size_t y = 0; y < in.catalog.people.size(); ++y)
      point.extras.push_back(
          total_reserved(plan.first, {ResourceClass::people, y}) > 0 ? 1.0
                                                                     : 0.0);
    point.extras.push_back(static_cast<double>(
        total_reserved(plan.first, {ResourceClass::edge, 0})));
    series.points.push_back(std::move(point));
  }
  return series;
}

ThresholdResult find_threshold(const domain::Instance& in, ResourceId target,
                               double step, const milp::SolverConfig& cfg) {
  domain::validate(in);
  if (in.scenarios.scenarios.size() != 2)
    throw domain::ValidationError(
        "threshold search expects exactly two scenarios, got " +
        std::to_string(in.scenarios.scenarios.size()));
  if (!std::isfinite(step) || step <= 0.0 || step > 1.0)
    throw domain::ValidationError("step " + fmt(step) +
                                  " is outside (0, 1]");
  check_class_index(in.catalog, target);

  ThresholdResult result;
  auto& series = result.series;
  series.grid_label = "p_busy";
  series.extra_labels = {"target_reserved"};
  series.metadata = {"experiment=threshold", "target=" + to_string(target),
                     "step=" + fmt(step)};

  for (std::size_t k = 0;; ++k) {
    double p = static_cast<double>(k) * step;
    const bool last = p >= 1.0 - 1e-12;
    if (last) p = 1.0;

    const auto probed = with_busy_probability(in, p);
    auto built = model::build_sip(probed);
    const auto res =
        solve_or_throw(built.problem, cfg, "threshold scan at " + fmt(p));
    const auto plan = model::extract_plan(res, built.map);
    const auto cost = domain::evaluate_plan(plan, probed);
    const bool reserved = total_reserved(plan.first, target) > 0;

    series.points.push_back({p, cost.stage1, cost.stage2_expected, cost.total,
                             {reserved ? 1.0 : 0.0}});
    if (reserved) {
      result.threshold = p;
      break;
    }
    if (last) break;
  }
  return result;
}

CompareSeries compare_schemes(const domain::Instance& in,
                              const std::vector<double>& multipliers,
                              const std::vector<std::uint64_t>& seeds,
                              const milp::SolverConfig& cfg) {
  domain::validate(in);
  check_grid(multipliers, "multiplier");
  for (double m : multipliers)
    if (m < 0.0)
      throw domain::ValidationError("multiplier " + fmt(m) + " is negative");
  if (seeds.empty())
    throw domain::ValidationError("scheme comparison needs at least one seed");

  CompareSeries series;
  series.seeds = seeds;
  series.metadata = {"experiment=compare"};

  for (double m : multipliers) {
    domain::Instance scaled = in;
    for (auto& c : scaled.catalog.cyber) c.ondemand_cost *= m;
    for (auto& x : scaled.catalog.physical) x.ondemand_cost *= m;
    for (auto& y : scaled.catalog.people) y.ondemand_cost *= m;
    for (auto& z : scaled.catalog.edge) z.ondemand_cost *= m;
    scaled.catalog.outsource_rate *= m;

    ComparePoint point;
    point.multiplier = m;

    auto built = model::build_sip(scaled);
    const auto res = solve_or_throw(built.problem, cfg,
                                    "scheme comparison at multiplier " +
                                        fmt(m));
    point.sip_total = res.objective;
    point.evf_total =
        domain::evaluate_plan(model::build_evf(scaled, cfg), scaled).total;
    for (auto seed : seeds)
      point.random_totals.push_back(
          domain::evaluate_plan(model::build_random(scaled, seed, cfg), scaled)
              .total);
    series.points.push_back(std::move(point));
  }
  return series;
}

}  // namespace rsvplan::experiments
