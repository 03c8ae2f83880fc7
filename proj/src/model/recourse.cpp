#include <algorithm>
#include <string>
#include <vector>

#include "rsvplan/model/formulation.hpp"
#include "units.hpp"

namespace rsvplan::model {

using domain::quantize;
using milp::LinearTerm;
using milp::Relation;

RecourseResult solve_recourse(const domain::FirstStage& first,
                              const domain::ResourceCatalog& cat,
                              const domain::DemandScenario& scenario,
                              domain::TimeQuantum q,
                              const milp::SolverConfig& cfg) {
  const std::size_t W = scenario.users.size();
  const std::size_t V = cat.cyber.size();
  const std::size_t X = cat.physical.size();
  const std::size_t Y = cat.people.size();
  const std::size_t Z = cat.edge.size();
  if (first.cyber_units.size() != W || first.physical_units.size() != W ||
      first.people_units.size() != W || first.edge_reserved.size() != W) {
    throw domain::ValidationError(
        "first stage rows do not match the scenario's user count");
  }

  domain::ScenarioStage stage;
  stage.cyber_units.assign(W, std::vector<std::int64_t>(V, 0));
  stage.physical_units.assign(W, std::vector<std::int64_t>(X, 0));
  stage.edge_ondemand.assign(W, std::vector<std::uint8_t>(Z, 0));
  stage.outsource_units.assign(W, 0);

  // Hour shortfalls have independent rows and nonnegative prices, so the
  // cheapest completion is the componentwise shortfall itself. The single
  // outsourcing quantity serves every person-row of a user at once, hence
  // the max.
  for (std::size_t w = 0; w < W; ++w) {
    const auto& u = scenario.users[w];
    for (std::size_t v = 0; v < V; ++v)
      stage.cyber_units[w][v] = std::max<std::int64_t>(
          0, quantize(u.cyber_hours[v], q) - first.cyber_units[w][v]);
    for (std::size_t x = 0; x < X; ++x)
      stage.physical_units[w][x] = std::max<std::int64_t>(
          0, quantize(u.physical_hours[x], q) - first.physical_units[w][x]);
    std::int64_t out = 0;
    for (std::size_t y = 0; y < Y; ++y) {
      const std::int64_t reserved =
          u.people_available[y] ? first.people_units[w][y] : 0;
      out = std::max(out, quantize(u.people_hours[y], q) - reserved);
    }
    stage.outsource_units[w] = out;
  }

  // Residual data not covered by the user's own reserved servers. A user may
  // buy any server it did not reserve itself; one on-demand subscriber per
  // server. Solved as a small exact MILP over the needy users only.
  std::vector<double> residual(W, 0.0);
  bool any = false;
  for (std::size_t w = 0; w < W; ++w) {
    double covered = 0.0;
    for (std::size_t z = 0; z < Z; ++z)
      if (first.edge_reserved[w][z]) covered += cat.edge[z].capacity_gb;
    residual[w] = scenario.users[w].data_gb - covered;
    if (residual[w] > 1e-9) any = true;
  }

  if (any) {
    milp::MilpProblemBuilder b;
    std::vector<std::vector<int>> var(W, std::vector<int>(Z, -1));
    for (std::size_t w = 0; w < W; ++w) {
      if (residual[w] <= 1e-9) continue;
      for (std::size_t z = 0; z < Z; ++z) {
        if (first.edge_reserved[w][z]) continue;
        var[w][z] = b.add_binary("ondemand_server[w" + std::to_string(w) +
                                 "][z" + std::to_string(z) + "]");
        b.add_objective(var[w][z], cat.edge[z].ondemand_cost);
      }
    }
    for (std::size_t w = 0; w < W; ++w) {
      if (residual[w] <= 1e-9) continue;
      std::vector<LinearTerm> terms;
      for (std::size_t z = 0; z < Z; ++z)
        if (var[w][z] >= 0)
          terms.push_back({var[w][z], cat.edge[z].capacity_gb});
      if (terms.empty()) {
        throw domain::InfeasiblePlanError(
            "user " + std::to_string(w) +
            " has uncovered data but no server is open to it");
      }
      b.add_constraint(std::move(terms), Relation::ge,
                       detail::data_cover_rhs(cat.edge, residual[w]),
                       "cover_data[w" + std::to_string(w) + "]");
    }
    for (std::size_t z = 0; z < Z; ++z) {
      std::vector<LinearTerm> terms;
      for (std::size_t w = 0; w < W; ++w)
        if (var[w][z] >= 0) terms.push_back({var[w][z], 1.0});
      if (terms.size() > 1)
        b.add_constraint(std::move(terms), Relation::le, 1.0,
                         "server_once[z" + std::to_string(z) + "]");
    }

    const auto problem = std::move(b).build();
    const auto res = milp::solve_milp(problem, cfg);
    if (res.status != milp::SolveStatus::optimal) {
      throw domain::InfeasiblePlanError(
          "no on-demand server assignment covers the scenario's data (solver "
          "status '" +
          std::string(milp::to_string(res.status)) + "')");
    }
    for (std::size_t w = 0; w < W; ++w)
      for (std::size_t z = 0; z < Z; ++z)
        if (var[w][z] >= 0 && res.values[var[w][z]] > 0.5)
          stage.edge_ondemand[w][z] = 1;
  }

  const double cost = domain::scenario_cost(stage, cat, q);
  return {std::move(stage), cost};
}

}  // namespace rsvplan::model
