#include <cstdint>
#include <string>
#include <vector>

#include "rsvplan/domain/instance.hpp"
#include "rsvplan/domain/plan.hpp"

namespace rsvplan::domain {

namespace {

std::string at(std::size_t scenario, std::size_t user) {
  return "scenario " + std::to_string(scenario) + ", user " +
         std::to_string(user);
}

void require_shape(bool ok, const char* what) {
  if (!ok) {
    throw ValidationError(std::string("plan shape mismatch: ") + what);
  }
}

void check_units(const std::vector<std::vector<std::int64_t>>& m,
                 const char* what) {
  for (const auto& row : m)
    for (auto v : row)
      if (v < 0)
        throw InfeasiblePlanError(std::string(what) +
                                  " units must be nonnegative");
}

}  // namespace

AllocationPlan make_empty_plan(const Instance& in) {
  const std::size_t users = num_users(in.scenarios);
  AllocationPlan plan;
  auto zero = [&](std::size_t cols) {
    return std::vector<std::vector<std::int64_t>>(
        users, std::vector<std::int64_t>(cols, 0));
  };
  plan.first.cyber_units = zero(in.catalog.cyber.size());
  plan.first.physical_units = zero(in.catalog.physical.size());
  plan.first.people_units = zero(in.catalog.people.size());
  plan.first.edge_reserved.assign(
      users, std::vector<std::uint8_t>(in.catalog.edge.size(), 0));
  plan.second.resize(in.scenarios.scenarios.size());
  for (auto& stage : plan.second) {
    stage.cyber_units = zero(in.catalog.cyber.size());
    stage.physical_units = zero(in.catalog.physical.size());
    stage.edge_ondemand.assign(
        users, std::vector<std::uint8_t>(in.catalog.edge.size(), 0));
    stage.outsource_units.assign(users, 0);
  }
  return plan;
}

double stage1_cost(const FirstStage& first, const ResourceCatalog& cat,
                   TimeQuantum q) {
  double cost = 0.0;
  for (const auto& row : first.cyber_units)
    for (std::size_t v = 0; v < row.size(); ++v)
      cost += static_cast<double>(row[v]) * q.hours * cat.cyber[v].reserve_cost;
  for (const auto& row : first.physical_units)
    for (std::size_t x = 0; x < row.size(); ++x)
      cost +=
          static_cast<double>(row[x]) * q.hours * cat.physical[x].reserve_cost;
  for (const auto& row : first.people_units)
    for (std::size_t y = 0; y < row.size(); ++y)
      cost += static_cast<double>(row[y]) * q.hours * cat.people[y].reserve_cost;
  for (const auto& row : first.edge_reserved)
    for (std::size_t z = 0; z < row.size(); ++z)
      if (row[z]) cost += cat.edge[z].reserve_cost;
  return cost;
}

double scenario_cost(const ScenarioStage& stage, const ResourceCatalog& cat,
                     TimeQuantum q) {
  double cost = 0.0;
  for (const auto& row : stage.cyber_units)
    for (std::size_t v = 0; v < row.size(); ++v)
      cost += static_cast<double>(row[v]) * q.hours * cat.cyber[v].ondemand_cost;
  for (const auto& row : stage.physical_units)
    for (std::size_t x = 0; x < row.size(); ++x)
      cost +=
          static_cast<double>(row[x]) * q.hours * cat.physical[x].ondemand_cost;
  for (const auto& row : stage.edge_ondemand)
    for (std::size_t z = 0; z < row.size(); ++z)
      if (row[z]) cost += cat.edge[z].ondemand_cost;
  for (auto o : stage.outsource_units)
    cost += static_cast<double>(o) * q.hours * cat.outsource_rate;
  return cost;
}

CostBreakdown evaluate_plan(const AllocationPlan& plan, const Instance& in) {
  validate(in);
  const std::size_t users = num_users(in.scenarios);
  const std::size_t scenarios = in.scenarios.scenarios.size();
  const auto& cat = in.catalog;

  require_shape(plan.first.cyber_units.size() == users &&
                    plan.first.physical_units.size() == users &&
                    plan.first.people_units.size() == users &&
                    plan.first.edge_reserved.size() == users,
                "first stage rows != user count");
  require_shape(plan.second.size() == scenarios,
                "second stage count != scenario count");
  for (std::size_t w = 0; w < users; ++w) {
    require_shape(plan.first.cyber_units[w].size() == cat.cyber.size() &&
                      plan.first.physical_units[w].size() ==
                          cat.physical.size() &&
                      plan.first.people_units[w].size() == cat.people.size() &&
                      plan.first.edge_reserved[w].size() == cat.edge.size(),
                  "first stage columns != catalog size");
  }
  for (const auto& stage : plan.second) {
    require_shape(stage.cyber_units.size() == users &&
                      stage.physical_units.size() == users &&
                      stage.edge_ondemand.size() == users &&
                      stage.outsource_units.size() == users,
                  "scenario stage rows != user count");
    for (std::size_t w = 0; w < users; ++w) {
      require_shape(
          stage.cyber_units[w].size() == cat.cyber.size() &&
              stage.physical_units[w].size() == cat.physical.size() &&
              stage.edge_ondemand[w].size() == cat.edge.size(),
          "scenario stage columns != catalog size");
    }
  }

  check_units(plan.first.cyber_units, "reserved cyber");
  check_units(plan.first.physical_units, "reserved physical");
  check_units(plan.first.people_units, "reserved people");
  for (const auto& row : plan.first.edge_reserved)
    for (auto b : row)
      if (b > 1)
        throw InfeasiblePlanError("edge reservation flags must be 0 or 1");
  for (const auto& stage : plan.second) {
    check_units(stage.cyber_units, "on-demand cyber");
    check_units(stage.physical_units, "on-demand physical");
    for (const auto& row : stage.edge_ondemand)
      for (auto b : row)
        if (b > 1)
          throw InfeasiblePlanError("edge on-demand flags must be 0 or 1");
    for (auto o : stage.outsource_units)
      if (o < 0)
        throw InfeasiblePlanError("outsource units must be nonnegative");
  }

  // A server is reserved by at most one user.
  for (std::size_t z = 0; z < cat.edge.size(); ++z) {
    int owners = 0;
    for (std::size_t w = 0; w < users; ++w)
      owners += plan.first.edge_reserved[w][z];
    if (owners > 1) {
      throw InfeasiblePlanError("server " + std::to_string(z) +
                                " reserved by " + std::to_string(owners) +
                                " users");
    }
  }

  // Reserved staff hours stay within each person's capacity.
  for (std::size_t y = 0; y < cat.people.size(); ++y) {
    std::int64_t units = 0;
    for (std::size_t w = 0; w < users; ++w)
      units += plan.first.people_units[w][y];
    const double hours = static_cast<double>(units) * in.quantum.hours;
    if (hours > cat.people[y].capacity_hours + 1e-9) {
      throw InfeasiblePlanError(
          "person " + std::to_string(y) + " reserved for " +
          std::to_string(hours) + "h, over capacity " +
          std::to_string(cat.people[y].capacity_hours) + "h");
    }
  }

  for (std::size_t s = 0; s < scenarios; ++s) {
    const auto& stage = plan.second[s];
    // At most one on-demand subscriber per server, and no user subscribes to
    // one server under both plans.
    for (std::size_t z = 0; z < cat.edge.size(); ++z) {
      int uses = 0;
      for (std::size_t w = 0; w < users; ++w) {
        uses += stage.edge_ondemand[w][z];
        if (plan.first.edge_reserved[w][z] && stage.edge_ondemand[w][z]) {
          throw InfeasiblePlanError(
              "server " + std::to_string(z) + " both reserved and on-demand " +
              "for user " + std::to_string(w) + " in scenario " +
              std::to_string(s));
        }
      }
      if (uses > 1) {
        throw InfeasiblePlanError("server " + std::to_string(z) +
                                  " used on demand " + std::to_string(uses) +
                                  " times in scenario " + std::to_string(s));
      }
    }
    for (std::size_t w = 0; w < users; ++w) {
      const auto& d = in.scenarios.scenarios[s].users[w];
      for (std::size_t v = 0; v < cat.cyber.size(); ++v) {
        const auto need = quantize(d.cyber_hours[v], in.quantum);
        const auto have =
            plan.first.cyber_units[w][v] + stage.cyber_units[w][v];
        if (have < need) {
          throw InfeasiblePlanError("cyber demand uncovered in " + at(s, w) +
                                    ", resource " + std::to_string(v) +
                                    " (have " + std::to_string(have) +
                                    " units, need " + std::to_string(need) +
                                    ")");
        }
      }
      for (std::size_t x = 0; x < cat.physical.size(); ++x) {
        const auto need = quantize(d.physical_hours[x], in.quantum);
        const auto have =
            plan.first.physical_units[w][x] + stage.physical_units[w][x];
        if (have < need) {
          throw InfeasiblePlanError("physical demand uncovered in " +
                                    at(s, w) + ", resource " +
                                    std::to_string(x) + " (have " +
                                    std::to_string(have) + " units, need " +
                                    std::to_string(need) + ")");
        }
      }
      for (std::size_t y = 0; y < cat.people.size(); ++y) {
        const auto need = quantize(d.people_hours[y], in.quantum);
        const std::int64_t reserved =
            d.people_available[y] ? plan.first.people_units[w][y] : 0;
        const auto have = reserved + stage.outsource_units[w];
        if (have < need) {
          throw InfeasiblePlanError("people demand uncovered in " + at(s, w) +
                                    ", person " + std::to_string(y) +
                                    " (have " + std::to_string(have) +
                                    " units, need " + std::to_string(need) +
                                    ")");
        }
      }
      double coverage = 0.0;
      for (std::size_t z = 0; z < cat.edge.size(); ++z) {
        if (plan.first.edge_reserved[w][z] || stage.edge_ondemand[w][z])
          coverage += cat.edge[z].capacity_gb;
      }
      if (coverage + 1e-9 < d.data_gb) {
        throw InfeasiblePlanError("data demand uncovered in " + at(s, w) +
                                  " (covered " + std::to_string(coverage) +
                                  " GB, need " + std::to_string(d.data_gb) +
                                  " GB)");
      }
    }
  }

  CostBreakdown out;
  out.stage1 = stage1_cost(plan.first, cat, in.quantum);
  out.stage2_per_scenario.resize(scenarios);
  for (std::size_t s = 0; s < scenarios; ++s) {
    out.stage2_per_scenario[s] = scenario_cost(plan.second[s], cat, in.quantum);
    out.stage2_expected +=
        in.scenarios.probabilities[s] * out.stage2_per_scenario[s];
  }
  out.total = out.stage1 + out.stage2_expected;
  return out;
}

}  // namespace rsvplan::domain
