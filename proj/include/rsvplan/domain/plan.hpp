// A concrete subscription decision: what is reserved up front and what is
// bought on demand in each scenario, all in integer quanta, plus its cost.
#pragma once

#include <cstdint>
#include <vector>

#include "rsvplan/domain/instance.hpp"

namespace rsvplan::domain {

struct FirstStage {
  // Reserved hour units, indexed [user][resource].
  std::vector<std::vector<std::int64_t>> cyber_units;
  std::vector<std::vector<std::int64_t>> physical_units;
  std::vector<std::vector<std::int64_t>> people_units;
  // 0/1 reservation per [user][server]; a server serves at most one user.
  std::vector<std::vector<std::uint8_t>> edge_reserved;
};

struct ScenarioStage {
  // On-demand hour units, indexed [user][resource].
  std::vector<std::vector<std::int64_t>> cyber_units;
  std::vector<std::vector<std::int64_t>> physical_units;
  std::vector<std::vector<std::uint8_t>> edge_ondemand;  // [user][server]
  std::vector<std::int64_t> outsource_units;             // per user
};

struct AllocationPlan {
  FirstStage first;
  std::vector<ScenarioStage> second;  // one per scenario
};

struct CostBreakdown {
  double stage1 = 0.0;
  double stage2_expected = 0.0;
  std::vector<double> stage2_per_scenario;
  double total = 0.0;  // stage1 + stage2_expected
};

// Shapes a zeroed plan matching the instance (users x catalog x scenarios).
AllocationPlan make_empty_plan(const Instance& instance);

double stage1_cost(const FirstStage& first, const ResourceCatalog& catalog,
                   TimeQuantum q);
double scenario_cost(const ScenarioStage& stage, const ResourceCatalog& catalog,
                     TimeQuantum q);

// Verifies the plan covers every scenario's demand and respects capacity and
// uniqueness limits, then prices it. Violations throw InfeasiblePlanError
// naming the constraint and the indices involved.
CostBreakdown evaluate_plan(const AllocationPlan& plan, const Instance& instance);

}  // namespace rsvplan::domain
