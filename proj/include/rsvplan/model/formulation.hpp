// Bridges the domain types and the MILP solver: builds the reservation-only
// program and the scenario-expanded stochastic program, recovers allocation
// plans from solutions, computes exact recourse for a fixed first stage, and
// provides the two baseline first-stage policies.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsvplan/domain/instance.hpp"
#include "rsvplan/domain/plan.hpp"
#include "rsvplan/milp/problem.hpp"

namespace rsvplan::model {

// Dense variable ids, stage-one blocks first, then one on-demand block per
// scenario. A map with zero scenarios describes the reservation-only
// program. Round-trips exactly with extract_plan.
class VariableIndexMap {
 public:
  VariableIndexMap() = default;
  VariableIndexMap(std::size_t users, std::size_t cyber, std::size_t physical,
                   std::size_t people, std::size_t edge, std::size_t scenarios);

  int cyber_r(std::size_t w, std::size_t v) const;
  int physical_r(std::size_t w, std::size_t x) const;
  int people_r(std::size_t w, std::size_t y) const;
  int edge_r(std::size_t w, std::size_t z) const;

  int cyber_o(std::size_t s, std::size_t w, std::size_t v) const;
  int physical_o(std::size_t s, std::size_t w, std::size_t x) const;
  int edge_o(std::size_t s, std::size_t w, std::size_t z) const;
  int outsource(std::size_t s, std::size_t w) const;

  std::size_t users() const { return users_; }
  std::size_t cyber() const { return cyber_; }
  std::size_t physical() const { return physical_; }
  std::size_t people() const { return people_; }
  std::size_t edge() const { return edge_; }
  std::size_t scenarios() const { return scenarios_; }
  std::size_t total_variables() const;

 private:
  std::size_t users_ = 0;
  std::size_t cyber_ = 0;
  std::size_t physical_ = 0;
  std::size_t people_ = 0;
  std::size_t edge_ = 0;
  std::size_t scenarios_ = 0;
  std::size_t stage1_ = 0;       // variables in the shared block
  std::size_t per_scenario_ = 0; // variables per on-demand block
};

struct BuildResult {
  milp::MilpProblem problem;
  VariableIndexMap map;
  // Non-fatal notes, e.g. a demand row made unsatisfiable by an unavailable
  // person in the reservation-only program.
  std::vector<std::string> diagnostics;
};

// Reservation-only program: every demand row is an equality, so the solution
// is the demand itself priced at reservation rates (or infeasible).
BuildResult build_dip(const domain::ResourceCatalog& catalog,
                      const domain::DeterministicDemand& demand,
                      domain::TimeQuantum quantum);

// Deterministic equivalent of the two-stage program: shared reservation
// variables plus one probability-weighted on-demand block per scenario.
BuildResult build_sip(const domain::Instance& instance);

class ExtractError : public std::runtime_error {
 public:
  ExtractError(milp::SolveStatus status, const std::string& msg)
      : std::runtime_error(msg), status_(status) {}
  milp::SolveStatus status() const { return status_; }

 private:
  milp::SolveStatus status_;
};

// Decodes an optimal solution vector into an AllocationPlan shaped by the
// map (plan.second has map.scenarios() entries). Non-optimal results throw
// ExtractError carrying the solver status.
domain::AllocationPlan extract_plan(const milp::SolveResult& result,
                                    const VariableIndexMap& map);

struct RecourseResult {
  domain::ScenarioStage stage;
  double cost = 0.0;
};

// Cheapest on-demand completion of a fixed first stage for one realized
// scenario. Hour shortfalls are closed-form; the server choice is a small
// exact cover solve. Throws InfeasiblePlanError when no completion exists.
RecourseResult solve_recourse(const domain::FirstStage& first,
                              const domain::ResourceCatalog& catalog,
                              const domain::DemandScenario& scenario,
                              domain::TimeQuantum quantum,
                              const milp::SolverConfig& config = {});

// First stage pinned to the quantized expected demand (servers picked
// greedily by descending capacity, ties to the lowest id), then exact
// recourse per scenario.
domain::AllocationPlan build_evf(const domain::Instance& instance,
                                 const milp::SolverConfig& config = {});

// Seeded uniform first stage inside the variable bounds, then exact recourse
// per scenario. Identical seeds give identical plans on any platform.
domain::AllocationPlan build_random(const domain::Instance& instance,
                                    std::uint64_t seed,
                                    const milp::SolverConfig& config = {});

}  // namespace rsvplan::model
