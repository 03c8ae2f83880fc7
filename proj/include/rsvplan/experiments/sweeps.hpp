// Parameter sweeps over the stochastic program: cost structure against a
// fixed reservation level, per-resource plan choice against the busy-day
// probability, the probability threshold where a resource flips to the
// reservation plan, and the three-scheme cost comparison.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsvplan/domain/instance.hpp"
#include "rsvplan/milp/problem.hpp"

namespace rsvplan::experiments {

enum class ResourceClass { cyber, physical, people, edge };

// A catalog position. For edge targets the sweeps treat the class as one
// pool (the twenty default servers are interchangeable, so per-server flags
// would depend on solver tie-breaks); the index is still validated.
struct ResourceId {
  ResourceClass cls = ResourceClass::cyber;
  std::size_t index = 0;
};

// Accepts "<class>[:<index>]", e.g. "cyber:2", "edge". Throws
// domain::ValidationError on anything else.
ResourceId parse_resource_id(const std::string& text);

std::string to_string(const ResourceId& id);

// A grid point's solve ended without an optimum; carries the solver status
// so callers can distinguish infeasible from a node-limit stop.
class SolveFailure : public std::runtime_error {
 public:
  SolveFailure(milp::SolveStatus status, const std::string& msg)
      : std::runtime_error(msg), status_(status) {}
  milp::SolveStatus status() const { return status_; }

 private:
  milp::SolveStatus status_;
};

struct SweepPoint {
  double grid = 0.0;
  double stage1 = 0.0;
  double stage2_expected = 0.0;
  double total = 0.0;
  std::vector<double> extras;  // parallel to SweepSeries::extra_labels
};

struct SweepSeries {
  std::string grid_label;
  std::vector<std::string> extra_labels;
  std::vector<SweepPoint> points;
  std::vector<std::string> metadata;  // "key=value" banner lines
};

// Fixes the target's first-stage variable to each grid value (whole units;
// for an edge target the 0/1 reservation flag) and solves the rest of the
// program. Requires a single-user instance. Hour grids may exceed the
// largest scenario demand; people grids are capped by the person's capacity
// and edge grids by 1.
SweepSeries sweep_reservation(const domain::Instance& instance,
                              ResourceId target,
                              const std::vector<double>& grid,
                              const milp::SolverConfig& config = {});

// Re-solves a two-scenario instance with the busy-scenario probability set
// to each grid value, recording costs and which resources the optimal plan
// reserves.
SweepSeries sweep_probability(const domain::Instance& instance,
                              const std::vector<double>& grid,
                              const milp::SolverConfig& config = {});

struct ThresholdResult {
  // Smallest scanned probability whose optimal plan reserves the target;
  // empty when the whole grid keeps it on-demand.
  std::optional<double> threshold;
  SweepSeries series;  // the scanned prefix of the grid
};

// Walks p = 0, step, 2*step, ... 1 on a two-scenario instance and stops at
// the first point whose optimum reserves the target.
ThresholdResult find_threshold(const domain::Instance& instance,
                               ResourceId target, double step,
                               const milp::SolverConfig& config = {});

struct ComparePoint {
  double multiplier = 0.0;
  double sip_total = 0.0;
  double evf_total = 0.0;
  std::vector<double> random_totals;  // one per seed, in seed order
};

struct CompareSeries {
  std::vector<std::uint64_t> seeds;
  std::vector<ComparePoint> points;
  std::vector<std::string> metadata;
};

// Scales every on-demand price (including the outsourcing rate) by each
// multiplier and prices the three schemes on the scaled instance. The
// mean-demand and random first stages ignore prices, so only their recourse
// reacts to the multiplier; the stochastic program re-optimizes fully.
CompareSeries compare_schemes(const domain::Instance& instance,
                              const std::vector<double>& multipliers,
                              const std::vector<std::uint64_t>& seeds,
                              const milp::SolverConfig& config = {});

}  // namespace rsvplan::experiments
