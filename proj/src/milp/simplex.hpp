// Internal: bounded-variable two-phase tableau simplex. One instance per
// solve loop (branch and bound reuses the buffers across nodes); not
// thread-safe across concurrent solve() calls.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rsvplan/milp/problem.hpp"

namespace rsvplan::milp {

struct LpOutcome {
  SolveStatus status = SolveStatus::infeasible;
  std::vector<double> x;  // structural values, set when optimal
  double objective = 0.0;
  std::int64_t iterations = 0;
};

class SimplexSolver {
 public:
  SimplexSolver(const MilpProblem& p, const SolverConfig& cfg);

  // lower/upper override the structural variable bounds (size = #variables).
  LpOutcome solve(std::span<const double> lower, std::span<const double> upper);

 private:
  enum : int { kAtLower = -1, kAtUpper = -2 };

  double* row(std::size_t i) { return tab_.data() + i * width_; }
  double& cost(std::size_t j) { return tab_[obj_row_ * width_ + j]; }

  bool run_phase(bool phase_one, std::int64_t& iters, SolveStatus& status);
  int pick_entering(bool bland) const;
  void pivot(int q, int r, int dir, double t);
  void flip(int q, int dir, double t);

  const MilpProblem& p_;
  SolverConfig cfg_;
  std::size_t m_ = 0;       // constraint rows
  std::size_t n_ = 0;       // structural variables
  std::size_t width_ = 0;   // structurals + slacks + artificials
  std::size_t obj_row_ = 0; // == m_
  std::vector<int> slack_col_;  // per row, -1 for equality rows
  std::vector<int> art_col_;    // per row
  std::vector<double> tab_;     // (m_+1) x width_, row obj_row_ = reduced costs
  std::vector<double> beta_;    // current value of each row's basic variable
  std::vector<int> basis_;      // row -> column
  std::vector<int> where_;      // column -> row index, kAtLower or kAtUpper
  std::vector<double> lb_, ub_; // per column
};

}  // namespace rsvplan::milp
