#include <cmath>
#include <string>
#include <vector>

#include "rsvplan/milp/problem.hpp"
#include "simplex.hpp"

namespace rsvplan::milp {

namespace {

bool satisfies(const MilpProblem& p, const std::vector<double>& x, double tol) {
  for (const auto& c : p.constraints()) {
    double lhs = 0.0;
    for (const auto& t : c.terms) lhs += t.coef * x[t.var];
    switch (c.rel) {
      case Relation::le:
        if (lhs > c.rhs + tol) return false;
        break;
      case Relation::ge:
        if (lhs < c.rhs - tol) return false;
        break;
      case Relation::eq:
        if (std::fabs(lhs - c.rhs) > tol) return false;
        break;
    }
  }
  return true;
}

}  // namespace

SolveResult brute_force(const MilpProblem& p, std::uint64_t limit,
                        const SolverConfig& cfg) {
  SolveResult res;
  const std::size_t n = p.num_variables();

  std::vector<int> ints;
  std::vector<std::int64_t> lo, hi;
  bool has_continuous = false;
  for (const auto& v : p.variables()) {
    if (v.kind == VarKind::continuous) {
      has_continuous = true;
      continue;
    }
    if (v.upper == kInfinity)
      throw ValidationError("brute_force: integer variable " +
                            std::to_string(v.id) + " needs a finite upper bound");
    ints.push_back(v.id);
    lo.push_back(static_cast<std::int64_t>(std::ceil(v.lower - 1e-9)));
    hi.push_back(static_cast<std::int64_t>(std::floor(v.upper + 1e-9)));
    if (lo.back() > hi.back()) {
      res.status = SolveStatus::infeasible;
      return res;
    }
  }

  double space = 1.0;
  for (std::size_t k = 0; k < ints.size(); ++k) {
    space *= static_cast<double>(hi[k] - lo[k] + 1);
    if (space > static_cast<double>(limit))
      throw EnumerationLimitError(
          "brute_force: assignment space exceeds limit of " +
          std::to_string(limit));
  }

  SimplexSolver spx(p, cfg);
  std::vector<double> node_lo(n), node_up(n);
  for (std::size_t j = 0; j < n; ++j) {
    node_lo[j] = p.variables()[j].lower;
    node_up[j] = p.variables()[j].upper;
  }

  std::vector<std::int64_t> cur = lo;
  bool have_best = false;
  double best_obj = kInfinity;
  std::vector<double> best_x;
  std::vector<double> x(n, 0.0);

  for (;;) {
    ++res.stats.nodes;
    if (has_continuous) {
      for (std::size_t k = 0; k < ints.size(); ++k) {
        node_lo[ints[k]] = static_cast<double>(cur[k]);
        node_up[ints[k]] = static_cast<double>(cur[k]);
      }
      LpOutcome leaf = spx.solve(node_lo, node_up);
      res.stats.lp_iterations += leaf.iterations;
      if (leaf.status == SolveStatus::unbounded) {
        res.status = SolveStatus::unbounded;
        return res;
      }
      if (leaf.status == SolveStatus::optimal && leaf.objective < best_obj - 1e-12) {
        have_best = true;
        best_obj = leaf.objective;
        best_x = leaf.x;
        for (std::size_t k = 0; k < ints.size(); ++k)
          best_x[ints[k]] = static_cast<double>(cur[k]);
      }
    } else {
      for (std::size_t k = 0; k < ints.size(); ++k)
        x[ints[k]] = static_cast<double>(cur[k]);
      if (satisfies(p, x, cfg.feasibility_tol)) {
        const double obj = p.objective_value(x);
        if (obj < best_obj - 1e-12) {
          have_best = true;
          best_obj = obj;
          best_x = x;
        }
      }
    }

    // Odometer, last variable fastest.
    std::size_t k = ints.size();
    while (k > 0) {
      --k;
      if (cur[k] < hi[k]) {
        ++cur[k];
        for (std::size_t j = k + 1; j < ints.size(); ++j) cur[j] = lo[j];
        break;
      }
      if (k == 0) {
        k = SIZE_MAX;
        break;
      }
    }
    if (ints.empty() || k == SIZE_MAX) break;
  }

  if (have_best) {
    res.status = SolveStatus::optimal;
    res.values = std::move(best_x);
    res.objective = best_obj;
  } else {
    res.status = SolveStatus::infeasible;
  }
  return res;
}

}  // namespace rsvplan::milp
