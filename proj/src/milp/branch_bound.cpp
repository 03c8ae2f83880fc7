#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "rsvplan/milp/problem.hpp"
#include "simplex.hpp"

namespace rsvplan::milp {

namespace {

struct Node {
  double bound;  // parent LP objective, the best this subtree can reach
  std::int64_t id;
  int depth;
  std::vector<double> lo, up;
};

struct NodeOrder {
  // Min-bound first; deeper nodes break ties (cheap plunging), then creation
  // order so the search is fully deterministic.
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.id > b.id;
  }
};

bool snap_integral(const MilpProblem& p, std::vector<double>& x, double tol) {
  for (const auto& v : p.variables()) {
    if (v.kind == VarKind::continuous) continue;
    const double r = std::round(x[v.id]);
    if (std::fabs(x[v.id] - r) > tol) return false;
    x[v.id] = r;
  }
  return true;
}

}  // namespace

SolveResult solve_milp(const MilpProblem& p, const SolverConfig& cfg) {
  SolveResult res;
  const std::size_t n = p.num_variables();

  for (const auto& v : p.variables())
    if (v.kind != VarKind::continuous && v.upper == kInfinity)
      throw ValidationError("solve_milp: integer variable " +
                            std::to_string(v.id) + " needs a finite upper bound");

  SimplexSolver spx(p, cfg);

  Node root;
  root.bound = -kInfinity;
  root.id = 0;
  root.depth = 0;
  root.lo.resize(n);
  root.up.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    root.lo[j] = p.variables()[j].lower;
    root.up[j] = p.variables()[j].upper;
  }

  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  open.push(std::move(root));
  std::int64_t next_id = 1;

  bool have_incumbent = false;
  double best_obj = kInfinity;
  std::vector<double> best_x;

  while (!open.empty()) {
    if (have_incumbent && open.top().bound >= best_obj - 1e-9) break;
    if (res.stats.nodes >= cfg.node_limit) {
      res.status = SolveStatus::node_limit;
      if (have_incumbent) {
        res.values = std::move(best_x);
        res.objective = best_obj;
      }
      return res;
    }
    Node node = open.top();
    open.pop();

    LpOutcome lp = spx.solve(node.lo, node.up);
    ++res.stats.nodes;
    res.stats.lp_iterations += lp.iterations;

    if (lp.status == SolveStatus::infeasible) continue;
    if (lp.status == SolveStatus::unbounded) {
      res.status = SolveStatus::unbounded;
      return res;
    }
    if (have_incumbent && lp.objective >= best_obj - 1e-9) continue;

    // Most fractional integer variable; strict improvement keeps ties at the
    // lowest id because the scan runs in id order.
    int branch_var = -1;
    double branch_val = 0.0;
    double best_score = cfg.integrality_tol;
    for (const auto& v : p.variables()) {
      if (v.kind == VarKind::continuous) continue;
      const double x = lp.x[v.id];
      const double frac = x - std::floor(x);
      const double score = std::min(frac, 1.0 - frac);
      if (score > best_score + 1e-12) {
        best_score = score;
        branch_var = v.id;
        branch_val = x;
      }
    }

    if (branch_var < 0) {
      std::vector<double> x = std::move(lp.x);
      if (!snap_integral(p, x, cfg.integrality_tol)) continue;  // paranoia
      const double obj = p.objective_value(x);
      if (!have_incumbent || obj < best_obj - 1e-9) {
        have_incumbent = true;
        best_obj = obj;
        best_x = std::move(x);
      }
      continue;
    }

    Node down;
    down.bound = lp.objective;
    down.id = next_id++;
    down.depth = node.depth + 1;
    down.lo = node.lo;
    down.up = node.up;
    down.up[branch_var] = std::floor(branch_val);

    Node up = down;
    up.id = next_id++;
    up.lo[branch_var] = std::floor(branch_val) + 1.0;
    up.up[branch_var] = node.up[branch_var];

    open.push(std::move(down));
    open.push(std::move(up));
  }

  if (have_incumbent) {
    res.status = SolveStatus::optimal;
    res.values = std::move(best_x);
    res.objective = best_obj;
  } else {
    res.status = SolveStatus::infeasible;
  }
  return res;
}

}  // namespace rsvplan::milp
