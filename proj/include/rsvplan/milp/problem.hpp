// Mixed-integer linear program container: minimization, sparse constraints,
// boxed variables. Problems are immutable once built; malformed input fails
// at build() with a message naming the offending piece.
#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsvplan::milp {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class VarKind { continuous, integer, binary };

struct VariableSpec {
  int id = -1;
  VarKind kind = VarKind::continuous;
  double lower = 0.0;
  double upper = kInfinity;
  std::string name;  // optional, diagnostics only
};

enum class Relation { le, eq, ge };

struct LinearTerm {
  int var = -1;
  double coef = 0.0;
};

struct LinearConstraint {
  std::vector<LinearTerm> terms;
  Relation rel = Relation::le;
  double rhs = 0.0;
  std::string name;  // optional, diagnostics only
};

class MilpProblem {
 public:
  const std::vector<VariableSpec>& variables() const { return vars_; }
  const std::vector<LinearConstraint>& constraints() const { return cons_; }
  // Dense objective, indexed by variable id.
  const std::vector<double>& objective() const { return obj_; }

  std::size_t num_variables() const { return vars_.size(); }
  std::size_t num_constraints() const { return cons_.size(); }

  // Copy with one variable's bounds replaced; validates the new bounds.
  MilpProblem with_bounds(int var, double lower, double upper) const;

  double objective_value(const std::vector<double>& x) const;

 private:
  friend class MilpProblemBuilder;
  MilpProblem() = default;
  std::vector<VariableSpec> vars_;
  std::vector<LinearConstraint> cons_;
  std::vector<double> obj_;
};

class MilpProblemBuilder {
 public:
  int add_continuous(double lower, double upper, std::string name = {});
  int add_integer(double lower, double upper, std::string name = {});
  int add_binary(std::string name = {});

  void add_constraint(std::vector<LinearTerm> terms, Relation rel, double rhs,
                      std::string name = {});
  // Accumulates: repeated calls for the same variable sum up.
  void add_objective(int var, double coef);

  std::size_t num_variables() const { return vars_.size(); }
  std::size_t num_constraints() const { return cons_.size(); }

  // Validates everything (ids in range, no duplicate terms, finite sane
  // bounds, integer variables with integral bounds) and freezes the problem.
  MilpProblem build() &&;

 private:
  int add_var(VarKind kind, double lower, double upper, std::string name);
  std::vector<VariableSpec> vars_;
  std::vector<LinearConstraint> cons_;
  std::vector<double> obj_;
};

enum class SolveStatus { optimal, infeasible, unbounded, node_limit };

std::string_view to_string(SolveStatus s);

struct SolveStats {
  std::int64_t lp_iterations = 0;
  std::int64_t nodes = 0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::infeasible;
  std::vector<double> values;  // empty unless a solution/incumbent exists
  double objective = std::numeric_limits<double>::quiet_NaN();
  SolveStats stats;
  bool has_solution() const { return !values.empty(); }
};

struct SolverConfig {
  double feasibility_tol = 1e-9;
  double integrality_tol = 1e-6;
  double objective_tol = 1e-6;
  std::int64_t node_limit = 1'000'000;
};

// LP relaxation via bounded-variable two-phase simplex. Deterministic:
// Dantzig pricing with lowest-index tie breaks, Bland's rule engaged as the
// anti-cycling fallback after a degenerate stretch.
SolveResult solve_lp(const MilpProblem& p, const SolverConfig& cfg = {});

// Best-bound branch and bound over solve_lp, branching on the most
// fractional integer variable (ties to the lowest id). Either proves
// optimality/infeasibility or stops at cfg.node_limit with the incumbent and
// status node_limit. Integer variables must have finite bounds.
SolveResult solve_milp(const MilpProblem& p, const SolverConfig& cfg = {});

class EnumerationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive oracle: enumerates every integer assignment (continuous
// variables, if any, are resolved per leaf by LP). Refuses with
// EnumerationLimitError when the assignment space exceeds `limit`.
SolveResult brute_force(const MilpProblem& p, std::uint64_t limit = 1'000'000,
                        const SolverConfig& cfg = {});

}  // namespace rsvplan::milp
