#include "rsvplan/milp/problem.hpp"

#include <cmath>
#include <unordered_set>

namespace rsvplan::milp {

namespace {

void check_bounds(const VariableSpec& v) {
  if (std::isnan(v.lower) || std::isnan(v.upper))
    throw ValidationError("variable " + std::to_string(v.id) + " (" + v.name +
                          "): NaN bound");
  if (!std::isfinite(v.lower))
    throw ValidationError("variable " + std::to_string(v.id) + " (" + v.name +
                          "): lower bound must be finite");
  if (v.lower > v.upper)
    throw ValidationError("variable " + std::to_string(v.id) + " (" + v.name +
                          "): lower bound exceeds upper bound");
}

}  // namespace

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal:
      return "optimal";
    case SolveStatus::infeasible:
      return "infeasible";
    case SolveStatus::unbounded:
      return "unbounded";
    case SolveStatus::node_limit:
      return "node-limit";
  }
  return "?";
}

MilpProblem MilpProblem::with_bounds(int var, double lower,
                                     double upper) const {
  if (var < 0 || static_cast<std::size_t>(var) >= vars_.size())
    throw ValidationError("with_bounds: unknown variable id " +
                          std::to_string(var));
  MilpProblem copy = *this;
  copy.vars_[var].lower = lower;
  copy.vars_[var].upper = upper;
  check_bounds(copy.vars_[var]);
  return copy;
}

double MilpProblem::objective_value(const std::vector<double>& x) const {
  double v = 0.0;
  for (std::size_t j = 0; j < obj_.size() && j < x.size(); ++j)
    v += obj_[j] * x[j];
  return v;
}

int MilpProblemBuilder::add_var(VarKind kind, double lower, double upper,
                                std::string name) {
  const int id = static_cast<int>(vars_.size());
  vars_.push_back({id, kind, lower, upper, std::move(name)});
  return id;
}

int MilpProblemBuilder::add_continuous(double lower, double upper,
                                       std::string name) {
  return add_var(VarKind::continuous, lower, upper, std::move(name));
}

int MilpProblemBuilder::add_integer(double lower, double upper,
                                    std::string name) {
  return add_var(VarKind::integer, lower, upper, std::move(name));
}

int MilpProblemBuilder::add_binary(std::string name) {
  return add_var(VarKind::binary, 0.0, 1.0, std::move(name));
}

void MilpProblemBuilder::add_constraint(std::vector<LinearTerm> terms,
                                        Relation rel, double rhs,
                                        std::string name) {
  cons_.push_back({std::move(terms), rel, rhs, std::move(name)});
}

void MilpProblemBuilder::add_objective(int var, double coef) {
  if (var < 0) throw ValidationError("objective term with negative id");
  if (static_cast<std::size_t>(var) >= obj_.size()) obj_.resize(var + 1, 0.0);
  obj_[var] += coef;
}

MilpProblem MilpProblemBuilder::build() && {
  const std::size_t n = vars_.size();
  for (const auto& v : vars_) check_bounds(v);

  if (obj_.size() > n)
    throw ValidationError("objective references unknown variable " +
                          std::to_string(obj_.size() - 1));
  for (double c : obj_)
    if (!std::isfinite(c)) throw ValidationError("non-finite objective coefficient");
  obj_.resize(n, 0.0);

  std::unordered_set<int> seen;
  for (std::size_t i = 0; i < cons_.size(); ++i) {
    const auto& c = cons_[i];
    const std::string where =
        "constraint " + (c.name.empty() ? std::to_string(i) : c.name);
    if (c.terms.empty()) throw ValidationError(where + ": no terms");
    if (!std::isfinite(c.rhs))
      throw ValidationError(where + ": non-finite right-hand side");
    seen.clear();
    for (const auto& t : c.terms) {
      if (t.var < 0 || static_cast<std::size_t>(t.var) >= n)
        throw ValidationError(where + ": unknown variable id " +
                              std::to_string(t.var));
      if (!std::isfinite(t.coef))
        throw ValidationError(where + ": non-finite coefficient");
      if (!seen.insert(t.var).second)
        throw ValidationError(where + ": duplicate variable id " +
                              std::to_string(t.var));
    }
  }

  MilpProblem p;
  p.vars_ = std::move(vars_);
  p.cons_ = std::move(cons_);
  p.obj_ = std::move(obj_);
  return p;
}

}  // namespace rsvplan::milp
