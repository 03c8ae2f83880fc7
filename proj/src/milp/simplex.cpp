#include "simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rsvplan/kernels.hpp"

namespace rsvplan::milp {

namespace {

constexpr double kPivotTol = 1e-11;   // reject pivots smaller than this
constexpr double kCostTol = 1e-9;     // reduced-cost optimality tolerance
constexpr double kTieTol = 1e-10;     // ratio-test tie window
constexpr double kDegenStep = 1e-11;  // step sizes below this count as degenerate
constexpr int kDegenLimit = 40;       // degenerate pivots before Bland engages
constexpr std::int64_t kHardIterCap = 5'000'000;

}  // namespace

SimplexSolver::SimplexSolver(const MilpProblem& p, const SolverConfig& cfg)
    : p_(p), cfg_(cfg) {
  m_ = p.num_constraints();
  n_ = p.num_variables();
  slack_col_.resize(m_);
  art_col_.resize(m_);
  std::size_t col = n_;
  for (std::size_t i = 0; i < m_; ++i)
    slack_col_[i] =
        p.constraints()[i].rel == Relation::eq ? -1 : static_cast<int>(col++);
  for (std::size_t i = 0; i < m_; ++i) art_col_[i] = static_cast<int>(col++);
  width_ = col;
  obj_row_ = m_;
  tab_.resize((m_ + 1) * width_);
  beta_.resize(m_);
  basis_.resize(m_);
  where_.resize(width_);
  lb_.resize(width_);
  ub_.resize(width_);
}

int SimplexSolver::pick_entering(bool bland) const {
  const double* d = tab_.data() + obj_row_ * width_;
  int best = -1;
  double best_violation = kCostTol;
  for (std::size_t j = 0; j < width_; ++j) {
    const int w = where_[j];
    if (w >= 0) continue;             // basic
    if (lb_[j] == ub_[j]) continue;   // fixed (includes retired artificials)
    double violation = 0.0;
    if (w == kAtLower && d[j] < -kCostTol)
      violation = -d[j];
    else if (w == kAtUpper && d[j] > kCostTol)
      violation = d[j];
    else
      continue;
    if (bland) return static_cast<int>(j);
    if (violation > best_violation) {
      best_violation = violation;
      best = static_cast<int>(j);
    }
  }
  return best;
}

void SimplexSolver::flip(int q, int dir, double t) {
  const std::size_t col = static_cast<std::size_t>(q);
  for (std::size_t i = 0; i < m_; ++i) {
    const double a = tab_[i * width_ + col];
    if (a != 0.0) beta_[i] -= dir * t * a;
  }
  where_[q] = dir > 0 ? kAtUpper : kAtLower;
}

void SimplexSolver::pivot(int q, int r, int dir, double t) {
  const std::size_t col = static_cast<std::size_t>(q);
  const double alpha_r = tab_[r * width_ + col];

  for (std::size_t i = 0; i < m_; ++i) {
    if (static_cast<int>(i) == r) continue;
    const double a = tab_[i * width_ + col];
    if (a != 0.0) beta_[i] -= dir * t * a;
  }

  const int leaving = basis_[r];
  const double step_dir = dir > 0 ? alpha_r : -alpha_r;
  where_[leaving] = step_dir > 0 ? kAtLower : kAtUpper;
  beta_[r] = (dir > 0 ? lb_[q] : ub_[q]) + dir * t;

  double* pr = row(r);
  kernels::scale(1.0 / alpha_r, pr, width_);
  pr[col] = 1.0;
  for (std::size_t i = 0; i <= m_; ++i) {
    if (static_cast<int>(i) == r) continue;
    double* pi = row(i);
    const double f = pi[col];
    if (f != 0.0) {
      kernels::axpy(-f, pr, pi, width_);
      pi[col] = 0.0;
    }
  }
  basis_[r] = q;
  where_[q] = r;
}

bool SimplexSolver::run_phase(bool phase_one, std::int64_t& iters,
                              SolveStatus& status) {
  bool bland = false;
  int degen = 0;
  for (;;) {
    if (phase_one) {
      // Total infeasibility is the sum of basic artificial values; once it
      // hits zero there is nothing left to improve.
      double infeas = 0.0;
      for (std::size_t i = 0; i < m_; ++i)
        if (basis_[i] >= static_cast<int>(n_) && basis_[i] >= art_col_[0] &&
            ub_[basis_[i]] != 0.0)
          infeas += beta_[i];
      if (infeas <= kCostTol * static_cast<double>(1 + m_)) return true;
    }
    if (iters >= kHardIterCap)
      throw std::runtime_error("simplex: iteration cap exceeded");

    const int q = pick_entering(bland);
    if (q < 0) return true;
    const int dir = where_[q] == kAtLower ? +1 : -1;

    double t_best = ub_[q] - lb_[q];  // bound flip distance, may be +inf
    int r_best = -1;
    const std::size_t col = static_cast<std::size_t>(q);
    for (std::size_t i = 0; i < m_; ++i) {
      const double a = tab_[i * width_ + col];
      if (std::fabs(a) <= kPivotTol) continue;
      const double rate = dir > 0 ? a : -a;  // beta_i moves by -rate * t
      double cap;
      if (rate > 0.0) {
        cap = (beta_[i] - lb_[basis_[i]]) / rate;
      } else {
        const double u = ub_[basis_[i]];
        if (u == kInfinity) continue;
        cap = (u - beta_[i]) / (-rate);
      }
      if (cap < 0.0) cap = 0.0;
      if (r_best < 0) {
        if (cap <= t_best) {
          t_best = cap;
          r_best = static_cast<int>(i);
        }
      } else if (cap < t_best - kTieTol) {
        t_best = cap;
        r_best = static_cast<int>(i);
      } else if (cap < t_best + kTieTol && basis_[i] < basis_[r_best]) {
        t_best = std::min(t_best, cap);
        r_best = static_cast<int>(i);
      }
    }

    if (t_best == kInfinity) {
      status = SolveStatus::unbounded;
      return false;
    }
    if (r_best < 0) {
      flip(q, dir, t_best);
      ++iters;
      degen = 0;
      bland = false;
      continue;
    }
    pivot(q, r_best, dir, t_best);
    ++iters;
    if (t_best <= kDegenStep) {
      if (++degen >= kDegenLimit) bland = true;
    } else {
      degen = 0;
      bland = false;
    }
  }
}

LpOutcome SimplexSolver::solve(std::span<const double> lower,
                               std::span<const double> upper) {
  LpOutcome out;
  const auto& cons = p_.constraints();

  for (std::size_t j = 0; j < n_; ++j) {
    lb_[j] = lower[j];
    ub_[j] = upper[j];
    if (lb_[j] > ub_[j]) {  // empty box, e.g. crossed branching bounds
      out.status = SolveStatus::infeasible;
      return out;
    }
  }
  for (std::size_t i = 0; i < m_; ++i) {
    if (slack_col_[i] >= 0) {
      lb_[slack_col_[i]] = 0.0;
      ub_[slack_col_[i]] = kInfinity;
    }
    lb_[art_col_[i]] = 0.0;
    ub_[art_col_[i]] = 0.0;  // activated below only where needed
  }

  std::fill(tab_.begin(), tab_.end(), 0.0);
  std::fill(where_.begin(), where_.end(), static_cast<int>(kAtLower));

  bool need_phase_one = false;
  for (std::size_t i = 0; i < m_; ++i) {
    double* pr = row(i);
    const auto& c = cons[i];
    double residual = c.rhs;
    for (const auto& t : c.terms) {
      pr[t.var] = t.coef;
      residual -= t.coef * lb_[t.var];
    }
    if (slack_col_[i] >= 0)
      pr[slack_col_[i]] = c.rel == Relation::le ? 1.0 : -1.0;

    bool slack_basic = false;
    if (slack_col_[i] >= 0) {
      if (c.rel == Relation::le && residual >= 0.0)
        slack_basic = true;
      else if (c.rel == Relation::ge && residual <= 0.0)
        slack_basic = true;
    }
    if (slack_basic) {
      // Normalize so the basic column is +1 (negate >= rows).
      if (c.rel == Relation::ge)
        kernels::scale(-1.0, pr, width_);
      basis_[i] = slack_col_[i];
      where_[slack_col_[i]] = static_cast<int>(i);
      beta_[i] = std::fabs(residual);
    } else {
      if (residual < 0.0) kernels::scale(-1.0, pr, width_);
      const int a = art_col_[i];
      pr[a] = 1.0;
      ub_[a] = kInfinity;
      basis_[i] = a;
      where_[a] = static_cast<int>(i);
      beta_[i] = std::fabs(residual);
      need_phase_one = true;
    }
  }

  out.status = SolveStatus::optimal;
  double* d = row(obj_row_);

  if (need_phase_one) {
    std::fill(d, d + width_, 0.0);
    for (std::size_t i = 0; i < m_; ++i)
      if (ub_[art_col_[i]] != 0.0) d[art_col_[i]] = 1.0;
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] == art_col_[i] && ub_[art_col_[i]] != 0.0)
        kernels::axpy(-1.0, row(i), d, width_);

    SolveStatus st = SolveStatus::optimal;
    if (!run_phase(true, out.iterations, st))
      throw std::runtime_error("simplex: phase one cannot be unbounded");

    double infeas = 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      const int b = basis_[i];
      if (b >= art_col_[0] && ub_[b] != 0.0) infeas += beta_[i];
    }
    for (std::size_t j = 0; j < width_; ++j) {
      const int w = where_[j];
      if (w == kAtUpper && j >= static_cast<std::size_t>(art_col_[0]))
        infeas += ub_[j];  // artificial parked at a nonzero upper: impossible
    }
    if (infeas > 1e-7) {
      out.status = SolveStatus::infeasible;
      return out;
    }
    // Retire the artificials: pin to zero, clamp away roundoff residue.
    for (std::size_t i = 0; i < m_; ++i) {
      ub_[art_col_[i]] = 0.0;
      if (where_[art_col_[i]] == kAtUpper) where_[art_col_[i]] = kAtLower;
      if (basis_[i] == art_col_[i]) beta_[i] = 0.0;
    }
  }

  // Phase-two reduced costs for the true objective.
  std::fill(d, d + width_, 0.0);
  const auto& obj = p_.objective();
  for (std::size_t j = 0; j < n_; ++j) d[j] = obj[j];
  for (std::size_t i = 0; i < m_; ++i) {
    const int b = basis_[i];
    const double cb = b < static_cast<int>(n_) ? obj[b] : 0.0;
    if (cb != 0.0) kernels::axpy(-cb, row(i), d, width_);
  }

  SolveStatus st = SolveStatus::optimal;
  if (!run_phase(false, out.iterations, st)) {
    out.status = st;
    return out;
  }

  out.x.resize(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    const int w = where_[j];
    double v = w == kAtLower ? lb_[j] : (w == kAtUpper ? ub_[j] : beta_[w]);
    // Snap values sitting within feasibility tolerance of a bound.
    if (v < lb_[j] + cfg_.feasibility_tol && lb_[j] != -kInfinity)
      v = lb_[j];
    else if (ub_[j] != kInfinity && v > ub_[j] - cfg_.feasibility_tol)
      v = ub_[j];
    out.x[j] = v;
  }
  out.objective = p_.objective_value(out.x);
  out.status = SolveStatus::optimal;
  return out;
}

SolveResult solve_lp(const MilpProblem& p, const SolverConfig& cfg) {
  SimplexSolver s(p, cfg);
  std::vector<double> lo(p.num_variables()), up(p.num_variables());
  for (std::size_t j = 0; j < p.num_variables(); ++j) {
    lo[j] = p.variables()[j].lower;
    up[j] = p.variables()[j].upper;
  }
  LpOutcome o = s.solve(lo, up);
  SolveResult r;
  r.status = o.status;
  r.stats.lp_iterations = o.iterations;
  if (o.status == SolveStatus::optimal) {
    r.values = std::move(o.x);
    r.objective = o.objective;
  }
  return r;
}

}  // namespace rsvplan::milp
