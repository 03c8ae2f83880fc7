// Seeded generators for small random MILP instances, shared by the unit and
// acceptance suites. All draws go through explicit modulo-free helpers so the
// streams are identical on every platform.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rsvplan/milp/problem.hpp"

namespace rsvplan::testsupport {

inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  // Rejection sampling on the top bits; n is tiny here so this is cheap.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % n;
}

inline std::int64_t draw_int(std::mt19937_64& rng, std::int64_t lo,
                             std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  draw_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Pure-integer instance: <= max_vars integer variables, every domain has at
// most 4 values, coefficients and bounds small. Roughly a third come out
// infeasible, which both solvers must agree on.
inline milp::MilpProblem random_integer_instance(std::uint64_t seed,
                                                 int max_vars = 12) {
  std::mt19937_64 rng(seed);
  milp::MilpProblemBuilder b;

  const int nv = static_cast<int>(draw_int(rng, 2, max_vars));
  std::vector<std::int64_t> lo(nv), hi(nv);
  for (int j = 0; j < nv; ++j) {
    if (draw_int(rng, 0, 2) == 0) {
      lo[j] = 0;
      hi[j] = 1;
      b.add_binary();
    } else {
      lo[j] = draw_int(rng, -2, 2);
      hi[j] = lo[j] + draw_int(rng, 0, 3);
      b.add_integer(static_cast<double>(lo[j]), static_cast<double>(hi[j]));
    }
    b.add_objective(j, static_cast<double>(draw_int(rng, -5, 5)));
  }

  // A reference point inside the box keeps a good share of instances feasible.
  std::vector<std::int64_t> ref(nv);
  for (int j = 0; j < nv; ++j) ref[j] = draw_int(rng, lo[j], hi[j]);

  const int nc = static_cast<int>(draw_int(rng, 1, 2 * nv));
  for (int i = 0; i < nc; ++i) {
    std::vector<milp::LinearTerm> terms;
    std::int64_t at_ref = 0;
    for (int j = 0; j < nv; ++j) {
      if (draw_int(rng, 0, 2) == 0) continue;
      std::int64_t c = draw_int(rng, -3, 3);
      if (c == 0) continue;
      terms.push_back({j, static_cast<double>(c)});
      at_ref += c * ref[j];
    }
    if (terms.empty()) terms.push_back({0, 1.0});
    const int rel_pick = static_cast<int>(draw_int(rng, 0, 7));
    const milp::Relation rel = rel_pick == 0   ? milp::Relation::eq
                               : rel_pick <= 4 ? milp::Relation::le
                                               : milp::Relation::ge;
    // Keep the reference point feasible most of the time; a fifth of the
    // rows push against it so infeasible instances still show up.
    const bool adversarial = draw_int(rng, 0, 4) == 0;
    const std::int64_t slack = draw_int(rng, 0, 2);
    std::int64_t rhs = at_ref;
    if (rel == milp::Relation::le)
      rhs = adversarial ? at_ref - slack - 1 : at_ref + slack;
    else if (rel == milp::Relation::ge)
      rhs = adversarial ? at_ref + slack + 1 : at_ref - slack;
    else if (adversarial)
      rhs = at_ref + (draw_int(rng, 0, 1) == 0 ? 1 : -1);
    b.add_constraint(std::move(terms), rel, static_cast<double>(rhs));
  }
  return std::move(b).build();
}

// Mixed variant: adds a couple of boxed continuous variables so the oracle's
// per-leaf LP path gets exercised.
inline milp::MilpProblem random_mixed_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  milp::MilpProblemBuilder b;

  const int ni = static_cast<int>(draw_int(rng, 1, 6));
  const int nc_vars = static_cast<int>(draw_int(rng, 1, 2));
  const int nv = ni + nc_vars;
  std::vector<double> lo(nv), hi(nv);
  for (int j = 0; j < ni; ++j) {
    lo[j] = static_cast<double>(draw_int(rng, -2, 1));
    hi[j] = lo[j] + static_cast<double>(draw_int(rng, 0, 3));
    b.add_integer(lo[j], hi[j]);
    b.add_objective(j, static_cast<double>(draw_int(rng, -4, 4)));
  }
  for (int j = ni; j < nv; ++j) {
    lo[j] = 0.0;
    hi[j] = static_cast<double>(draw_int(rng, 1, 4));
    b.add_continuous(lo[j], hi[j]);
    // Nonnegative cost keeps per-leaf LPs bounded.
    b.add_objective(j, 0.25 * static_cast<double>(draw_int(rng, 0, 8)));
  }

  std::vector<double> ref(nv);
  for (int j = 0; j < nv; ++j)
    ref[j] = lo[j] + static_cast<double>(draw_int(
                         rng, 0, static_cast<std::int64_t>(hi[j] - lo[j])));

  const int nc = static_cast<int>(draw_int(rng, 1, nv + 2));
  for (int i = 0; i < nc; ++i) {
    std::vector<milp::LinearTerm> terms;
    double at_ref = 0.0;
    for (int j = 0; j < nv; ++j) {
      if (draw_int(rng, 0, 1) == 0) continue;
      double c = static_cast<double>(draw_int(rng, -3, 3));
      if (c == 0.0) continue;
      terms.push_back({j, c});
      at_ref += c * ref[j];
    }
    if (terms.empty()) terms.push_back({0, 1.0});
    const int rel_pick = static_cast<int>(draw_int(rng, 0, 5));
    const milp::Relation rel = rel_pick == 0   ? milp::Relation::eq
                               : rel_pick <= 3 ? milp::Relation::le
                                               : milp::Relation::ge;
    b.add_constraint(std::move(terms), rel,
                     at_ref + static_cast<double>(draw_int(rng, -2, 2)));
  }
  return std::move(b).build();
}

}  // namespace rsvplan::testsupport
