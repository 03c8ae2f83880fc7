#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "rsvplan/model/formulation.hpp"
#include "units.hpp"

namespace rsvplan::model {

using domain::quantize;

namespace {

// Uniform draw from {0, ..., n} by rejection, so results do not depend on a
// standard library's distribution implementation.
std::uint64_t draw_upto(std::mt19937_64& rng, std::uint64_t n) {
  if (n == std::numeric_limits<std::uint64_t>::max()) return rng();
  const std::uint64_t span = n + 1;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % span;
}

void fill_recourse(domain::AllocationPlan& plan, const domain::Instance& in,
                   const milp::SolverConfig& cfg) {
  plan.second.clear();
  plan.second.reserve(in.scenarios.scenarios.size());
  for (const auto& scenario : in.scenarios.scenarios)
    plan.second.push_back(
        solve_recourse(plan.first, in.catalog, scenario, in.quantum, cfg)
            .stage);
}

}  // namespace

domain::AllocationPlan build_evf(const domain::Instance& in,
                                 const milp::SolverConfig& cfg) {
  domain::validate(in);
  const auto& cat = in.catalog;
  const auto expected = domain::expected_demand(in.scenarios);
  const std::size_t W = expected.users.size();
  const std::size_t Z = cat.edge.size();

  auto plan = domain::make_empty_plan(in);
  for (std::size_t w = 0; w < W; ++w) {
    const auto& u = expected.users[w];
    for (std::size_t v = 0; v < u.cyber_hours.size(); ++v)
      plan.first.cyber_units[w][v] = quantize(u.cyber_hours[v], in.quantum);
    for (std::size_t x = 0; x < u.physical_hours.size(); ++x)
      plan.first.physical_units[w][x] =
          quantize(u.physical_hours[x], in.quantum);
    for (std::size_t y = 0; y < u.people_hours.size(); ++y)
      plan.first.people_units[w][y] = quantize(u.people_hours[y], in.quantum);
  }

  for (std::size_t y = 0; y < cat.people.size(); ++y) {
    std::int64_t total = 0;
    for (std::size_t w = 0; w < W; ++w) total += plan.first.people_units[w][y];
    const auto cap = detail::capacity_units(cat.people[y].capacity_hours,
                                            in.quantum);
    if (total > cap) {
      throw domain::ValidationError(
          "mean demand on person " + std::to_string(y) + " needs " +
          std::to_string(total) + " units, over the capacity of " +
          std::to_string(cap));
    }
  }

  // Servers by descending capacity, ties to the lowest id; users claim from
  // the front of what is left until their mean data demand is covered.
  std::vector<std::size_t> order(Z);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return cat.edge[a].capacity_gb > cat.edge[b].capacity_gb;
                   });
  std::vector<bool> taken(Z, false);
  for (std::size_t w = 0; w < W; ++w) {
    double need = expected.users[w].data_gb;
    for (std::size_t z : order) {
      if (need <= 1e-9) break;
      if (taken[z]) continue;
      taken[z] = true;
      plan.first.edge_reserved[w][z] = 1;
      need -= cat.edge[z].capacity_gb;
    }
    if (need > 1e-9) {
      throw domain::ValidationError(
          "mean data demand of user " + std::to_string(w) +
          " exceeds the remaining edge capacity");
    }
  }

  fill_recourse(plan, in, cfg);
  return plan;
}

domain::AllocationPlan build_random(const domain::Instance& in,
                                    std::uint64_t seed,
                                    const milp::SolverConfig& cfg) {
  domain::validate(in);
  const auto& cat = in.catalog;
  const auto& set = in.scenarios;
  const std::size_t S = set.scenarios.size();
  const std::size_t W = domain::num_users(set);
  const std::size_t Z = cat.edge.size();

  std::mt19937_64 rng(seed);
  auto plan = domain::make_empty_plan(in);

  // Draw order is part of the contract: users ascending; within a user,
  // cyber, physical, people, then servers, each by ascending id.
  const auto max_units = [&](auto pick, std::size_t w, std::size_t i) {
    std::int64_t m = 0;
    for (std::size_t s = 0; s < S; ++s)
      m = std::max(m, quantize(pick(set.scenarios[s].users[w], i), in.quantum));
    return m;
  };
  const auto cyber_hours = [](const domain::UserDemand& u, std::size_t v) {
    return u.cyber_hours[v];
  };
  const auto physical_hours = [](const domain::UserDemand& u, std::size_t x) {
    return u.physical_hours[x];
  };
  const auto people_hours = [](const domain::UserDemand& u, std::size_t y) {
    return u.people_hours[y];
  };

  std::vector<std::int64_t> staff_left(cat.people.size());
  for (std::size_t y = 0; y < cat.people.size(); ++y)
    staff_left[y] = detail::capacity_units(cat.people[y].capacity_hours,
                                           in.quantum);
  std::vector<bool> taken(Z, false);

  for (std::size_t w = 0; w < W; ++w) {
    for (std::size_t v = 0; v < cat.cyber.size(); ++v)
      plan.first.cyber_units[w][v] = static_cast<std::int64_t>(
          draw_upto(rng, static_cast<std::uint64_t>(max_units(cyber_hours, w, v))));
    for (std::size_t x = 0; x < cat.physical.size(); ++x)
      plan.first.physical_units[w][x] = static_cast<std::int64_t>(draw_upto(
          rng, static_cast<std::uint64_t>(max_units(physical_hours, w, x))));
    for (std::size_t y = 0; y < cat.people.size(); ++y) {
      const auto cap = std::min(max_units(people_hours, w, y), staff_left[y]);
      const auto units = static_cast<std::int64_t>(
          draw_upto(rng, static_cast<std::uint64_t>(cap)));
      plan.first.people_units[w][y] = units;
      staff_left[y] -= units;
    }
    for (std::size_t z = 0; z < Z; ++z) {
      const bool flip = draw_upto(rng, 1) == 1;
      if (flip && !taken[z]) {
        taken[z] = true;
        plan.first.edge_reserved[w][z] = 1;
      }
    }
  }

  fill_recourse(plan, in, cfg);
  return plan;
}

}  // namespace rsvplan::model
