#include <algorithm>
#include <string>
#include <vector>

#include "rsvplan/model/formulation.hpp"
#include "units.hpp"

namespace rsvplan::model {

using domain::quantize;
using milp::LinearTerm;
using milp::Relation;

namespace {

std::string tag1(std::size_t w, char k, std::size_t i) {
  return "[w" + std::to_string(w) + "][" + k + std::to_string(i) + "]";
}

std::string tag(std::size_t s, std::size_t w, char k, std::size_t i) {
  return "[s" + std::to_string(s) + "]" + tag1(w, k, i);
}

}  // namespace

BuildResult build_sip(const domain::Instance& in) {
  domain::validate(in);
  const auto& cat = in.catalog;
  const auto& set = in.scenarios;
  const domain::TimeQuantum q = in.quantum;
  const std::size_t S = set.scenarios.size();
  const std::size_t W = domain::num_users(set);
  const std::size_t V = cat.cyber.size();
  const std::size_t X = cat.physical.size();
  const std::size_t Y = cat.people.size();
  const std::size_t Z = cat.edge.size();

  VariableIndexMap map(W, V, X, Y, Z, S);
  milp::MilpProblemBuilder b;

  const auto scenario_units = [&](std::size_t s, std::size_t w) -> const
      domain::UserDemand& { return set.scenarios[s].users[w]; };
  const auto max_cyber = [&](std::size_t w, std::size_t v) {
    std::int64_t m = 0;
    for (std::size_t s = 0; s < S; ++s)
      m = std::max(m, quantize(scenario_units(s, w).cyber_hours[v], q));
    return m;
  };
  const auto max_physical = [&](std::size_t w, std::size_t x) {
    std::int64_t m = 0;
    for (std::size_t s = 0; s < S; ++s)
      m = std::max(m, quantize(scenario_units(s, w).physical_hours[x], q));
    return m;
  };
  const auto max_people = [&](std::size_t w, std::size_t y) {
    std::int64_t m = 0;
    for (std::size_t s = 0; s < S; ++s)
      m = std::max(m, quantize(scenario_units(s, w).people_hours[y], q));
    return m;
  };

  // Stage-one variables. Reserved amounts above the worst-case demand are
  // never part of an optimal plan (costs are nonnegative), so the bounds cap
  // them there to keep branch-and-bound domains finite.
  for (std::size_t w = 0; w < W; ++w)
    for (std::size_t v = 0; v < V; ++v)
      b.add_integer(0, static_cast<double>(max_cyber(w, v)),
                    "reserve_cyber" + tag1(w, 'v', v));
  for (std::size_t w = 0; w < W; ++w)
    for (std::size_t x = 0; x < X; ++x)
      b.add_integer(0, static_cast<double>(max_physical(w, x)),
                    "reserve_physical" + tag1(w, 'x', x));
  for (std::size_t w = 0; w < W; ++w)
    for (std::size_t y = 0; y < Y; ++y) {
      const auto cap = detail::capacity_units(cat.people[y].capacity_hours, q);
      b.add_integer(0, static_cast<double>(std::min(cap, max_people(w, y))),
                    "reserve_people" + tag1(w, 'y', y));
    }
  for (std::size_t w = 0; w < W; ++w)
    for (std::size_t z = 0; z < Z; ++z)
      b.add_binary("reserve_server" + tag1(w, 'z', z));

  // On-demand variables, one block per scenario, bounded by that scenario's
  // own demand.
  for (std::size_t s = 0; s < S; ++s) {
    for (std::size_t w = 0; w < W; ++w)
      for (std::size_t v = 0; v < V; ++v)
        b.add_integer(
            0,
            static_cast<double>(quantize(scenario_units(s, w).cyber_hours[v], q)),
            "ondemand_cyber" + tag(s, w, 'v', v));
    for (std::size_t w = 0; w < W; ++w)
      for (std::size_t x = 0; x < X; ++x)
        b.add_integer(0,
                      static_cast<double>(
                          quantize(scenario_units(s, w).physical_hours[x], q)),
                      "ondemand_physical" + tag(s, w, 'x', x));
    for (std::size_t w = 0; w < W; ++w)
      for (std::size_t z = 0; z < Z; ++z)
        b.add_integer(0, scenario_units(s, w).data_gb > 0.0 ? 1.0 : 0.0,
                      "ondemand_server" + tag(s, w, 'z', z));
    for (std::size_t w = 0; w < W; ++w) {
      std::int64_t m = 0;
      for (std::size_t y = 0; y < Y; ++y)
        m = std::max(m, quantize(scenario_units(s, w).people_hours[y], q));
      b.add_integer(0, static_cast<double>(m),
                    "outsource[s" + std::to_string(s) + "][w" +
                        std::to_string(w) + "]");
    }
  }

  for (std::size_t w = 0; w < W; ++w) {
    for (std::size_t v = 0; v < V; ++v)
      b.add_objective(map.cyber_r(w, v), q.hours * cat.cyber[v].reserve_cost);
    for (std::size_t x = 0; x < X; ++x)
      b.add_objective(map.physical_r(w, x),
                      q.hours * cat.physical[x].reserve_cost);
    for (std::size_t y = 0; y < Y; ++y)
      b.add_objective(map.people_r(w, y), q.hours * cat.people[y].reserve_cost);
    for (std::size_t z = 0; z < Z; ++z)
      b.add_objective(map.edge_r(w, z), cat.edge[z].reserve_cost);
  }
  for (std::size_t s = 0; s < S; ++s) {
    const double p = set.probabilities[s];
    for (std::size_t w = 0; w < W; ++w) {
      for (std::size_t v = 0; v < V; ++v)
        b.add_objective(map.cyber_o(s, w, v),
                        p * q.hours * cat.cyber[v].ondemand_cost);
      for (std::size_t x = 0; x < X; ++x)
        b.add_objective(map.physical_o(s, w, x),
                        p * q.hours * cat.physical[x].ondemand_cost);
      for (std::size_t z = 0; z < Z; ++z)
        b.add_objective(map.edge_o(s, w, z), p * cat.edge[z].ondemand_cost);
      b.add_objective(map.outsource(s, w), p * q.hours * cat.outsource_rate);
    }
  }

  // Demand coverage: reservation plus that scenario's on-demand purchase.
  for (std::size_t s = 0; s < S; ++s) {
    for (std::size_t w = 0; w < W; ++w) {
      const auto& u = scenario_units(s, w);
      for (std::size_t v = 0; v < V; ++v)
        b.add_constraint(
            {{map.cyber_r(w, v), 1.0}, {map.cyber_o(s, w, v), 1.0}},
            Relation::ge, static_cast<double>(quantize(u.cyber_hours[v], q)),
            "cover_cyber" + tag(s, w, 'v', v));
      for (std::size_t x = 0; x < X; ++x)
        b.add_constraint(
            {{map.physical_r(w, x), 1.0}, {map.physical_o(s, w, x), 1.0}},
            Relation::ge, static_cast<double>(quantize(u.physical_hours[x], q)),
            "cover_physical" + tag(s, w, 'x', x));
      for (std::size_t y = 0; y < Y; ++y) {
        std::vector<LinearTerm> terms;
        if (u.people_available[y]) terms.push_back({map.people_r(w, y), 1.0});
        terms.push_back({map.outsource(s, w), 1.0});
        b.add_constraint(std::move(terms), Relation::ge,
                         static_cast<double>(quantize(u.people_hours[y], q)),
                         "cover_people" + tag(s, w, 'y', y));
      }
    }
  }

  for (std::size_t y = 0; y < Y; ++y) {
    std::vector<LinearTerm> terms;
    terms.reserve(W);
    for (std::size_t w = 0; w < W; ++w) terms.push_back({map.people_r(w, y), 1.0});
    b.add_constraint(std::move(terms), Relation::le,
                     static_cast<double>(
                         detail::capacity_units(cat.people[y].capacity_hours, q)),
                     "staff_capacity[y" + std::to_string(y) + "]");
  }

  for (std::size_t z = 0; z < Z; ++z) {
    std::vector<LinearTerm> terms;
    terms.reserve(W);
    for (std::size_t w = 0; w < W; ++w) terms.push_back({map.edge_r(w, z), 1.0});
    b.add_constraint(std::move(terms), Relation::le, 1.0,
                     "server_reserve_once[z" + std::to_string(z) + "]");
  }

  for (std::size_t s = 0; s < S; ++s)
    for (std::size_t z = 0; z < Z; ++z) {
      std::vector<LinearTerm> terms;
      terms.reserve(W);
      for (std::size_t w = 0; w < W; ++w)
        terms.push_back({map.edge_o(s, w, z), 1.0});
      b.add_constraint(std::move(terms), Relation::le, 1.0,
                       "server_ondemand_once[s" + std::to_string(s) + "][z" +
                           std::to_string(z) + "]");
    }

  // One user cannot hold the same server under both plans in one scenario.
  for (std::size_t s = 0; s < S; ++s)
    for (std::size_t w = 0; w < W; ++w)
      for (std::size_t z = 0; z < Z; ++z)
        b.add_constraint(
            {{map.edge_r(w, z), 1.0}, {map.edge_o(s, w, z), 1.0}},
            Relation::le, 1.0, "server_plan_once" + tag(s, w, 'z', z));

  for (std::size_t s = 0; s < S; ++s)
    for (std::size_t w = 0; w < W; ++w) {
      const double need = scenario_units(s, w).data_gb;
      if (Z == 0) {
        if (need > 0.0)
          throw domain::ValidationError(
              "user " + std::to_string(w) + " shares data in scenario " +
              std::to_string(s) + " but the catalog has no edge servers");
        continue;
      }
      std::vector<LinearTerm> terms;
      terms.reserve(2 * Z);
      for (std::size_t z = 0; z < Z; ++z)
        terms.push_back({map.edge_r(w, z), cat.edge[z].capacity_gb});
      for (std::size_t z = 0; z < Z; ++z)
        terms.push_back({map.edge_o(s, w, z), cat.edge[z].capacity_gb});
      b.add_constraint(std::move(terms), Relation::ge,
                       detail::data_cover_rhs(cat.edge, need),
                       "data_cover[s" + std::to_string(s) + "][w" +
                           std::to_string(w) + "]");
    }

  return {std::move(b).build(), map, {}};
}

}  // namespace rsvplan::model
