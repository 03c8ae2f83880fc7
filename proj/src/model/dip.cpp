#include <string>
#include <vector>

#include "rsvplan/model/formulation.hpp"
#include "units.hpp"

namespace rsvplan::model {

using domain::quantize;
using milp::LinearTerm;
using milp::Relation;

BuildResult build_dip(const domain::ResourceCatalog& cat,
                      const domain::DeterministicDemand& demand,
                      domain::TimeQuantum q) {
  const std::size_t W = demand.users.size();
  const std::size_t V = cat.cyber.size();
  const std::size_t X = cat.physical.size();
  const std::size_t Y = cat.people.size();
  const std::size_t Z = cat.edge.size();
  if (W == 0) throw domain::ValidationError("demand has no users");
  for (const auto& u : demand.users) {
    if (u.cyber_hours.size() != V || u.physical_hours.size() != X ||
        u.people_hours.size() != Y || u.people_available.size() != Y) {
      throw domain::ValidationError(
          "demand vector lengths do not match the catalog");
    }
  }

  VariableIndexMap map(W, V, X, Y, Z, 0);
  milp::MilpProblemBuilder b;
  std::vector<std::string> diagnostics;

  // Variables, in map order. Bounds carry the equality targets so the
  // branch-and-bound domains stay finite.
  for (std::size_t w = 0; w < W; ++w) {
    const auto& u = demand.users[w];
    for (std::size_t v = 0; v < V; ++v) {
      const auto units = quantize(u.cyber_hours[v], q);
      b.add_integer(0, static_cast<double>(units),
                    "reserve_cyber[w" + std::to_string(w) + "][v" +
                        std::to_string(v) + "]");
    }
  }
  for (std::size_t w = 0; w < W; ++w) {
    const auto& u = demand.users[w];
    for (std::size_t x = 0; x < X; ++x) {
      const auto units = quantize(u.physical_hours[x], q);
      b.add_integer(0, static_cast<double>(units),
                    "reserve_physical[w" + std::to_string(w) + "][x" +
                        std::to_string(x) + "]");
    }
  }
  for (std::size_t w = 0; w < W; ++w) {
    const auto& u = demand.users[w];
    for (std::size_t y = 0; y < Y; ++y) {
      const auto units = u.people_available[y] ? quantize(u.people_hours[y], q)
                                               : 0;
      b.add_integer(0, static_cast<double>(units),
                    "reserve_people[w" + std::to_string(w) + "][y" +
                        std::to_string(y) + "]");
    }
  }
  for (std::size_t w = 0; w < W; ++w) {
    for (std::size_t z = 0; z < Z; ++z) {
      b.add_binary("reserve_server[w" + std::to_string(w) + "][z" +
                   std::to_string(z) + "]");
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

  // Demand rows are equalities: the reservation must match the demand
  // exactly. An unavailable person contributes coefficient 0, which leaves a
  // positive demand row unsatisfiable; that is reported, not repaired.
  for (std::size_t w = 0; w < W; ++w) {
    const auto& u = demand.users[w];
    for (std::size_t v = 0; v < V; ++v) {
      b.add_constraint({{map.cyber_r(w, v), 1.0}}, Relation::eq,
                       static_cast<double>(quantize(u.cyber_hours[v], q)),
                       "demand_cyber[w" + std::to_string(w) + "][v" +
                           std::to_string(v) + "]");
    }
    for (std::size_t x = 0; x < X; ++x) {
      b.add_constraint({{map.physical_r(w, x), 1.0}}, Relation::eq,
                       static_cast<double>(quantize(u.physical_hours[x], q)),
                       "demand_physical[w" + std::to_string(w) + "][x" +
                           std::to_string(x) + "]");
    }
    for (std::size_t y = 0; y < Y; ++y) {
      const double avail = u.people_available[y] ? 1.0 : 0.0;
      const auto units = quantize(u.people_hours[y], q);
      b.add_constraint({{map.people_r(w, y), avail}}, Relation::eq,
                       static_cast<double>(units),
                       "demand_people[w" + std::to_string(w) + "][y" +
                           std::to_string(y) + "]");
      if (!u.people_available[y] && units > 0) {
        diagnostics.push_back(
            "person " + std::to_string(y) + " is unavailable for user " +
            std::to_string(w) + " but " + std::to_string(units) +
            " units are demanded; the program is infeasible");
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

  for (std::size_t w = 0; w < W; ++w) {
    if (Z == 0) {
      if (demand.users[w].data_gb > 0.0)
        throw domain::ValidationError(
            "user " + std::to_string(w) +
            " shares data but the catalog has no edge servers");
      continue;
    }
    std::vector<LinearTerm> terms;
    terms.reserve(Z);
    for (std::size_t z = 0; z < Z; ++z)
      terms.push_back({map.edge_r(w, z), cat.edge[z].capacity_gb});
    b.add_constraint(std::move(terms), Relation::ge,
                     detail::data_cover_rhs(cat.edge, demand.users[w].data_gb),
                     "data_cover[w" + std::to_string(w) + "]");
  }

  for (std::size_t z = 0; z < Z; ++z) {
    std::vector<LinearTerm> terms;
    terms.reserve(W);
    for (std::size_t w = 0; w < W; ++w) terms.push_back({map.edge_r(w, z), 1.0});
    b.add_constraint(std::move(terms), Relation::le, 1.0,
                     "server_reserve_once[z" + std::to_string(z) + "]");
  }

  return {std::move(b).build(), map, std::move(diagnostics)};
}

}  // namespace rsvplan::model
