#include <cmath>
#include <string>

#include "rsvplan/model/formulation.hpp"

namespace rsvplan::model {

domain::AllocationPlan extract_plan(const milp::SolveResult& result,
                                    const VariableIndexMap& map) {
  if (result.status != milp::SolveStatus::optimal || !result.has_solution()) {
    throw ExtractError(result.status,
                       "cannot extract a plan from solver status '" +
                           std::string(milp::to_string(result.status)) + "'");
  }
  if (result.values.size() != map.total_variables()) {
    throw ExtractError(result.status,
                       "solution size does not match the variable map");
  }
  const auto& x = result.values;
  const auto units = [&](int id) { return std::llround(x[id]); };
  const auto flag = [&](int id) {
    return static_cast<std::uint8_t>(x[id] > 0.5 ? 1 : 0);
  };

  domain::AllocationPlan plan;
  plan.first.cyber_units.assign(map.users(),
                                std::vector<std::int64_t>(map.cyber(), 0));
  plan.first.physical_units.assign(map.users(),
                                   std::vector<std::int64_t>(map.physical(), 0));
  plan.first.people_units.assign(map.users(),
                                 std::vector<std::int64_t>(map.people(), 0));
  plan.first.edge_reserved.assign(map.users(),
                                  std::vector<std::uint8_t>(map.edge(), 0));
  for (std::size_t w = 0; w < map.users(); ++w) {
    for (std::size_t v = 0; v < map.cyber(); ++v)
      plan.first.cyber_units[w][v] = units(map.cyber_r(w, v));
    for (std::size_t xx = 0; xx < map.physical(); ++xx)
      plan.first.physical_units[w][xx] = units(map.physical_r(w, xx));
    for (std::size_t y = 0; y < map.people(); ++y)
      plan.first.people_units[w][y] = units(map.people_r(w, y));
    for (std::size_t z = 0; z < map.edge(); ++z)
      plan.first.edge_reserved[w][z] = flag(map.edge_r(w, z));
  }

  plan.second.resize(map.scenarios());
  for (std::size_t s = 0; s < map.scenarios(); ++s) {
    auto& stage = plan.second[s];
    stage.cyber_units.assign(map.users(),
                             std::vector<std::int64_t>(map.cyber(), 0));
    stage.physical_units.assign(map.users(),
                                std::vector<std::int64_t>(map.physical(), 0));
    stage.edge_ondemand.assign(map.users(),
                               std::vector<std::uint8_t>(map.edge(), 0));
    stage.outsource_units.assign(map.users(), 0);
    for (std::size_t w = 0; w < map.users(); ++w) {
      for (std::size_t v = 0; v < map.cyber(); ++v)
        stage.cyber_units[w][v] = units(map.cyber_o(s, w, v));
      for (std::size_t xx = 0; xx < map.physical(); ++xx)
        stage.physical_units[w][xx] = units(map.physical_o(s, w, xx));
      for (std::size_t z = 0; z < map.edge(); ++z)
        stage.edge_ondemand[w][z] = flag(map.edge_o(s, w, z));
      stage.outsource_units[w] = units(map.outsource(s, w));
    }
  }
  return plan;
}

}  // namespace rsvplan::model
