#include <cstdio>
#include <string>

#include "rsvplan/experiments/instances.hpp"

namespace rsvplan::experiments {

namespace {

domain::ResourceCatalog full_catalog() {
  domain::ResourceCatalog cat;
  cat.cyber = {{"writing", 0.017, 0.035},
               {"speaking", 0.005, 0.009},
               {"learning", 0.010, 0.014}};
  cat.physical = {{"classroom", 3.5, 4.0}};
  for (int y = 1; y <= 4; ++y)
    cat.people.push_back({"teacher" + std::to_string(y), 40.0, 25.0, 19.6});
  for (int z = 1; z <= 20; ++z) {
    char name[16];
    std::snprintf(name, sizeof name, "edge%02d", z);
    cat.edge.push_back({name, 1.0, 0.07625, 0.13875});
  }
  cat.outsource_rate = 19.6;
  return cat;
}

// One user's load for a day: the same hours on every cyber tool, classroom
// time, lesson time with one teacher, and some data to park on a server.
domain::UserDemand day_bundle(const domain::ResourceCatalog& cat,
                              std::size_t teacher, double cyber_h,
                              double class_h, double lesson_h, double data_gb,
                              bool teachers_in) {
  domain::UserDemand u;
  u.cyber_hours.assign(cat.cyber.size(), cyber_h);
  u.physical_hours.assign(cat.physical.size(), class_h);
  u.people_hours.assign(cat.people.size(), 0.0);
  u.people_available.assign(cat.people.size(), teachers_in ? 1 : 0);
  if (!cat.people.empty()) u.people_hours[teacher % cat.people.size()] = lesson_h;
  u.data_gb = data_gb;
  return u;
}

}  // namespace

domain::InstanceFile default_instance() {
  domain::InstanceFile file;
  auto& in = file.instance;
  in.quantum.hours = 0.1;
  in.catalog = full_catalog();

  domain::DemandScenario busy, light;
  for (std::size_t w = 0; w < 10; ++w) {
    busy.users.push_back(day_bundle(in.catalog, w, 0.3, 0.3, 0.4, 0.5, true));
    light.users.push_back(day_bundle(in.catalog, w, 0.1, 0.1, 0.2, 0.7, true));
  }
  in.scenarios.scenarios = {busy, light};
  in.scenarios.probabilities = {0.6, 0.4};

  file.experiments.threshold_step = 0.01;
  file.experiments.probability_grid = {{0.0, 0.25, 0.5, 0.75, 1.0}};
  file.experiments.multipliers = {{0.5, 1.0, 2.0, 3.0, 4.0}};
  file.experiments.base_seed = 1;
  return file;
}

domain::InstanceFile cost_structure_instance() {
  domain::InstanceFile file;
  auto& in = file.instance;
  in.quantum.hours = 0.1;
  in.catalog.cyber = {{"writing", 0.017, 0.035}};
  in.catalog.physical = {{"classroom", 3.5, 4.0}};
  in.catalog.people = {{"teacher1", 40.0, 25.0, 19.6}};
  in.catalog.edge = {{"edge01", 1.0, 0.07625, 0.13875}};
  in.catalog.outsource_rate = 19.6;

  domain::DemandScenario busy, light;
  busy.users.push_back(day_bundle(in.catalog, 0, 0.3, 0.3, 0.4, 0.5, true));
  light.users.push_back(day_bundle(in.catalog, 0, 0.1, 0.1, 0.2, 0.7, true));
  in.scenarios.scenarios = {busy, light};
  in.scenarios.probabilities = {0.6, 0.4};
  return file;
}

domain::InstanceFile probability_sweep_instance() {
  domain::InstanceFile file;
  auto& in = file.instance;
  in.quantum.hours = 0.1;
  in.catalog = full_catalog();

  domain::DemandScenario busy, idle;
  for (std::size_t w = 0; w < 10; ++w) {
    busy.users.push_back(day_bundle(in.catalog, w, 0.3, 0.3, 0.4, 0.5, false));
    idle.users.push_back(day_bundle(in.catalog, w, 0.0, 0.0, 0.0, 0.0, true));
  }
  in.scenarios.scenarios = {busy, idle};
  in.scenarios.probabilities = {0.6, 0.4};

  file.experiments.threshold_step = 0.01;
  file.experiments.probability_grid = {{0.0, 0.25, 0.5, 0.75, 1.0}};
  return file;
}

}  // namespace rsvplan::experiments
