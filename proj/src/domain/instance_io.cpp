#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "json.hpp"
#include "rsvplan/domain/instance_json.hpp"

namespace rsvplan::domain {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ValidationError(path + ": " + msg);
}

void check_keys(const json& j, const std::string& path,
                std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : allowed) {
      if (item.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) fail(path, "unknown key '" + item.key() + "'");
  }
}

const json& require(const json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing key '") + key + "'");
  return *it;
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

std::vector<double> as_number_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(as_number(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

UserDemand parse_user(const json& j, const std::string& path) {
  check_keys(j, path,
             {"cyber_hours", "physical_hours", "people_hours",
              "people_available", "data_gb"});
  UserDemand u;
  u.cyber_hours = as_number_array(require(j, "cyber_hours", path), path);
  u.physical_hours = as_number_array(require(j, "physical_hours", path), path);
  u.people_hours = as_number_array(require(j, "people_hours", path), path);
  const auto& avail = require(j, "people_available", path);
  if (!avail.is_array()) fail(path + ".people_available", "expected an array");
  for (std::size_t i = 0; i < avail.size(); ++i) {
    const auto& a = avail[i];
    if (!a.is_boolean())
      fail(path + ".people_available[" + std::to_string(i) + "]",
           "expected true or false");
    u.people_available.push_back(a.get<bool>() ? 1 : 0);
  }
  u.data_gb = as_number(require(j, "data_gb", path), path + ".data_gb");
  return u;
}

ResourceCatalog parse_catalog(const json& j, const std::string& path) {
  check_keys(j, path,
             {"cyber", "physical", "edge", "people", "outsource_rate_per_hour"});
  ResourceCatalog cat;
  const auto parse_name = [&](const json& r, const std::string& p) {
    const auto& n = require(r, "name", p);
    if (!n.is_string()) fail(p + ".name", "expected a string");
    return n.get<std::string>();
  };

  const auto& cyber = require(j, "cyber", path);
  if (!cyber.is_array()) fail(path + ".cyber", "expected an array");
  for (std::size_t i = 0; i < cyber.size(); ++i) {
    const std::string p = path + ".cyber[" + std::to_string(i) + "]";
    check_keys(cyber[i], p,
               {"name", "reserve_cost_per_hour", "ondemand_cost_per_hour"});
    cat.cyber.push_back(
        {parse_name(cyber[i], p),
         as_number(require(cyber[i], "reserve_cost_per_hour", p), p),
         as_number(require(cyber[i], "ondemand_cost_per_hour", p), p)});
  }

  const auto& physical = require(j, "physical", path);
  if (!physical.is_array()) fail(path + ".physical", "expected an array");
  for (std::size_t i = 0; i < physical.size(); ++i) {
    const std::string p = path + ".physical[" + std::to_string(i) + "]";
    check_keys(physical[i], p,
               {"name", "reserve_cost_per_hour", "ondemand_cost_per_hour"});
    cat.physical.push_back(
        {parse_name(physical[i], p),
         as_number(require(physical[i], "reserve_cost_per_hour", p), p),
         as_number(require(physical[i], "ondemand_cost_per_hour", p), p)});
  }

  const auto& edge = require(j, "edge", path);
  if (!edge.is_array()) fail(path + ".edge", "expected an array");
  for (std::size_t i = 0; i < edge.size(); ++i) {
    const std::string p = path + ".edge[" + std::to_string(i) + "]";
    check_keys(edge[i], p,
               {"name", "capacity_gb", "reserve_cost_per_use",
                "ondemand_cost_per_use"});
    cat.edge.push_back(
        {parse_name(edge[i], p),
         as_number(require(edge[i], "capacity_gb", p), p),
         as_number(require(edge[i], "reserve_cost_per_use", p), p),
         as_number(require(edge[i], "ondemand_cost_per_use", p), p)});
  }

  const auto& people = require(j, "people", path);
  if (!people.is_array()) fail(path + ".people", "expected an array");
  for (std::size_t i = 0; i < people.size(); ++i) {
    const std::string p = path + ".people[" + std::to_string(i) + "]";
    check_keys(people[i], p,
               {"name", "capacity_hours", "reserve_cost_per_hour",
                "ondemand_cost_per_hour"});
    cat.people.push_back(
        {parse_name(people[i], p),
         as_number(require(people[i], "capacity_hours", p), p),
         as_number(require(people[i], "reserve_cost_per_hour", p), p),
         as_number(require(people[i], "ondemand_cost_per_hour", p), p)});
  }

  cat.outsource_rate = as_number(require(j, "outsource_rate_per_hour", path),
                                 path + ".outsource_rate_per_hour");
  return cat;
}

ExperimentDefaults parse_experiments(const json& j, const std::string& path) {
  check_keys(j, path,
             {"threshold_step", "probability_grid", "multipliers",
              "random_seeds", "base_seed"});
  ExperimentDefaults e;
  if (auto it = j.find("threshold_step"); it != j.end()) {
    e.threshold_step = as_number(*it, path + ".threshold_step");
    if (!(*e.threshold_step > 0.0))
      fail(path + ".threshold_step", "must be positive");
  }
  if (auto it = j.find("probability_grid"); it != j.end()) {
    e.probability_grid = as_number_array(*it, path + ".probability_grid");
    for (double p : *e.probability_grid)
      if (p < 0.0 || p > 1.0)
        fail(path + ".probability_grid", "entries must lie in [0,1]");
  }
  if (auto it = j.find("multipliers"); it != j.end()) {
    e.multipliers = as_number_array(*it, path + ".multipliers");
    for (double m : *e.multipliers)
      if (m < 0.0) fail(path + ".multipliers", "entries must be >= 0");
  }
  if (auto it = j.find("random_seeds"); it != j.end()) {
    if (!it->is_array()) fail(path + ".random_seeds", "expected an array");
    e.random_seeds.emplace();
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto& s = (*it)[i];
      if (!s.is_number_unsigned())
        fail(path + ".random_seeds[" + std::to_string(i) + "]",
             "expected a nonnegative integer");
      e.random_seeds->push_back(s.get<std::uint64_t>());
    }
  }
  if (auto it = j.find("base_seed"); it != j.end()) {
    if (!it->is_number_unsigned())
      fail(path + ".base_seed", "expected a nonnegative integer");
    e.base_seed = it->get<std::uint64_t>();
  }
  return e;
}

}  // namespace

InstanceFile parse_instance(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("JSON parse error: ") + e.what());
  }

  check_keys(j, "$",
             {"schema_version", "quantum_hours", "catalog", "scenarios",
              "experiments"});
  const auto& ver = require(j, "schema_version", "$");
  if (!ver.is_number_integer() || ver.get<std::int64_t>() != 1)
    fail("$.schema_version", "unsupported schema version, expected 1");

  InstanceFile file;
  file.instance.quantum.hours =
      as_number(require(j, "quantum_hours", "$"), "$.quantum_hours");
  file.instance.catalog =
      parse_catalog(require(j, "catalog", "$"), "$.catalog");

  const auto& scen = require(j, "scenarios", "$");
  if (!scen.is_array()) fail("$.scenarios", "expected an array");
  for (std::size_t s = 0; s < scen.size(); ++s) {
    const std::string p = "$.scenarios[" + std::to_string(s) + "]";
    check_keys(scen[s], p, {"probability", "users"});
    file.instance.scenarios.probabilities.push_back(
        as_number(require(scen[s], "probability", p), p + ".probability"));
    const auto& users = require(scen[s], "users", p);
    if (!users.is_array()) fail(p + ".users", "expected an array");
    DemandScenario ds;
    for (std::size_t w = 0; w < users.size(); ++w)
      ds.users.push_back(
          parse_user(users[w], p + ".users[" + std::to_string(w) + "]"));
    file.instance.scenarios.scenarios.push_back(std::move(ds));
  }

  if (auto it = j.find("experiments"); it != j.end())
    file.experiments = parse_experiments(*it, "$.experiments");

  validate(file.instance);
  return file;
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string serialize_instance(const InstanceFile& file) {
  ordered_json j;
  j["schema_version"] = 1;
  j["quantum_hours"] = file.instance.quantum.hours;

  ordered_json cat;
  cat["cyber"] = ordered_json::array();
  for (const auto& r : file.instance.catalog.cyber)
    cat["cyber"].push_back({{"name", r.name},
                            {"reserve_cost_per_hour", r.reserve_cost},
                            {"ondemand_cost_per_hour", r.ondemand_cost}});
  cat["physical"] = ordered_json::array();
  for (const auto& r : file.instance.catalog.physical)
    cat["physical"].push_back({{"name", r.name},
                               {"reserve_cost_per_hour", r.reserve_cost},
                               {"ondemand_cost_per_hour", r.ondemand_cost}});
  cat["edge"] = ordered_json::array();
  for (const auto& r : file.instance.catalog.edge)
    cat["edge"].push_back({{"name", r.name},
                           {"capacity_gb", r.capacity_gb},
                           {"reserve_cost_per_use", r.reserve_cost},
                           {"ondemand_cost_per_use", r.ondemand_cost}});
  cat["people"] = ordered_json::array();
  for (const auto& r : file.instance.catalog.people)
    cat["people"].push_back({{"name", r.name},
                             {"capacity_hours", r.capacity_hours},
                             {"reserve_cost_per_hour", r.reserve_cost},
                             {"ondemand_cost_per_hour", r.ondemand_cost}});
  cat["outsource_rate_per_hour"] = file.instance.catalog.outsource_rate;
  j["catalog"] = std::move(cat);

  j["scenarios"] = ordered_json::array();
  for (std::size_t s = 0; s < file.instance.scenarios.scenarios.size(); ++s) {
    ordered_json js;
    js["probability"] = file.instance.scenarios.probabilities[s];
    js["users"] = ordered_json::array();
    for (const auto& u : file.instance.scenarios.scenarios[s].users) {
      ordered_json ju;
      ju["cyber_hours"] = u.cyber_hours;
      ju["physical_hours"] = u.physical_hours;
      ju["people_hours"] = u.people_hours;
      ju["people_available"] = ordered_json::array();
      for (auto a : u.people_available)
        ju["people_available"].push_back(a != 0);
      ju["data_gb"] = u.data_gb;
      js["users"].push_back(std::move(ju));
    }
    j["scenarios"].push_back(std::move(js));
  }

  const auto& e = file.experiments;
  if (e.threshold_step || e.probability_grid || e.multipliers ||
      e.random_seeds || e.base_seed) {
    ordered_json je;
    if (e.threshold_step) je["threshold_step"] = *e.threshold_step;
    if (e.probability_grid) je["probability_grid"] = *e.probability_grid;
    if (e.multipliers) je["multipliers"] = *e.multipliers;
    if (e.random_seeds) je["random_seeds"] = *e.random_seeds;
    if (e.base_seed) je["base_seed"] = *e.base_seed;
    j["experiments"] = std::move(je);
  }

  return j.dump(2) + "\n";
}

}  // namespace rsvplan::domain
