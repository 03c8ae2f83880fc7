#include <cmath>
#include <cstdio>
#include <string>

#include "rsvplan/domain/instance.hpp"

namespace rsvplan::domain {

namespace {

std::string fmt(const char* pattern, double value) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), pattern, value);
  return buf;
}

void check_nonneg(double v, const char* field) {
  if (!std::isfinite(v) || v < 0.0) {
    throw ValidationError(std::string(field) + " must be finite and >= 0, got " +
                          fmt("%g", v));
  }
}

void check_demand(const UserDemand& u, const ResourceCatalog& cat,
                  std::size_t scenario, std::size_t user) {
  const std::string where =
      " (scenario " + std::to_string(scenario) + ", user " +
      std::to_string(user) + ")";
  if (u.cyber_hours.size() != cat.cyber.size() ||
      u.physical_hours.size() != cat.physical.size() ||
      u.people_hours.size() != cat.people.size() ||
      u.people_available.size() != cat.people.size()) {
    throw ValidationError("demand vector lengths do not match the catalog" +
                          where);
  }
  for (double h : u.cyber_hours) check_nonneg(h, "cyber_hours");
  for (double h : u.physical_hours) check_nonneg(h, "physical_hours");
  for (double h : u.people_hours) check_nonneg(h, "people_hours");
  check_nonneg(u.data_gb, "data_gb");
  for (auto a : u.people_available) {
    if (a > 1) {
      throw ValidationError("people_available entries must be 0 or 1" + where);
    }
  }
}

}  // namespace

void validate(const Instance& in) {
  if (!(in.quantum.hours > 0.0) || !std::isfinite(in.quantum.hours)) {
    throw ValidationError("quantum_hours must be positive, got " +
                          fmt("%g", in.quantum.hours));
  }
  for (const auto& r : in.catalog.cyber) {
    check_nonneg(r.reserve_cost, "cyber reserve_cost");
    check_nonneg(r.ondemand_cost, "cyber ondemand_cost");
  }
  for (const auto& r : in.catalog.physical) {
    check_nonneg(r.reserve_cost, "physical reserve_cost");
    check_nonneg(r.ondemand_cost, "physical ondemand_cost");
  }
  for (const auto& r : in.catalog.edge) {
    if (!(r.capacity_gb > 0.0) || !std::isfinite(r.capacity_gb)) {
      throw ValidationError("edge capacity_gb must be positive, got " +
                            fmt("%g", r.capacity_gb) + " (" + r.name + ")");
    }
    check_nonneg(r.reserve_cost, "edge reserve_cost");
    check_nonneg(r.ondemand_cost, "edge ondemand_cost");
  }
  for (const auto& r : in.catalog.people) {
    check_nonneg(r.capacity_hours, "people capacity_hours");
    check_nonneg(r.reserve_cost, "people reserve_cost");
    check_nonneg(r.ondemand_cost, "people ondemand_cost");
  }
  check_nonneg(in.catalog.outsource_rate, "outsource_rate");

  const auto& set = in.scenarios;
  if (set.scenarios.empty()) {
    throw ValidationError("at least one scenario is required");
  }
  if (set.probabilities.size() != set.scenarios.size()) {
    throw ValidationError(
        "probabilities length " + std::to_string(set.probabilities.size()) +
        " does not match scenario count " +
        std::to_string(set.scenarios.size()));
  }
  double sum = 0.0;
  for (double p : set.probabilities) {
    if (!std::isfinite(p) || p < 0.0) {
      throw ValidationError("scenario probability must be in [0,1], got " +
                            fmt("%g", p));
    }
    sum += p;
  }
  if (std::fabs(sum - 1.0) > 1e-9) {
    throw ValidationError("scenario probabilities sum to " + fmt("%g", sum) +
                          ", expected 1");
  }

  const std::size_t users = set.scenarios.front().users.size();
  if (users == 0) {
    throw ValidationError("scenarios must contain at least one user");
  }
  for (std::size_t s = 0; s < set.scenarios.size(); ++s) {
    if (set.scenarios[s].users.size() != users) {
      throw ValidationError("scenario " + std::to_string(s) + " has " +
                            std::to_string(set.scenarios[s].users.size()) +
                            " users, expected " + std::to_string(users));
    }
    for (std::size_t w = 0; w < users; ++w) {
      check_demand(set.scenarios[s].users[w], in.catalog, s, w);
    }
  }
}

DeterministicDemand expected_demand(const ScenarioSet& set) {
  DeterministicDemand out;
  if (set.scenarios.empty()) return out;
  const std::size_t users = set.scenarios.front().users.size();
  out.users.resize(users);
  for (std::size_t w = 0; w < users; ++w) {
    const auto& shape = set.scenarios.front().users[w];
    auto& u = out.users[w];
    u.cyber_hours.assign(shape.cyber_hours.size(), 0.0);
    u.physical_hours.assign(shape.physical_hours.size(), 0.0);
    u.people_hours.assign(shape.people_hours.size(), 0.0);
    std::vector<double> avail(shape.people_available.size(), 0.0);
    for (std::size_t s = 0; s < set.scenarios.size(); ++s) {
      const double p = set.probabilities[s];
      const auto& d = set.scenarios[s].users[w];
      for (std::size_t v = 0; v < u.cyber_hours.size(); ++v)
        u.cyber_hours[v] += p * d.cyber_hours[v];
      for (std::size_t x = 0; x < u.physical_hours.size(); ++x)
        u.physical_hours[x] += p * d.physical_hours[x];
      for (std::size_t y = 0; y < u.people_hours.size(); ++y) {
        u.people_hours[y] += p * d.people_hours[y];
        avail[y] += p * (d.people_available[y] ? 1.0 : 0.0);
      }
      u.data_gb += p * d.data_gb;
    }
    u.people_available.resize(avail.size());
    for (std::size_t y = 0; y < avail.size(); ++y) {
      u.people_available[y] = avail[y] >= 0.5 - 1e-12 ? 1 : 0;
    }
  }
  return out;
}

std::size_t num_users(const ScenarioSet& set) {
  return set.scenarios.empty() ? 0 : set.scenarios.front().users.size();
}

}  // namespace rsvplan::domain
