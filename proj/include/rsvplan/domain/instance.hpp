// Problem-domain data: the resource catalog a provider can subscribe to, the
// demand scenarios it plans against, and the time quantum that converts
// fractional hours into the integer units the optimizer works in.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsvplan::domain {

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfeasiblePlanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Costs are dollars per hour (cyber, physical, people) or per use (edge).
struct CyberResource {
  std::string name;
  double reserve_cost = 0.0;
  double ondemand_cost = 0.0;
};

struct PhysicalResource {
  std::string name;
  double reserve_cost = 0.0;
  double ondemand_cost = 0.0;
};

struct EdgeServer {
  std::string name;
  double capacity_gb = 0.0;  // data one use can store and process
  double reserve_cost = 0.0;
  double ondemand_cost = 0.0;
};

struct PersonResource {
  std::string name;
  double capacity_hours = 0.0;  // reservable hours
  double reserve_cost = 0.0;
  double ondemand_cost = 0.0;
};

struct ResourceCatalog {
  std::vector<CyberResource> cyber;
  std::vector<PhysicalResource> physical;
  std::vector<EdgeServer> edge;
  std::vector<PersonResource> people;
  // Fallback rate (dollars/hour) for covering people demand externally when
  // reserved staff are unavailable or insufficient.
  double outsource_rate = 19.6;
};

// One user's requirements within a scenario. Vector lengths follow the
// catalog (cyber_hours[v] pairs with catalog.cyber[v], and so on).
struct UserDemand {
  std::vector<double> cyber_hours;
  std::vector<double> physical_hours;
  std::vector<double> people_hours;
  std::vector<std::uint8_t> people_available;  // 0/1 per person
  double data_gb = 0.0;
};

struct DemandScenario {
  std::vector<UserDemand> users;
};

struct ScenarioSet {
  std::vector<DemandScenario> scenarios;
  std::vector<double> probabilities;  // same length, nonnegative, sums to 1
};

// Same shape as a scenario but interpreted as a known demand.
struct DeterministicDemand {
  std::vector<UserDemand> users;
};

struct TimeQuantum {
  double hours = 0.1;
};

struct Instance {
  ResourceCatalog catalog;
  ScenarioSet scenarios;
  TimeQuantum quantum;
};

// Smallest whole number of quanta covering `hours`; tolerant of the usual
// decimal-fraction noise (0.1 + 0.2 still quantizes to 3 units, not 4).
// Negative hours throw.
std::int64_t quantize(double hours, TimeQuantum q);

// Structural and numeric validation; throws ValidationError with a message
// naming the offending field and value.
void validate(const Instance& instance);

// Probability-weighted mean demand. Availability averages are thresholded at
// 0.5 (ties count as available).
DeterministicDemand expected_demand(const ScenarioSet& set);

std::size_t num_users(const ScenarioSet& set);

}  // namespace rsvplan::domain
