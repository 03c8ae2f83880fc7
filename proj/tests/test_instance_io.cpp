#include "doctest.h"

#include <string>

#include "rsvplan/domain/instance_json.hpp"

using namespace rsvplan::domain;

namespace {

const char* kMinimal = R"({
  "schema_version": 1,
  "quantum_hours": 0.1,
  "catalog": {
    "cyber": [{"name": "app", "reserve_cost_per_hour": 0.017,
               "ondemand_cost_per_hour": 0.035}],
    "physical": [{"name": "room", "reserve_cost_per_hour": 3.5,
                  "ondemand_cost_per_hour": 4.0}],
    "edge": [{"name": "srv", "capacity_gb": 1.0,
              "reserve_cost_per_use": 0.07625,
              "ondemand_cost_per_use": 0.13875}],
    "people": [{"name": "t1", "capacity_hours": 40.0,
                "reserve_cost_per_hour": 25.0,
                "ondemand_cost_per_hour": 19.6}],
    "outsource_rate_per_hour": 19.6
  },
  "scenarios": [
    {"probability": 0.6,
     "users": [{"cyber_hours": [0.3], "physical_hours": [0.3],
                "people_hours": [0.4], "people_available": [true],
                "data_gb": 0.5}]},
    {"probability": 0.4,
     "users": [{"cyber_hours": [0.1], "physical_hours": [0.1],
                "people_hours": [0.2], "people_available": [true],
                "data_gb": 0.7}]}
  ]
})";

std::string patched(const std::string& from, const std::string& to) {
  std::string text = kMinimal;
  auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  text.replace(pos, from.size(), to);
  return text;
}

}  // namespace

TEST_CASE("parse_instance: reads the full schema") {
  auto file = parse_instance(kMinimal);
  const auto& in = file.instance;
  CHECK(in.quantum.hours == doctest::Approx(0.1));
  REQUIRE(in.catalog.cyber.size() == 1);
  CHECK(in.catalog.cyber[0].name == "app");
  CHECK(in.catalog.cyber[0].reserve_cost == doctest::Approx(0.017));
  CHECK(in.catalog.edge[0].capacity_gb == doctest::Approx(1.0));
  CHECK(in.catalog.people[0].capacity_hours == doctest::Approx(40.0));
  CHECK(in.catalog.outsource_rate == doctest::Approx(19.6));
  REQUIRE(in.scenarios.scenarios.size() == 2);
  CHECK(in.scenarios.probabilities[1] == doctest::Approx(0.4));
  CHECK(in.scenarios.scenarios[1].users[0].data_gb == doctest::Approx(0.7));
  CHECK(in.scenarios.scenarios[0].users[0].people_available[0] == 1);
  CHECK_FALSE(file.experiments.threshold_step.has_value());
}

TEST_CASE("parse_instance: rejects unknown keys at any depth") {
  CHECK_THROWS_AS(parse_instance(patched("\"quantum_hours\"",
                                         "\"quantum\": 1, \"quantum_hours\"")),
                  ValidationError);
  CHECK_THROWS_AS(parse_instance(patched("\"capacity_gb\": 1.0,",
                                         "\"cap\": 1.0, \"capacity_gb\": 1.0,")),
                  ValidationError);
  CHECK_THROWS_AS(parse_instance(patched("\"data_gb\": 0.5",
                                         "\"data_gb\": 0.5, \"extra\": 0")),
                  ValidationError);
  try {
    parse_instance(patched("\"probability\": 0.6,",
                           "\"probability\": 0.6, \"weight\": 1,"));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("weight") != std::string::npos);
    CHECK(msg.find("scenarios[0]") != std::string::npos);
  }
}

TEST_CASE("parse_instance: reports missing keys and wrong types by path") {
  try {
    parse_instance(patched("\"quantum_hours\": 0.1,", ""));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("quantum_hours") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_instance(patched("\"schema_version\": 1",
                                         "\"schema_version\": 2")),
                  ValidationError);
  CHECK_THROWS_AS(parse_instance(patched("[true]", "[1]")), ValidationError);
  CHECK_THROWS_AS(parse_instance(patched("\"quantum_hours\": 0.1",
                                         "\"quantum_hours\": \"0.1\"")),
                  ValidationError);
  CHECK_THROWS_AS(parse_instance("{not json"), ValidationError);
}

TEST_CASE("parse_instance: validates the decoded instance") {
  // Probabilities that do not sum to one are caught after decoding.
  CHECK_THROWS_AS(parse_instance(patched("\"probability\": 0.4",
                                         "\"probability\": 0.5")),
                  ValidationError);
}

TEST_CASE("serialize_instance: round-trips exactly") {
  auto file = parse_instance(kMinimal);
  file.experiments.threshold_step = 0.01;
  file.experiments.probability_grid = {0.0, 0.25, 0.5, 0.75, 1.0};
  file.experiments.multipliers = {0.0, 0.5, 1.0, 1.5, 2.0};
  file.experiments.random_seeds = {1, 2, 3};
  file.experiments.base_seed = 42;

  const std::string text = serialize_instance(file);
  auto again = parse_instance(text);
  CHECK(serialize_instance(again) == text);
  CHECK(again.instance.catalog.cyber[0].reserve_cost == doctest::Approx(0.017));
  REQUIRE(again.experiments.probability_grid.has_value());
  CHECK(again.experiments.probability_grid->size() == 5);
  CHECK(again.experiments.base_seed == 42);
  CHECK(again.experiments.random_seeds->size() == 3);
}

TEST_CASE("load_instance: missing file names the path") {
  try {
    load_instance("/nonexistent/foo.json");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("/nonexistent/foo.json") !=
          std::string::npos);
  }
}
