#include "doctest.h"

#include <string>

#include "rsvplan/domain/instance.hpp"
#include "rsvplan/domain/plan.hpp"
#include "rsvplan/milp/problem.hpp"
#include "rsvplan/model/formulation.hpp"
#include "support/domain_instances.hpp"

using namespace rsvplan;

namespace {

domain::Instance single_edge_instance(double p1) {
  domain::Instance in;
  in.catalog.edge = {{"srv", 1.0, 0.07625, 0.13875}};
  in.quantum.hours = 0.1;
  domain::UserDemand busy;
  busy.data_gb = 0.5;
  domain::UserDemand idle;
  idle.data_gb = 0.0;
  in.scenarios.scenarios = {domain::DemandScenario{{busy}},
                            domain::DemandScenario{{idle}}};
  in.scenarios.probabilities = {p1, 1.0 - p1};
  return in;
}

}  // namespace

TEST_CASE("index map: contiguous bijection over both stages") {
  model::VariableIndexMap map(2, 1, 2, 1, 3, 2);
  CHECK(map.total_variables() ==
        2 * (1 + 2 + 1 + 3) + 2 * 2 * (1 + 2 + 3 + 1));
  std::vector<bool> seen(map.total_variables(), false);
  const auto mark = [&](int id) {
    REQUIRE(id >= 0);
    REQUIRE(static_cast<std::size_t>(id) < seen.size());
    CHECK_FALSE(seen[id]);
    seen[id] = true;
  };
  for (std::size_t w = 0; w < 2; ++w) {
    for (std::size_t v = 0; v < 1; ++v) mark(map.cyber_r(w, v));
    for (std::size_t x = 0; x < 2; ++x) mark(map.physical_r(w, x));
    for (std::size_t y = 0; y < 1; ++y) mark(map.people_r(w, y));
    for (std::size_t z = 0; z < 3; ++z) mark(map.edge_r(w, z));
  }
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t w = 0; w < 2; ++w) {
      for (std::size_t v = 0; v < 1; ++v) mark(map.cyber_o(s, w, v));
      for (std::size_t x = 0; x < 2; ++x) mark(map.physical_o(s, w, x));
      for (std::size_t z = 0; z < 3; ++z) mark(map.edge_o(s, w, z));
      mark(map.outsource(s, w));
    }
  for (bool b : seen) CHECK(b);
}

TEST_CASE("build_sip: variable and constraint census") {
  // W=2, V=1, X=2, Y=1, Z=3, S=2.
  domain::Instance in;
  in.quantum.hours = 0.1;
  in.catalog.cyber = {{"c0", 1.0, 2.0}};
  in.catalog.physical = {{"p0", 1.0, 2.0}, {"p1", 1.0, 2.0}};
  in.catalog.people = {{"h0", 2.0, 1.0, 2.0}};
  in.catalog.edge = {{"e0", 1.0, 0.1, 0.2},
                     {"e1", 1.0, 0.1, 0.2},
                     {"e2", 1.0, 0.1, 0.2}};
  domain::UserDemand u;
  u.cyber_hours = {0.2};
  u.physical_hours = {0.1, 0.0};
  u.people_hours = {0.3};
  u.people_available = {1};
  u.data_gb = 0.5;
  in.scenarios.scenarios = {domain::DemandScenario{{u, u}},
                            domain::DemandScenario{{u, u}}};
  in.scenarios.probabilities = {0.6, 0.4};

  auto built = model::build_sip(in);
  const std::size_t W = 2, V = 1, X = 2, Y = 1, Z = 3, S = 2;
  CHECK(built.problem.num_variables() ==
        W * (V + X + Y + Z) + S * W * (V + X + Z + 1));
  CHECK(built.problem.num_constraints() ==
        S * W * (V + X + Y) + Y + Z + S * Z + S * W * Z + S * W);
  CHECK(built.map.total_variables() == built.problem.num_variables());
}

TEST_CASE("build_dip: census and zero demand") {
  domain::ResourceCatalog cat;
  cat.cyber = {{"c0", 1.0, 2.0}};
  cat.physical = {{"p0", 1.0, 2.0}, {"p1", 1.0, 2.0}};
  cat.people = {{"h0", 2.0, 1.0, 2.0}};
  cat.edge = {{"e0", 1.0, 0.1, 0.2}, {"e1", 1.0, 0.1, 0.2},
              {"e2", 1.0, 0.1, 0.2}};
  domain::UserDemand zero;
  zero.cyber_hours = {0.0};
  zero.physical_hours = {0.0, 0.0};
  zero.people_hours = {0.0};
  zero.people_available = {1};
  domain::DeterministicDemand demand;
  demand.users = {zero, zero};

  auto built = model::build_dip(cat, demand, domain::TimeQuantum{0.1});
  const std::size_t W = 2, V = 1, X = 2, Y = 1, Z = 3;
  CHECK(built.problem.num_variables() == W * (V + X + Y + Z));
  CHECK(built.problem.num_constraints() == W * (V + X + Y) + Y + W + Z);
  CHECK(built.diagnostics.empty());

  auto res = milp::solve_milp(built.problem);
  REQUIRE(res.status == milp::SolveStatus::optimal);
  CHECK(res.objective == doctest::Approx(0.0));
  for (double xv : res.values) CHECK(xv == doctest::Approx(0.0));
}

TEST_CASE("build_dip: half a gigabyte reserves exactly one of two servers") {
  domain::ResourceCatalog cat;
  cat.edge = {{"e0", 1.0, 0.07625, 0.13875}, {"e1", 1.0, 0.07625, 0.13875}};
  domain::UserDemand u;
  u.data_gb = 0.5;
  domain::DeterministicDemand demand;
  demand.users = {u};

  auto built = model::build_dip(cat, demand, domain::TimeQuantum{0.1});
  auto res = milp::solve_milp(built.problem);
  REQUIRE(res.status == milp::SolveStatus::optimal);
  CHECK(res.objective == doctest::Approx(0.07625).epsilon(1e-9));

  auto oracle = milp::brute_force(built.problem);
  REQUIRE(oracle.status == milp::SolveStatus::optimal);
  CHECK(res.objective == doctest::Approx(oracle.objective).epsilon(1e-9));

  const int reserved = static_cast<int>(res.values[built.map.edge_r(0, 0)] +
                                        res.values[built.map.edge_r(0, 1)] +
                                        0.5);
  CHECK(reserved == 1);
}

TEST_CASE("build_dip: 0.4 teacher hours cost 4 units at the reserve rate") {
  domain::ResourceCatalog cat;
  cat.people = {{"t0", 40.0, 25.0, 19.6}};
  domain::UserDemand u;
  u.people_hours = {0.4};
  u.people_available = {1};
  domain::DeterministicDemand demand;
  demand.users = {u};

  auto built = model::build_dip(cat, demand, domain::TimeQuantum{0.1});
  auto res = milp::solve_milp(built.problem);
  REQUIRE(res.status == milp::SolveStatus::optimal);
  CHECK(res.objective == doctest::Approx(4 * 0.1 * 25.0).epsilon(1e-9));
}

TEST_CASE("build_dip: demand on an unavailable person is diagnosed") {
  domain::ResourceCatalog cat;
  cat.people = {{"t0", 40.0, 25.0, 19.6}};
  domain::UserDemand u;
  u.people_hours = {0.4};
  u.people_available = {0};
  domain::DeterministicDemand demand;
  demand.users = {u};

  auto built = model::build_dip(cat, demand, domain::TimeQuantum{0.1});
  REQUIRE(built.diagnostics.size() == 1);
  CHECK(built.diagnostics[0].find("person 0") != std::string::npos);
  CHECK(built.diagnostics[0].find("user 0") != std::string::npos);
  auto res = milp::solve_milp(built.problem);
  CHECK(res.status == milp::SolveStatus::infeasible);
}

TEST_CASE("build_sip: single-server reserve/on-demand switch at the ratio") {
  SUBCASE("P=0.6 favors reserving") {
    auto in = single_edge_instance(0.6);
    auto built = model::build_sip(in);
    auto res = milp::solve_milp(built.problem);
    REQUIRE(res.status == milp::SolveStatus::optimal);
    CHECK(res.objective == doctest::Approx(0.07625).epsilon(1e-9));
    auto plan = model::extract_plan(res, built.map);
    CHECK(plan.first.edge_reserved[0][0] == 1);
    CHECK(plan.second[0].edge_ondemand[0][0] == 0);
  }
  SUBCASE("P=0.5 favors on-demand") {
    auto in = single_edge_instance(0.5);
    auto built = model::build_sip(in);
    auto res = milp::solve_milp(built.problem);
    REQUIRE(res.status == milp::SolveStatus::optimal);
    CHECK(res.objective == doctest::Approx(0.5 * 0.13875).epsilon(1e-9));
    auto plan = model::extract_plan(res, built.map);
    CHECK(plan.first.edge_reserved[0][0] == 0);
    CHECK(plan.second[0].edge_ondemand[0][0] == 1);
  }
}

TEST_CASE("extract_plan: refuses non-optimal results") {
  auto in = single_edge_instance(0.6);
  auto built = model::build_sip(in);
  milp::SolveResult res;
  res.status = milp::SolveStatus::infeasible;
  try {
    model::extract_plan(res, built.map);
    FAIL("expected ExtractError");
  } catch (const model::ExtractError& e) {
    CHECK(e.status() == milp::SolveStatus::infeasible);
  }
}

TEST_CASE("extract_plan: evaluated cost equals the solver objective") {
  int solved = 0;
  for (std::uint64_t seed = 500; seed < 540; ++seed) {
    auto in = testsupport::random_domain_instance(seed);
    auto built = model::build_sip(in);
    auto res = milp::solve_milp(built.problem);
    REQUIRE(res.status == milp::SolveStatus::optimal);
    auto plan = model::extract_plan(res, built.map);
    auto cost = domain::evaluate_plan(plan, in);
    CHECK(cost.total == doctest::Approx(res.objective).epsilon(1e-6));
    ++solved;
  }
  CHECK(solved == 40);
}

TEST_CASE("build_sip: LP relaxation never exceeds the integer optimum") {
  for (std::uint64_t seed = 900; seed < 925; ++seed) {
    auto in = testsupport::random_domain_instance(seed);
    auto built = model::build_sip(in);
    auto lp = milp::solve_lp(built.problem);
    auto ip = milp::solve_milp(built.problem);
    REQUIRE(lp.status == milp::SolveStatus::optimal);
    REQUIRE(ip.status == milp::SolveStatus::optimal);
    CHECK(lp.objective <= ip.objective + 1e-6);
  }
}
