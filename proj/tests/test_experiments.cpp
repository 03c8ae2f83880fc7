#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "rsvplan/domain/instance_json.hpp"
#include "rsvplan/domain/plan.hpp"
#include "rsvplan/experiments/csv.hpp"
#include "rsvplan/experiments/instances.hpp"
#include "rsvplan/experiments/sweeps.hpp"
#include "rsvplan/milp/problem.hpp"
#include "rsvplan/model/formulation.hpp"

using namespace rsvplan;
namespace ex = rsvplan::experiments;

namespace {

// Single user, one edge server, data demanded only on the busy day. The
// reservation-vs-on-demand flip sits at 0.07625/0.13875 ~ 0.5495.
domain::Instance edge_flip_instance() {
  domain::Instance in;
  in.quantum.hours = 0.1;
  in.catalog.edge = {{"edge01", 1.0, 0.07625, 0.13875}};
  in.catalog.people = {{"teacher1", 40.0, 25.0, 19.6}};
  in.catalog.outsource_rate = 19.6;
  domain::UserDemand busy;
  busy.people_hours = {0.4};
  busy.people_available = {1};
  busy.data_gb = 0.5;
  domain::UserDemand idle;
  idle.people_hours = {0.0};
  idle.people_available = {1};
  in.scenarios.scenarios = {domain::DemandScenario{{busy}},
                            domain::DemandScenario{{idle}}};
  in.scenarios.probabilities = {0.6, 0.4};
  return in;
}

}  // namespace

TEST_CASE("parse_resource_id: class with optional index") {
  auto id = ex::parse_resource_id("cyber");
  CHECK(id.cls == ex::ResourceClass::cyber);
  CHECK(id.index == 0);
  id = ex::parse_resource_id("edge:7");
  CHECK(id.cls == ex::ResourceClass::edge);
  CHECK(id.index == 7);
  CHECK(ex::to_string(id) == "edge:7");
  CHECK(ex::parse_resource_id("people:2").index == 2);
  CHECK_THROWS_AS(ex::parse_resource_id("cpu"), domain::ValidationError);
  CHECK_THROWS_AS(ex::parse_resource_id("edge:x"), domain::ValidationError);
  CHECK_THROWS_AS(ex::parse_resource_id("edge:"), domain::ValidationError);
}

TEST_CASE("canned instances validate and round-trip through JSON") {
  for (auto file : {ex::default_instance(), ex::cost_structure_instance(),
                    ex::probability_sweep_instance()}) {
    CHECK_NOTHROW(domain::validate(file.instance));
    const auto text = domain::serialize_instance(file);
    const auto back = domain::parse_instance(text);
    CHECK(domain::serialize_instance(back) == text);
  }

  const auto def = ex::default_instance().instance;
  CHECK(def.catalog.edge.size() == 20);
  CHECK(def.catalog.cyber.size() == 3);
  CHECK(def.catalog.people.size() == 4);
  CHECK(def.catalog.edge[0].ondemand_cost == 0.13875);
  CHECK(def.catalog.edge[19].name == "edge20");
  CHECK(domain::num_users(def.scenarios) == 10);

  const auto c2 = ex::probability_sweep_instance().instance;
  for (const auto& u : c2.scenarios.scenarios[0].users)
    for (auto a : u.people_available) CHECK(a == 0);
  for (const auto& u : c2.scenarios.scenarios[1].users) {
    CHECK(u.data_gb == 0.0);
    for (double h : u.cyber_hours) CHECK(h == 0.0);
  }
}

TEST_CASE("one-user instance: known optimum, hand-priced") {
  // writing reserves all 3 units; classroom reserves 1 and buys the busy
  // surplus; the teacher is always outsourced (19.6 < 25); the server is
  // reserved (0.07625 < 0.13875).
  const auto in = ex::cost_structure_instance().instance;
  auto built = model::build_sip(in);
  auto res = milp::solve_milp(built.problem);
  REQUIRE(res.status == milp::SolveStatus::optimal);
  CHECK(res.objective == doctest::Approx(7.18335).epsilon(1e-9));
}

TEST_CASE("sweep_reservation: affine stage one, shrinking stage two") {
  const auto in = ex::cost_structure_instance().instance;
  const std::vector<double> grid = {0, 1, 2, 3, 4, 5};
  auto series = ex::sweep_reservation(
      in, {ex::ResourceClass::cyber, 0}, grid);
  REQUIRE(series.points.size() == grid.size());

  const double slope = 0.1 * 0.017;
  for (std::size_t i = 1; i < series.points.size(); ++i) {
    const auto& prev = series.points[i - 1];
    const auto& cur = series.points[i];
    CHECK(cur.stage1 - prev.stage1 ==
          doctest::Approx(slope * (cur.grid - prev.grid)).epsilon(1e-9));
    CHECK(cur.stage2_expected <= prev.stage2_expected + 1e-9);
  }

  double min_total = series.points[0].total;
  for (const auto& p : series.points) min_total = std::min(min_total, p.total);
  auto built = model::build_sip(in);
  auto res = milp::solve_milp(built.problem);
  REQUIRE(res.status == milp::SolveStatus::optimal);
  // the unconstrained optimizer reserves 3 units, which the grid contains
  CHECK(min_total == doctest::Approx(res.objective).epsilon(1e-9));
}

TEST_CASE("sweep_reservation: input checking") {
  const auto in = ex::cost_structure_instance().instance;
  CHECK_THROWS_AS(
      ex::sweep_reservation(in, {ex::ResourceClass::edge, 0}, {0, 1, 2}),
      domain::ValidationError);  // a server flag cannot be 2
  CHECK_THROWS_AS(
      ex::sweep_reservation(in, {ex::ResourceClass::cyber, 0}, {0.5}),
      domain::ValidationError);  // fractional units
  CHECK_THROWS_AS(
      ex::sweep_reservation(in, {ex::ResourceClass::cyber, 0}, {2, 1}),
      domain::ValidationError);  // not increasing
  CHECK_THROWS_AS(
      ex::sweep_reservation(in, {ex::ResourceClass::cyber, 1}, {0, 1}),
      domain::ValidationError);  // index outside the catalog

  auto ten = ex::default_instance().instance;
  CHECK_THROWS_AS(
      ex::sweep_reservation(ten, {ex::ResourceClass::cyber, 0}, {0, 1}),
      domain::ValidationError);  // not single-user

  // forcing the whole people capacity is fine, one unit past it is not
  auto prefix = ex::sweep_reservation(
      in, {ex::ResourceClass::people, 0}, {399, 400});
  CHECK(prefix.points.size() == 2);
  CHECK_THROWS_AS(
      ex::sweep_reservation(in, {ex::ResourceClass::people, 0}, {401}),
      domain::ValidationError);
}

TEST_CASE("sweep_reservation: an edge grid point covers both scenarios") {
  const auto in = ex::cost_structure_instance().instance;
  auto series =
      ex::sweep_reservation(in, {ex::ResourceClass::edge, 0}, {0, 1});
  REQUIRE(series.points.size() == 2);
  // unreserved: the server is bought on demand in both scenarios
  CHECK(series.points[0].total - series.points[0].stage1 >=
        0.13875 - 1e-9);
  CHECK(series.points[1].total <= series.points[0].total + 1e-9);
}

TEST_CASE("sweep_probability: the classroom flips only at certainty") {
  const auto in = ex::probability_sweep_instance().instance;
  const std::vector<double> grid = {0.0, 0.25, 0.5, 0.75, 1.0};
  auto series = ex::sweep_probability(in, grid);
  REQUIRE(series.points.size() == 5);

  std::size_t classroom = 0, teacher0 = 0, writing = 0, edge_servers = 0;
  for (std::size_t i = 0; i < series.extra_labels.size(); ++i) {
    if (series.extra_labels[i] == "reserved_classroom") classroom = i;
    if (series.extra_labels[i] == "reserved_teacher1") teacher0 = i;
    if (series.extra_labels[i] == "reserved_writing") writing = i;
    if (series.extra_labels[i] == "reserved_edge_servers") edge_servers = i;
  }

  for (std::size_t i = 0; i < 4; ++i)
    CHECK(series.points[i].extras[classroom] == 0.0);
  CHECK(series.points[4].extras[classroom] == 1.0);

  // reservation at 25/hr never beats outsourcing at 19.6/hr
  for (const auto& p : series.points) CHECK(p.extras[teacher0] == 0.0);

  // idle-only world costs nothing; totals grow with the busy probability
  CHECK(series.points[0].total == doctest::Approx(0.0));
  CHECK(series.points[0].stage1 == doctest::Approx(0.0));
  for (std::size_t i = 1; i < series.points.size(); ++i)
    CHECK(series.points[i].total >= series.points[i - 1].total - 1e-9);

  // 0.017/0.035 ~ 0.486, so the writing tool is reserved from p = 0.5 on
  CHECK(series.points[2].extras[writing] == 1.0);
  // at certainty all ten users hold a reserved server
  CHECK(series.points[4].extras[edge_servers] == 10.0);

  CHECK_THROWS_AS(ex::sweep_probability(in, {0.0, 1.2}),
                  domain::ValidationError);
}

TEST_CASE("find_threshold: grid ceiling of the price ratio") {
  const auto in = edge_flip_instance();
  const ex::ResourceId edge{ex::ResourceClass::edge, 0};

  auto fine = ex::find_threshold(in, edge, 0.01);
  REQUIRE(fine.threshold.has_value());
  CHECK(*fine.threshold == doctest::Approx(0.55).epsilon(1e-9));
  CHECK(fine.series.points.size() == 56);  // 0.00 through 0.55
  CHECK(fine.series.points.back().extras[0] == 1.0);
  CHECK(fine.series.points[54].extras[0] == 0.0);

  auto coarse = ex::find_threshold(in, edge, 0.05);
  REQUIRE(coarse.threshold.has_value());
  CHECK(*coarse.threshold == doctest::Approx(0.55).epsilon(1e-9));

  auto quarter = ex::find_threshold(in, edge, 0.25);
  REQUIRE(quarter.threshold.has_value());
  CHECK(*quarter.threshold == doctest::Approx(0.75).epsilon(1e-9));
}

TEST_CASE("find_threshold: a dominated resource has no threshold") {
  const auto in = edge_flip_instance();
  auto res = ex::find_threshold(in, {ex::ResourceClass::people, 0}, 0.25);
  CHECK_FALSE(res.threshold.has_value());
  CHECK(res.series.points.size() == 5);
  for (const auto& p : res.series.points) CHECK(p.extras[0] == 0.0);
}

TEST_CASE("find_threshold: input checking") {
  const auto in = edge_flip_instance();
  CHECK_THROWS_AS(ex::find_threshold(in, {ex::ResourceClass::edge, 0}, 0.0),
                  domain::ValidationError);
  CHECK_THROWS_AS(
      ex::find_threshold(in, {ex::ResourceClass::people, 3}, 0.1),
      domain::ValidationError);
  auto three = in;
  three.scenarios.scenarios.push_back(three.scenarios.scenarios[1]);
  three.scenarios.probabilities = {0.5, 0.3, 0.2};
  CHECK_THROWS_AS(
      ex::find_threshold(three, {ex::ResourceClass::edge, 0}, 0.1),
      domain::ValidationError);
}

TEST_CASE("compare_schemes: stochastic plan wins at every multiplier") {
  const auto in = ex::cost_structure_instance().instance;
  const std::vector<double> multipliers = {0.0, 0.5, 1.0, 3.0};
  const std::vector<std::uint64_t> seeds = {1, 2, 3};
  auto series = ex::compare_schemes(in, multipliers, seeds);
  REQUIRE(series.points.size() == 4);

  for (const auto& p : series.points) {
    CHECK(p.sip_total <= p.evf_total + 1e-6);
    REQUIRE(p.random_totals.size() == 3);
    for (double t : p.random_totals) CHECK(p.sip_total <= t + 1e-6);
  }
  // free on-demand capacity: reserving nothing costs nothing
  CHECK(series.points[0].sip_total == doctest::Approx(0.0));
  CHECK(series.points[0].evf_total > 0.0);

  // byte-identical reruns
  CHECK(ex::to_csv(series) ==
        ex::to_csv(ex::compare_schemes(in, multipliers, seeds)));

  CHECK_THROWS_AS(ex::compare_schemes(in, {-1.0}, seeds),
                  domain::ValidationError);
  CHECK_THROWS_AS(ex::compare_schemes(in, {1.0}, {}),
                  domain::ValidationError);
}

TEST_CASE("csv: exact layout, six decimals") {
  ex::SweepSeries s;
  s.grid_label = "p_busy";
  s.extra_labels = {"flag"};
  s.metadata = {"experiment=demo"};
  s.points.push_back({0.25, 1.0, 2.5, 3.5, {1.0}});
  s.points.push_back({0.5, -0.0, 0.0, 0.0, {0.0}});
  CHECK(ex::to_csv(s) ==
        "# experiment=demo\n"
        "p_busy,stage1,stage2_expected,total,flag\n"
        "0.250000,1.000000,2.500000,3.500000,1.000000\n"
        "0.500000,0.000000,0.000000,0.000000,0.000000\n");

  ex::CompareSeries c;
  c.seeds = {1, 2};
  c.metadata = {"experiment=compare"};
  c.points.push_back({2.0, 1.5, 2.5, {5.0, 3.0}});
  CHECK(ex::to_csv(c) ==
        "# experiment=compare\n"
        "# seeds=1,2\n"
        "multiplier,sip_total,evf_total,random_min,random_mean,random_max\n"
        "2.000000,1.500000,2.500000,3.000000,4.000000,5.000000\n");
}

TEST_CASE("ten-user instance: known optimum, hand-priced") {
  // ten copies of the one-user pricing: 10 * 7.18753, where the extra
  // speaking and learning tools add 0.0015 and 0.00268 per user
  const auto in = ex::default_instance().instance;
  auto built = model::build_sip(in);
  auto res = milp::solve_milp(built.problem);
  REQUIRE(res.status == milp::SolveStatus::optimal);
  CHECK(res.objective == doctest::Approx(71.8753).epsilon(1e-9));

  auto evf = domain::evaluate_plan(model::build_evf(in), in);
  CHECK(evf.total == doctest::Approx(111.3585).epsilon(1e-9));
  CHECK(res.objective <= evf.total);
}
