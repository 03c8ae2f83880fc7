// Canned instances behind the bundled studies: a ten-user deployment for the
// scheme comparison, a one-user network small enough to read its cost curves
// point by point, and a busy-vs-idle pair for probability sweeps.
#pragma once

#include "rsvplan/domain/instance_json.hpp"

namespace rsvplan::experiments {

// Ten users, three cyber tools, one classroom, four teachers, twenty 1 GB
// edge servers. Scenario one is a working day with every user running the
// full bundle; scenario two is a light day that shares more data.
domain::InstanceFile default_instance();

// One user and one resource of each kind under the same two scenarios.
domain::InstanceFile cost_structure_instance();

// Ten users; in scenario one everyone demands while every teacher is out,
// scenario two is fully idle. Meant for sweeping the busy probability.
domain::InstanceFile probability_sweep_instance();

}  // namespace rsvplan::experiments
