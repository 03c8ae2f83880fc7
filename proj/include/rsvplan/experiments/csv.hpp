// CSV rendering for sweep output. '#'-prefixed metadata lines, one header
// row, then one row per grid point, every number with six decimals.
#pragma once

#include <string>

#include "rsvplan/experiments/sweeps.hpp"

namespace rsvplan::experiments {

std::string to_csv(const SweepSeries& series);

// Columns: multiplier, sip_total, evf_total, then min/mean/max over the
// random seeds. The seed list itself goes into a metadata line.
std::string to_csv(const CompareSeries& series);

}  // namespace rsvplan::experiments
