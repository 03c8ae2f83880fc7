// Internal conversion helpers shared by the program builders.
#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "rsvplan/domain/instance.hpp"

namespace rsvplan::model::detail {

// Largest whole number of quanta fitting inside a capacity.
inline std::int64_t capacity_units(double hours, domain::TimeQuantum q) {
  return static_cast<std::int64_t>(std::floor(hours / q.hours + 1e-9));
}

// Coverage rows whose coefficients are all one common capacity admit a
// tighter right-hand side: achievable coverage comes in multiples of that
// capacity, so rounding the requirement up to the next multiple removes the
// fractional corner without excluding any integer point. Mixed capacities
// keep the literal requirement.
inline double data_cover_rhs(const std::vector<domain::EdgeServer>& edge,
                             double need_gb) {
  if (need_gb <= 0.0) return 0.0;
  if (edge.empty()) return need_gb;
  const double cap = edge.front().capacity_gb;
  for (const auto& e : edge)
    if (e.capacity_gb != cap) return need_gb;
  return cap * std::ceil(need_gb / cap - 1e-9);
}

}  // namespace rsvplan::model::detail
