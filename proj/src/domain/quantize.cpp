#include <cmath>

#include "rsvplan/domain/instance.hpp"

namespace rsvplan::domain {

std::int64_t quantize(double hours, TimeQuantum q) {
  if (!(q.hours > 0.0)) {
    throw ValidationError("time quantum must be positive");
  }
  if (hours < 0.0 || !std::isfinite(hours)) {
    throw ValidationError("cannot quantize negative or non-finite hours");
  }
  // The 1e-9 slack keeps decimal inputs like 0.1+0.2 from buying an extra
  // quantum they never asked for.
  return static_cast<std::int64_t>(std::ceil(hours / q.hours - 1e-9));
}

}  // namespace rsvplan::domain
