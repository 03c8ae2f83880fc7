// NEON variants for aarch64. vmulq+vaddq rather than vfmaq so the result is
// bitwise identical to the scalar kernel.
#include "rsvplan/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace rsvplan::kernels {

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t vx = vld1q_f64(x + i);
    float64x2_t vy = vld1q_f64(y + i);
    vy = vaddq_f64(vy, vmulq_f64(va, vx));
    vst1q_f64(y + i, vy);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale_neon(double a, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vmulq_f64(vld1q_f64(y + i), va));
  }
  for (; i < n; ++i) y[i] *= a;
}

}  // namespace rsvplan::kernels

#endif
