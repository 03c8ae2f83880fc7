// Dense row kernels for the simplex tableau. Scalar reference plus SIMD
// variants selected at runtime; all variants are bitwise-identical (no FMA,
// same per-element operation order), which the tests assert exactly.
#pragma once

#include <cstddef>
#include <string_view>

namespace rsvplan::kernels {

enum class Backend { scalar, avx2, neon };

// Backend picked at startup: best supported one, unless the RSVPLAN_KERNEL
// environment variable ("scalar", "avx2", "neon") forces a supported choice.
Backend active();

// Override for tests and benchmarks. Throws std::invalid_argument if the
// backend is not supported on this machine.
void set_active(Backend b);

bool supported(Backend b);
std::string_view name(Backend b);

// y[i] += a * x[i]
void axpy(double a, const double* x, double* y, std::size_t n);
// y[i] *= a
void scale(double a, double* y, std::size_t n);

// Named variants, exposed so equivalence tests can compare them directly.
void axpy_scalar(double a, const double* x, double* y, std::size_t n);
void scale_scalar(double a, double* y, std::size_t n);
#if defined(__x86_64__) || defined(_M_X64)
void axpy_avx2(double a, const double* x, double* y, std::size_t n);
void scale_avx2(double a, double* y, std::size_t n);
#endif
#if defined(__aarch64__)
void axpy_neon(double a, const double* x, double* y, std::size_t n);
void scale_neon(double a, double* y, std::size_t n);
#endif

}  // namespace rsvplan::kernels
