#include "rsvplan/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace rsvplan::kernels {
namespace {

using AxpyFn = void (*)(double, const double*, double*, std::size_t);
using ScaleFn = void (*)(double, double*, std::size_t);

struct Table {
  AxpyFn axpy;
  ScaleFn scale;
};

Table table_for(Backend b) {
  switch (b) {
#if defined(__x86_64__) || defined(_M_X64)
    case Backend::avx2:
      return {axpy_avx2, scale_avx2};
#endif
#if defined(__aarch64__)
    case Backend::neon:
      return {axpy_neon, scale_neon};
#endif
    default:
      return {axpy_scalar, scale_scalar};
  }
}

Backend detect() {
  if (const char* env = std::getenv("RSVPLAN_KERNEL")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0 && supported(Backend::avx2))
      return Backend::avx2;
    if (std::strcmp(env, "neon") == 0 && supported(Backend::neon))
      return Backend::neon;
    // Unknown or unsupported request: fall through to autodetect.
  }
  if (supported(Backend::avx2)) return Backend::avx2;
  if (supported(Backend::neon)) return Backend::neon;
  return Backend::scalar;
}

struct State {
  std::atomic<Backend> backend;
  Table table;
  State() : backend(detect()), table(table_for(backend.load())) {}
};

State& state() {
  static State s;
  return s;
}

}  // namespace

bool supported(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
    case Backend::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

std::string_view name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "?";
}

Backend active() { return state().backend.load(std::memory_order_relaxed); }

void set_active(Backend b) {
  if (!supported(b))
    throw std::invalid_argument("kernel backend not supported here: " +
                                std::string(name(b)));
  state().table = table_for(b);
  state().backend.store(b, std::memory_order_relaxed);
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  state().table.axpy(a, x, y, n);
}

void scale(double a, double* y, std::size_t n) {
  state().table.scale(a, y, n);
}

}  // namespace rsvplan::kernels
