#include <cstdlib>
#include <cstring>

#include "aforge/kernels.hpp"

namespace aforge::kernels {

const char* to_string(Backend b) noexcept { return b == Backend::Simd ? "simd" : "scalar"; }

bool simd_available() noexcept {
#if !defined(AFORGE_HAVE_SIMD)
  return false;
#elif defined(__x86_64__) || defined(__i386__)
  static const bool ok = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  return ok;
#else
  return true;
#endif
}

Backend active_backend() noexcept {
  static const Backend chosen = [] {
    const char* env = std::getenv("AFORGE_KERNELS");
    if (env && std::strcmp(env, "scalar") == 0) return Backend::Scalar;
    return simd_available() ? Backend::Simd : Backend::Scalar;
  }();
  return chosen;
}

void resolvent_bracket(const double* p, const double* k, double* out, std::size_t n,
                       double lambda, double mass, Backend backend) {
#if defined(AFORGE_HAVE_SIMD)
  if (backend == Backend::Simd && simd_available())
    return simd::resolvent_bracket(p, k, out, n, lambda, mass);
#endif
  (void)backend;
  scalar::resolvent_bracket(p, k, out, n, lambda, mass);
}

void debye_tail(const double* nu, double* out, std::size_t n, double X, Backend backend) {
#if defined(AFORGE_HAVE_SIMD)
  if (backend == Backend::Simd && simd_available()) return simd::debye_tail(nu, out, n, X);
#endif
  (void)backend;
  scalar::debye_tail(nu, out, n, X);
}

}  // namespace aforge::kernels
