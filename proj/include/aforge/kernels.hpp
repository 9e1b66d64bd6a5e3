#pragma once

#include <cstddef>

// Batched inner loops with a scalar reference and a vectorised variant.
// The active backend is chosen once at first use: the vector path when it
// was compiled in and the CPU supports it, unless AFORGE_KERNELS=scalar.
namespace aforge::kernels {

enum class Backend { Scalar, Simd };

const char* to_string(Backend b) noexcept;
bool simd_available() noexcept;
Backend active_backend() noexcept;

// out[i] = <(L + (p+k)^2/2m)^-1> - (L + p^2/2m)^-1 for p = p[i], k = k[i].
void resolvent_bracket(const double* p, const double* k, double* out, std::size_t n,
                       double lambda, double mass, Backend backend);
inline void resolvent_bracket(const double* p, const double* k, double* out, std::size_t n,
                              double lambda, double mass) {
  resolvent_bracket(p, k, out, n, lambda, mass, active_backend());
}

// Large-order uniform expansion of
//   tau_nu(X) = \int_X^inf x [I_nu(x) K_nu(x) - 1/(2 sqrt(nu^2 + x^2))] dx
// through nu^-9, for out[i] = tau_{nu[i]}(X). Accurate for nu >~ 10.
void debye_tail(const double* nu, double* out, std::size_t n, double X, Backend backend);
inline void debye_tail(const double* nu, double* out, std::size_t n, double X) {
  debye_tail(nu, out, n, X, active_backend());
}

namespace scalar {
void resolvent_bracket(const double* p, const double* k, double* out, std::size_t n,
                       double lambda, double mass);
void debye_tail(const double* nu, double* out, std::size_t n, double X);
}  // namespace scalar

namespace simd {
void resolvent_bracket(const double* p, const double* k, double* out, std::size_t n,
                       double lambda, double mass);
void debye_tail(const double* nu, double* out, std::size_t n, double X);
}  // namespace simd

}  // namespace aforge::kernels
