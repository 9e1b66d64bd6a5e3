// Vector variants of the kernels in kernels_scalar.cpp. This file is built
// with the target ISA flags (AVX2+FMA on x86-64) and must only be entered
// after the runtime check in dispatch.cpp.
#include <experimental/simd>

#include "aforge/kernels.hpp"
#include "coefficients.hpp"

namespace aforge::kernels::simd {
namespace {

namespace stdx = std::experimental;
using V = stdx::native_simd<double>;
using VI = stdx::fixed_size_simd<int, V::size()>;
constexpr std::size_t W = V::size();

V load(const double* p) { return V(p, stdx::element_aligned); }

V log_pos(V x) {
  VI e;
  x = stdx::frexp(x, &e);  // x in [0.5, 1)
  V fe = stdx::static_simd_cast<V>(e);
  const auto small = x < V(coef::kSqrtHalf);
  stdx::where(small, fe) -= V(1.0);
  stdx::where(small, x) += x;
  x -= V(1.0);

  const V z = x * x;
  V num(coef::kLogP[0]);
  for (int i = 1; i < 6; ++i) num = num * x + V(coef::kLogP[i]);
  V den = x + V(coef::kLogQ[0]);
  for (int i = 1; i < 5; ++i) den = den * x + V(coef::kLogQ[i]);
  V y = x * (z * num / den);
  y += fe * V(coef::kLn2Lo);
  y -= V(0.5) * z;
  return x + y + fe * V(coef::kLn2Hi);
}

template <std::size_t N>
V horner(const double (&c)[N], V x) {
  V s(c[N - 1]);
  for (std::size_t i = N - 1; i-- > 0;) s = s * x + V(c[i]);
  return s;
}

V bracket(V p, V k, double lambda, double mass) {
  const V half_inv_m(0.5 / mass);
  const V E = V(lambda) + p * p * half_inv_m;
  const V kin = k * k * half_inv_m;
  const V D = E + kin;
  const V eps = p * k / (V(mass) * D);

  const V e2 = eps * eps;
  V series(coef::kAtanhSeries[0]);
  for (int i = 1; i < 12; ++i) series = series * e2 + V(coef::kAtanhSeries[i]);
  V s1 = series * e2;

  const auto far = eps >= V(coef::kSeriesSwitch);
  if (stdx::any_of(far)) {
    const V tml(2.0 * mass * lambda);
    const V a = tml + (p + k) * (p + k);
    const V b = tml + (p - k) * (p - k);
    // lanes outside the log branch get a harmless argument
    V ratio = a / b;
    stdx::where(!far, ratio) = V(2.0);
    V eps_safe = eps;
    stdx::where(!far, eps_safe) = V(1.0);
    const V logged = log_pos(ratio) / (V(2.0) * eps_safe) - V(1.0);
    stdx::where(far, s1) = logged;
  }
  return (E * s1 - kin) / (D * E);
}

V tau(V v, double X) {
  const V X2(X * X);
  const V v2 = v * v;
  const V r2 = v2 + X2;
  const V t = v / stdx::sqrt(r2);
  const V u = v2 / r2;
  const V w = X2 / r2;
  const V iv2 = V(1.0) / v2;
  V s = u * horner(coef::kDebyeP4, u) * iv2;
  s = (s + horner(coef::kDebyeP3, u)) * u * iv2;
  s = (s + horner(coef::kDebyeP2, u)) * u * iv2;
  s = (s + V(coef::kDebyeP1)) * iv2;
  return V(0.5) * v * t * w * w * s;
}

}  // namespace

void resolvent_bracket(const double* p, const double* k, double* out, std::size_t n,
                       double lambda, double mass) {
  std::size_t i = 0;
  for (; i + W <= n; i += W)
    bracket(load(p + i), load(k + i), lambda, mass).copy_to(out + i, stdx::element_aligned);
  if (i < n) {
    alignas(64) double pb[W] = {}, kb[W] = {}, ob[W];
    for (std::size_t j = i; j < n; ++j) pb[j - i] = p[j], kb[j - i] = k[j];
    bracket(load(pb), load(kb), lambda, mass).copy_to(ob, stdx::element_aligned);
    for (std::size_t j = i; j < n; ++j) out[j] = ob[j - i];
  }
}

void debye_tail(const double* nu, double* out, std::size_t n, double X) {
  std::size_t i = 0;
  for (; i + W <= n; i += W) tau(load(nu + i), X).copy_to(out + i, stdx::element_aligned);
  if (i < n) {
    alignas(64) double vb[W], ob[W];
    for (std::size_t j = 0; j < W; ++j) vb[j] = i + j < n ? nu[i + j] : 1.0;
    tau(load(vb), X).copy_to(ob, stdx::element_aligned);
    for (std::size_t j = i; j < n; ++j) out[j] = ob[j - i];
  }
}

}  // namespace aforge::kernels::simd
