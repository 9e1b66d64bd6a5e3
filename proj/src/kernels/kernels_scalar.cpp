#include <cmath>

#include "aforge/kernels.hpp"
#include "coefficients.hpp"

namespace aforge::kernels::scalar {
namespace {

double atanh_ratio_minus_one(double e) {
  const double e2 = e * e;
  double s = 0.0;
  for (double c : coef::kAtanhSeries) s = s * e2 + c;
  return s * e2;
}

template <std::size_t N>
double horner(const double (&c)[N], double x) {
  double s = c[N - 1];
  for (std::size_t i = N - 1; i-- > 0;) s = s * x + c[i];
  return s;
}

}  // namespace

void resolvent_bracket(const double* p, const double* k, double* out, std::size_t n,
                       double lambda, double mass) {
  const double half_inv_m = 0.5 / mass;
  const double two_m_lambda = 2.0 * mass * lambda;
  for (std::size_t i = 0; i < n; ++i) {
    const double pp = p[i], kk = k[i];
    const double E = lambda + pp * pp * half_inv_m;
    const double kin = kk * kk * half_inv_m;
    const double D = E + kin;
    const double eps = pp * kk / (mass * D);
    double s1;
    if (eps < coef::kSeriesSwitch) {
      s1 = atanh_ratio_minus_one(eps);
    } else {
      const double a = two_m_lambda + (pp + kk) * (pp + kk);
      const double b = two_m_lambda + (pp - kk) * (pp - kk);
      s1 = std::log(a / b) / (2.0 * eps) - 1.0;
    }
    out[i] = (E * s1 - kin) / (D * E);
  }
}

void debye_tail(const double* nu, double* out, std::size_t n, double X) {
  const double X2 = X * X;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = nu[i];
    const double v2 = v * v;
    const double r2 = v2 + X2;
    const double t = v / std::sqrt(r2);
    const double u = v2 / r2;
    const double w = X2 / r2;
    const double iv2 = 1.0 / v2;
    double s = u * horner(coef::kDebyeP4, u) * iv2;
    s = (s + horner(coef::kDebyeP3, u)) * u * iv2;
    s = (s + horner(coef::kDebyeP2, u)) * u * iv2;
    s = (s + coef::kDebyeP1) * iv2;
    out[i] = 0.5 * v * t * w * w * s;
  }
}

}  // namespace aforge::kernels::scalar
