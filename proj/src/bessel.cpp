#include "aforge/bessel.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>

#include "aforge/error.hpp"
#include "aforge/kernels.hpp"
#include "aforge/quadrature.hpp"

namespace aforge {
namespace {

constexpr double kAsymptoticStart = 200.0;

// \int_{xs}^inf x [I K - 1/(2 sqrt(nu^2+x^2))] dx from the large-x expansions
//   I K ~ (1/2x) sum_k (-1)^k c_k prod_{j<=k} (nu^2 - (j-1/2)^2) x^-2k
//   1/(2 sqrt(nu^2+x^2)) = (1/2x) sum_k (-1)^k c_k nu^2k x^-2k
// with c_k = (2k-1)!!/(2k)!!; the k = 0 terms cancel.
double tau_asymptotic(double nu, double xs) {
  const double nu2 = nu * nu;
  const double ix2 = 1.0 / (xs * xs);
  double c = 1.0, prod = 1.0, pw = 1.0, xpow = xs, sum = 0.0;
  for (int k = 1; k <= 40; ++k) {
    c *= (2.0 * k - 1.0) / (2.0 * k);
    prod *= nu2 - (k - 0.5) * (k - 0.5);
    pw *= nu2;
    xpow *= ix2;
    const double sgn = k % 2 ? -1.0 : 1.0;
    const double term = sgn * c * (prod - pw) * xpow / (2.0 * (2.0 * k - 1.0));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

std::vector<double> bessel_j_zeros(double nu, int n) {
  if (n < 0) raise(ErrorKind::InvalidArgument, "negative zero count");
  if (!(nu >= 0.0)) raise(ErrorKind::Domain, "Bessel order must be non-negative");
  std::vector<double> z;
  z.reserve(n);
  boost::math::cyl_bessel_j_zero(nu, 1, static_cast<unsigned>(n), std::back_inserter(z));
  return z;
}

double bessel_ik_product(double nu, double x) {
  return boost::math::cyl_bessel_i(nu, x) * boost::math::cyl_bessel_k(nu, x);
}

double bessel_tau_exact(double nu, double X) {
  if (!(X > 0.0)) raise(ErrorKind::Domain, "tau needs X > 0");
  const double xs = std::max(X, kAsymptoticStart);
  double total = tau_asymptotic(nu, xs);
  if (X < xs) {
    const double nu2 = nu * nu;
    auto f = [nu, nu2](double x) {
      return x * (bessel_ik_product(nu, x) - 0.5 / std::sqrt(nu2 + x * x));
    };
    const auto budget = QuadratureBudget::make(1e-15, 1e-11, 200000);
    total += require_converged(integrate_adaptive(f, X, xs, budget), "tau quadrature").value;
  }
  return total;
}

double bessel_tau(double nu, double X) {
  if (nu < kDebyeMinOrder) return bessel_tau_exact(nu, X);
  double out = 0.0;
  kernels::scalar::debye_tail(&nu, &out, 1, X);
  return out;
}

}  // namespace aforge
