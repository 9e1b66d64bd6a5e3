#pragma once

#include <vector>

namespace aforge {

// First n positive zeros of J_nu.
std::vector<double> bessel_j_zeros(double nu, int n);

// I_nu(x) K_nu(x) for 0 < x <= ~700.
double bessel_ik_product(double nu, double x);

// tau_nu(X) = \int_X^inf x [I_nu(x) K_nu(x) - 1/(2 sqrt(nu^2 + x^2))] dx.
// The integrand's integral over (0, inf) vanishes, so tau is also minus the
// integral over (0, X). Direct quadrature up to x = 200, asymptotic series in
// 1/x beyond.
double bessel_tau_exact(double nu, double X);

// Order at and above which the uniform large-order expansion is used.
constexpr double kDebyeMinOrder = 20.0;

// Picks the uniform expansion for nu >= kDebyeMinOrder, quadrature below.
double bessel_tau(double nu, double X);

}  // namespace aforge
