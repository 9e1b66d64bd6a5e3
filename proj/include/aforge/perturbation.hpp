#pragma once

#include <vector>

#include "aforge/potentials.hpp"
#include "aforge/quadrature.hpp"
#include "aforge/samples.hpp"
#include "aforge/units.hpp"

namespace aforge {

// First-order reduced trace difference. Only a Coulomb tail survives the
// k -> 0 limit of U(k) times the O(k^2) bracket, giving
//   w1 = -(2 pi hbar)^-3 C \int d^3p c2(p, Lambda) (Lambda + p^2/2m)^-1
// with C the signed tail coefficient lim k^2 U(k). Exactly 0 for screened
// potentials.
Estimate compute_w1(const PotentialSpec& spec, const UnitSystem& units, double lambda,
                    const QuadratureBudget& budget = {});

// Second-order reduced trace difference
//   w2 = (2 pi hbar)^-6 \int d^3p d^3k |U(k)|^2 [<G(p+k)> - G(p)] G(p)^2
// as a 2D (p, k) quadrature. NotRepresentable for InverseSquare.
Estimate compute_w2(const PotentialSpec& spec, const UnitSystem& units, double lambda,
                    const QuadratureBudget& budget = {});

// -Z^2 e^2 / (8 Lambda^2 a0)
double w2_closed_form(double Z, const UnitSystem& units, double lambda);

// Closed form of compute_w1 for a Coulomb tail of charge Z:
//   sign * (pi/96) * C (2m Lambda)^(3/2) / ((2 pi hbar)^3 m Lambda^3) * 4 pi,
// i.e. -sqrt(2) Z / (24 Lambda^(3/2)) for attractive Coulomb in atomic units.
double w1_closed_form(const PotentialSpec& spec, const UnitSystem& units, double lambda);

enum class Order { First, Second, Sum };

// Maps compute_w1 / compute_w2 (or their sum) over a Lambda grid. Throws
// Error(InvalidArgument) for an empty or non-increasing grid and
// Error(Unconverged) if any point misses its budget.
TraceSamples sample_w(const PotentialSpec& spec, const UnitSystem& units,
                      const std::vector<double>& lambda_grid, Order order,
                      const QuadratureBudget& budget = {});

}  // namespace aforge
