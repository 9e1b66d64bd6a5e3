#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace aforge {

struct QuadratureBudget {
  double abs_tol = 1e-13;
  double rel_tol = 1e-10;
  std::size_t max_evals = 4000000;

  // Validating constructor: tolerances > 0, max_evals >= 1000.
  static QuadratureBudget make(double abs_tol, double rel_tol, std::size_t max_evals);
};

// Result of an adaptive integration. When the budget runs out the best
// value is still returned, with converged = false.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
  std::size_t evals = 0;
  bool converged = true;

  Estimate& operator+=(const Estimate& other);
};

// Throws Error(Unconverged) when the estimate did not meet its budget.
const Estimate& require_converged(const Estimate& e, const char* what);

using Integrand1D = std::function<double(double)>;

// Global adaptive Gauss-Kronrod (21-point) quadrature on [a, b]. An infinite
// upper limit is compactified with x = a + t/(1-t), t in [0, 1).
Estimate integrate_adaptive(const Integrand1D& f, double a, double b,
                            const QuadratureBudget& budget = {});

// Batched 2D integrand: fills out[i] = f(x[i], y[i]).
using Integrand2D =
    std::function<void(std::span<const double> x, std::span<const double> y, std::span<double> out)>;

struct Rect {
  double x0, x1, y0, y1;
};

// Global adaptive tensor Gauss-Kronrod (15x15 with embedded 7x7 Gauss) on a
// rectangle; either upper limit may be +infinity and is compactified the same
// way as in 1D. Each rule application is a single 225-point batch call.
Estimate integrate_adaptive_2d(const Integrand2D& f, Rect domain,
                               const QuadratureBudget& budget = {});

// \int_0^1 dx [a x + b (1-x)]^-2 evaluated by quadrature; equals 1/(ab).
// Throws Error(Domain) unless a > 0 and b > 0.
double feynman_combine(double a, double b, const QuadratureBudget& budget = {});

}  // namespace aforge
