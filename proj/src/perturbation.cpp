#include "aforge/perturbation.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "aforge/error.hpp"
#include "aforge/kernels.hpp"
#include "aforge/resolvent.hpp"

namespace aforge {
namespace {

constexpr double kPi = std::numbers::pi;

void require_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) raise(ErrorKind::Domain, "Lambda must be positive");
}

}  // namespace

Estimate compute_w1(const PotentialSpec& spec, const UnitSystem& units, double lambda,
                    const QuadratureBudget& budget) {
  require_lambda(lambda);
  const double C = spec.sign_factor() * coulomb_tail_coefficient(spec, units);
  if (C == 0.0) return Estimate{};

  // p = q P puts the bulk of the integrand at P ~ 1
  const double q = std::sqrt(2.0 * units.mass() * lambda);
  auto f = [&](double P) {
    const double p = q * P;
    return p * p * small_k_curvature(p, lambda, units) * free_resolvent(p, lambda, units) * q;
  };
  Estimate radial = require_converged(integrate_adaptive(f, 0.0, INFINITY, budget), "w1 radial integral");
  const double scale = -C * 4.0 * kPi / units.cell_volume();
  radial.value *= scale;
  radial.error *= std::abs(scale);
  return radial;
}

double w1_closed_form(const PotentialSpec& spec, const UnitSystem& units, double lambda) {
  require_lambda(lambda);
  const double C = spec.sign_factor() * coulomb_tail_coefficient(spec, units);
  const double m = units.mass();
  // \int p^2 c2 G dp = -(pi/96) (2m Lambda)^(3/2) / (m Lambda^3)
  const double radial = -(kPi / 96.0) * std::pow(2.0 * m * lambda, 1.5) / (m * lambda * lambda * lambda);
  return -C * 4.0 * kPi * radial / units.cell_volume();
}

Estimate compute_w2(const PotentialSpec& spec, const UnitSystem& units, double lambda,
                    const QuadratureBudget& budget) {
  require_lambda(lambda);
  if (!has_fourier_transform(spec))
    raise(ErrorKind::NotRepresentable, std::string("no closed-form U(k) for ") + to_string(spec.family));
  if (spec.Z == 0.0) return Estimate{};

  const double m = units.mass();
  const double q = std::sqrt(2.0 * m * lambda);
  const double cell = units.cell_volume();
  const double prefactor = 16.0 * kPi * kPi / (cell * cell) * q * q;

  auto f = [&](std::span<const double> P, std::span<const double> K, std::span<double> out) {
    const std::size_t n = P.size();
    thread_local std::vector<double> p, k;
    p.resize(n);
    k.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = q * P[i];
      k[i] = q * K[i];
    }
    kernels::resolvent_bracket(p.data(), k.data(), out.data(), n, lambda, m);
    for (std::size_t i = 0; i < n; ++i) {
      if (k[i] == 0.0) {
        out[i] = 0.0;  // bracket vanishes like k^2
        continue;
      }
      const double u = fourier_transform_at(spec, units, k[i]);
      const double g = free_resolvent(p[i], lambda, units);
      out[i] *= p[i] * p[i] * k[i] * k[i] * u * u * g * g;
    }
  };
  Estimate e = require_converged(
      integrate_adaptive_2d(f, Rect{0.0, INFINITY, 0.0, INFINITY}, budget), "w2 cubature");
  e.value *= prefactor;
  e.error *= prefactor;
  return e;
}

double w2_closed_form(double Z, const UnitSystem& units, double lambda) {
  require_lambda(lambda);
  return -Z * Z * units.e2() / (8.0 * lambda * lambda * units.a0());
}

TraceSamples sample_w(const PotentialSpec& spec, const UnitSystem& units,
                      const std::vector<double>& lambda_grid, Order order,
                      const QuadratureBudget& budget) {
  if (lambda_grid.empty()) raise(ErrorKind::InvalidArgument, "empty Lambda grid");
  TraceSamples s;
  s.spec = spec;
  s.units = units;
  s.source = order == Order::First    ? TraceSource::FirstOrder
             : order == Order::Second ? TraceSource::SecondOrder
                                      : TraceSource::PerturbativeSum;
  for (double lambda : lambda_grid) {
    Estimate e;
    if (order != Order::Second) e += compute_w1(spec, units, lambda, budget);
    if (order != Order::First) e += compute_w2(spec, units, lambda, budget);
    s.entries.push_back({lambda, e.value, e.error});
  }
  s.validate();
  return s;
}

}  // namespace aforge
