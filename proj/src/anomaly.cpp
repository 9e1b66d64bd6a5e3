#include "aforge/anomaly.hpp"

#include <algorithm>
#include <cmath>

#include "aforge/error.hpp"
#include "aforge/perturbation.hpp"

namespace aforge {
namespace {

double snap(double gamma) {
  for (double critical : {1.0, 2.0})
    if (std::abs(gamma - critical) <= kCriticalExponentTolerance) return critical;
  return gamma;
}

// Amplitude with gamma fixed, plus the scatter of the per-sample estimates.
std::pair<double, double> refit_amplitude(const TraceSamples& s, double gamma) {
  double mean = 0.0;
  std::vector<double> y;
  for (const auto& e : s.entries) {
    y.push_back(std::log(std::abs(e.w)) + gamma * std::log(e.lambda));
    mean += y.back();
  }
  mean /= y.size();
  double var = 0.0;
  for (double v : y) var += (v - mean) * (v - mean);
  const double sign = s.entries.front().w < 0.0 ? -1.0 : 1.0;
  return {sign * std::exp(mean), std::sqrt(var / y.size())};
}

double max_relative_error(const TraceSamples& s) {
  double r = 0.0;
  for (const auto& e : s.entries)
    if (e.w != 0.0) r = std::max(r, e.error / std::abs(e.w));
  return r;
}

AnomalyValue finite_or_zero(double value, double uncertainty) {
  AnomalyValue v;
  v.reduced = value;
  v.uncertainty = uncertainty;
  v.status = std::abs(value) < std::max(uncertainty, kZeroFloor) ? AnomalyStatus::Zero : AnomalyStatus::Finite;
  return v;
}

AnomalyValue exact_zero(double uncertainty) {
  AnomalyValue v;
  v.uncertainty = std::max(uncertainty, kZeroFloor);
  return v;
}

AnomalyValue divergent(double coefficient, double growth) {
  AnomalyValue v;
  v.status = AnomalyStatus::Divergent;
  v.growth_exponent = growth;
  v.divergence_coefficient = coefficient;
  return v;
}

}  // namespace

const char* to_string(AnomalyStatus s) noexcept {
  switch (s) {
    case AnomalyStatus::Finite: return "finite";
    case AnomalyStatus::Zero: return "zero";
    case AnomalyStatus::Divergent: return "divergent";
  }
  return "?";
}

AnomalyResult extract_anomalies(const TraceSamples& samples, const PowerLawFit& fit,
                                const UnitSystem&) {
  if (!(fit.residual < 0.05))
    raise(ErrorKind::NotPowerLaw, "log-log residual " + std::to_string(fit.residual) + " >= 0.05");
  samples.validate();

  AnomalyResult r;
  r.case_label = classify(samples.spec).case_label;
  r.fit = fit;
  r.fitted = true;

  const double gamma = snap(fit.gamma);
  double c = fit.amplitude;
  double rel = max_relative_error(samples) + fit.residual;
  if (gamma != fit.gamma && !samples.entries.empty()) {
    const auto [amp, scatter] = refit_amplitude(samples, gamma);
    c = amp;
    rel = max_relative_error(samples) + scatter;
  }

  // number: 2 c gamma Lambda^(1-gamma)
  if (gamma == 1.0) {
    const double v = 2.0 * c;
    r.n = finite_or_zero(v, std::abs(v) * rel);
  } else if (gamma > 1.0) {
    r.n = exact_zero(0.0);
  } else {
    r.n = divergent(2.0 * c * gamma, 1.0 - gamma);
  }

  // energy: 2 c (1-gamma) Lambda^(2-gamma)
  if (gamma == 2.0) {
    const double v = -2.0 * c;
    r.e = finite_or_zero(v, std::abs(v) * rel);
  } else if (gamma == 1.0 || gamma > 2.0) {
    r.e = exact_zero(0.0);
  } else {
    r.e = divergent(2.0 * c * (1.0 - gamma), 2.0 - gamma);
  }
  return r;
}

AnomalyResult extract_anomalies(const TraceSamples& samples) {
  samples.validate();
  const bool all_zero = std::all_of(samples.entries.begin(), samples.entries.end(),
                                    [](const TraceEntry& e) { return e.w == 0.0; });
  if (all_zero && !samples.entries.empty()) {
    AnomalyResult r;
    r.case_label = classify(samples.spec).case_label;
    r.n = exact_zero(0.0);
    r.e = exact_zero(0.0);
    return r;
  }
  return extract_anomalies(samples, fit_power_law(samples), samples.units);
}

double delta_an_case_a_closed_form(double alpha, const UnitSystem& units) {
  if (!(alpha >= 0.0)) raise(ErrorKind::Domain, "alpha must be non-negative");
  return -std::sqrt(2.0 * units.mass() * alpha) / (36.0 * units.hbar());
}

double delta_ae_case_b_closed_form(double Z, const UnitSystem& units) {
  if (!(Z >= 0.0)) raise(ErrorKind::Domain, "Z must be non-negative");
  return Z * Z * units.e2() / (4.0 * units.a0());
}

AnomalyResult classify_divergence_first_order(const PotentialSpec& spec, const UnitSystem& units,
                                              const std::vector<double>& lambda_grid,
                                              const QuadratureBudget& budget) {
  return extract_anomalies(sample_w(spec, units, lambda_grid, Order::First, budget));
}

}  // namespace aforge
