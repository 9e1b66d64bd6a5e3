#pragma once

#include <span>
#include <vector>

#include "aforge/potentials.hpp"
#include "aforge/units.hpp"

namespace aforge {

enum class TraceSource { FirstOrder, SecondOrder, PerturbativeSum, Oracle };

const char* to_string(TraceSource s) noexcept;

// One reduced trace value w = W/(2 pi hbar)^3 at regulator Lambda.
struct TraceEntry {
  double lambda = 0.0;
  double w = 0.0;
  double error = 0.0;
};

struct TraceSamples {
  std::vector<TraceEntry> entries;
  TraceSource source = TraceSource::SecondOrder;
  PotentialSpec spec;
  UnitSystem units;

  // Throws Error(InvalidArgument) unless Lambda is strictly increasing and
  // positive and every error is non-negative.
  void validate() const;

  std::vector<double> lambdas() const;
  std::vector<double> values() const;
};

// W ~ amplitude * Lambda^-gamma from least squares on ln|W| against ln Lambda.
struct PowerLawFit {
  double amplitude = 0.0;  // signed
  double gamma = 0.0;
  double gamma_err = 0.0;  // standard error of the slope
  double residual = 0.0;   // RMS of the log-log residuals
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  std::size_t samples = 0;
};

// Requires >= 4 points spanning at least one decade (InvalidArgument
// otherwise) and W of a single sign (MixedSign otherwise; zeros count as a
// sign change).
PowerLawFit fit_power_law(std::span<const double> lambda, std::span<const double> w);
PowerLawFit fit_power_law(const TraceSamples& samples);

// `points` geometrically spaced values from lo to hi inclusive.
std::vector<double> geometric_grid(double lo, double hi, std::size_t points);
std::vector<double> default_lambda_grid();

}  // namespace aforge
