#pragma once

#include <vector>

#include "aforge/potentials.hpp"
#include "aforge/quadrature.hpp"
#include "aforge/samples.hpp"
#include "aforge/units.hpp"

namespace aforge {

enum class AnomalyStatus { Finite, Zero, Divergent };

const char* to_string(AnomalyStatus s) noexcept;

struct AnomalyValue {
  AnomalyStatus status = AnomalyStatus::Zero;
  double reduced = 0.0;      // meaningful unless Divergent
  double uncertainty = 0.0;
  double growth_exponent = 0.0;       // Divergent only: value ~ Lambda^growth
  double divergence_coefficient = 0.0;  // Divergent only: prefactor of Lambda^growth
};

struct AnomalyResult {
  CaseLabel case_label = CaseLabel::Unsupported;
  AnomalyValue n;  // delta A_N / (2 pi hbar)^3
  AnomalyValue e;  // delta A_E / (2 pi hbar)^3
  PowerLawFit fit;
  bool fitted = false;  // false when every sample vanished
};

// Fitted exponents within this distance of 1 or 2 are treated as exactly 1 or 2.
constexpr double kCriticalExponentTolerance = 0.05;

// Values below this magnitude (reduced units) are reported as Zero.
constexpr double kZeroFloor = 1e-6;

// Applies
//   dA_N = -lim 2 Lambda^2 dW/dLambda,   dA_E = lim 2 Lambda^2 (1 + Lambda d/dLambda) W
// to W = c Lambda^-gamma: dA_N = 2 c gamma Lambda^(1-gamma), dA_E = 2 c (1-gamma) Lambda^(2-gamma).
// At a critical exponent the amplitude is refitted with gamma held fixed.
// Throws Error(NotPowerLaw) if fit.residual >= 0.05.
AnomalyResult extract_anomalies(const TraceSamples& samples, const PowerLawFit& fit,
                                const UnitSystem& units);

// Fits first; all-zero samples short-circuit to Zero/Zero without a fit.
AnomalyResult extract_anomalies(const TraceSamples& samples);

// -sqrt(2 m alpha) / (36 hbar); alpha >= 0.
double delta_an_case_a_closed_form(double alpha, const UnitSystem& units);

// Z^2 e^2 / (4 a0); Z >= 0.
double delta_ae_case_b_closed_form(double Z, const UnitSystem& units);

// Extraction on first-order samples over lambda_grid.
AnomalyResult classify_divergence_first_order(const PotentialSpec& spec, const UnitSystem& units,
                                              const std::vector<double>& lambda_grid,
                                              const QuadratureBudget& budget = {});

}  // namespace aforge
