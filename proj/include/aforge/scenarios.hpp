#pragma once

#include <string>
#include <vector>

#include "aforge/anomaly.hpp"
#include "aforge/spectral_oracle.hpp"
#include "aforge/units.hpp"

namespace aforge {

// A computed number against its reference value.
struct Check {
  std::string name;
  double computed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool relative = true;
  bool passed = false;
};

Check make_check(std::string name, double computed, double expected, double tolerance, bool relative);
std::string format_check(const Check& c);

// compute_w2 against -Z^2/(8 Lambda^2), 0.1%.
Check w2_closed_form_check(double Z, double lambda, const UnitSystem& units);

// compute_w2 on 12 points over Lambda in [10, 100], fit, extract; delta A_E
// against Z^2/4, 1%.
Check case_b_energy_check(double Z, const UnitSystem& units);

// First-order Coulomb samples on the default grid; gamma against 3/2, +-0.05.
Check w1_scaling_check(double Z, const UnitSystem& units);

struct CaseAStudy {
  TraceSamples samples;
  AnomalyResult result;
};

// Oracle samples for U = alpha/r^2 on 8 points over Lambda in [5, 50].
// Requires 2 m alpha / hbar^2 >= 100 (strong coupling).
CaseAStudy case_a_study(double alpha, const UnitSystem& units, const OracleConfig& config = {});

// delta A_N from case_a_study against -sqrt(2 m alpha)/(36 hbar), 10%.
Check eq7_check(const CaseAStudy& study, double alpha, const UnitSystem& units);

}  // namespace aforge
