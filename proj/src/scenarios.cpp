#include "aforge/scenarios.hpp"

#include <cmath>
#include <cstdio>

#include "aforge/error.hpp"
#include "aforge/perturbation.hpp"

namespace aforge {

Check make_check(std::string name, double computed, double expected, double tolerance, bool relative) {
  Check c{std::move(name), computed, expected, tolerance, relative, false};
  const double dev = relative ? std::abs(computed - expected) / std::abs(expected)
                              : std::abs(computed - expected);
  c.passed = std::isfinite(computed) && dev <= tolerance;
  return c;
}

std::string format_check(const Check& c) {
  char buf[256];
  if (c.relative)
    std::snprintf(buf, sizeof buf, "%s computed=%.6g expected=%.6g tolerance=%g%% %s", c.name.c_str(),
                  c.computed, c.expected, 100.0 * c.tolerance, c.passed ? "PASS" : "FAIL");
  else
    std::snprintf(buf, sizeof buf, "%s computed=%.6g expected=%.6g tolerance=+-%g %s", c.name.c_str(),
                  c.computed, c.expected, c.tolerance, c.passed ? "PASS" : "FAIL");
  return buf;
}

Check w2_closed_form_check(double Z, double lambda, const UnitSystem& units) {
  const double w = compute_w2(PotentialSpec::coulomb(Z), units, lambda).value;
  char name[96];
  std::snprintf(name, sizeof name, "w2 Z=%g Lambda=%g", Z, lambda);
  return make_check(name, w, w2_closed_form(Z, units, lambda), 1e-3, true);
}

Check case_b_energy_check(double Z, const UnitSystem& units) {
  const auto s = sample_w(PotentialSpec::coulomb(Z), units, geometric_grid(10.0, 100.0, 12), Order::Second);
  const auto r = extract_anomalies(s);
  const double got = r.e.status == AnomalyStatus::Finite ? r.e.reduced : NAN;
  char name[64];
  std::snprintf(name, sizeof name, "dA_E/(2pi hbar)^3 Z=%g", Z);
  return make_check(name, got, delta_ae_case_b_closed_form(Z, units), 1e-2, true);
}

Check w1_scaling_check(double Z, const UnitSystem& units) {
  const auto s = sample_w(PotentialSpec::coulomb(Z), units, default_lambda_grid(), Order::First);
  char name[64];
  std::snprintf(name, sizeof name, "gamma(w1) Z=%g", Z);
  return make_check(name, fit_power_law(s).gamma, 1.5, 0.05, false);
}

CaseAStudy case_a_study(double alpha, const UnitSystem& units, const OracleConfig& config) {
  const double g = 2.0 * units.mass() * alpha / (units.hbar() * units.hbar());
  if (g < 100.0 * (1.0 - 1e-12))
    raise(ErrorKind::InvalidArgument, "the case-A comparison needs 2 m alpha / hbar^2 >= 100");
  CaseAStudy st;
  st.samples = sample_oracle(PotentialSpec::inverse_square(alpha), units, geometric_grid(5.0, 50.0, 8), config);
  st.result = extract_anomalies(st.samples);
  return st;
}

Check eq7_check(const CaseAStudy& study, double alpha, const UnitSystem& units) {
  const auto& n = study.result.n;
  const double got = n.status == AnomalyStatus::Finite ? n.reduced : NAN;
  char name[96];
  std::snprintf(name, sizeof name, "dA_N/(2pi hbar)^3 2m alpha/hbar^2=%g",
                2.0 * units.mass() * alpha / (units.hbar() * units.hbar()));
  return make_check(name, got, delta_an_case_a_closed_form(alpha, units), 0.10, true);
}

}  // namespace aforge
