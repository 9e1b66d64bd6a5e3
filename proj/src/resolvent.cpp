#include "aforge/resolvent.hpp"

#include "aforge/error.hpp"
#include "aforge/kernels.hpp"

namespace aforge {

double free_resolvent(double p, double lambda, const UnitSystem& units) {
  return 1.0 / (lambda + p * p / (2.0 * units.mass()));
}

double resolvent_bracket(double p, double k, double lambda, const UnitSystem& units) {
  if (!(lambda > 0.0)) raise(ErrorKind::Domain, "Lambda must be positive");
  if (p < 0.0 || k < 0.0) raise(ErrorKind::Domain, "momenta must be non-negative");
  double out = 0.0;
  kernels::scalar::resolvent_bracket(&p, &k, &out, 1, lambda, units.mass());
  return out;
}

double angle_averaged_resolvent(double p, double k, double lambda, const UnitSystem& units) {
  return resolvent_bracket(p, k, lambda, units) + free_resolvent(p, lambda, units);
}

double small_k_curvature(double p, double lambda, const UnitSystem& units) {
  if (!(lambda > 0.0)) raise(ErrorKind::Domain, "Lambda must be positive");
  const double m = units.mass();
  const double E = lambda + p * p / (2.0 * m);
  return -1.0 / (2.0 * m * E * E) + p * p / (3.0 * m * m * E * E * E);
}

}  // namespace aforge
