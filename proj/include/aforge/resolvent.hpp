#pragma once

#include "aforge/units.hpp"

namespace aforge {

// (Lambda + p^2/2m)^-1
double free_resolvent(double p, double lambda, const UnitSystem& units);

// Angle average of (Lambda + (p+k)^2/2m)^-1 over the relative direction of p
// and k:  (m / 2pk) ln[(Lambda + (p+k)^2/2m) / (Lambda + (p-k)^2/2m)].
// Below eps = 2pk/(2m Lambda + p^2 + k^2) = 0.2 the log is replaced by its
// series in eps, which reduces to the exact p = 0 and k = 0 limits.
double angle_averaged_resolvent(double p, double k, double lambda, const UnitSystem& units);

// angle_averaged_resolvent(p, k) - free_resolvent(p), evaluated without the
// cancellation of the naive difference. O(k^2) as k -> 0.
double resolvent_bracket(double p, double k, double lambda, const UnitSystem& units);

// lim_{k->0} k^-2 resolvent_bracket(p, k) = -1/(2m E^2) + p^2/(3 m^2 E^3),
// E = Lambda + p^2/2m.
double small_k_curvature(double p, double lambda, const UnitSystem& units);

}  // namespace aforge
