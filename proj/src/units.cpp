#include "aforge/units.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "aforge/error.hpp"

namespace aforge {

UnitSystem UnitSystem::make(double hbar, double mass, double e2) {
  auto check = [](double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0)
      raise(ErrorKind::Domain, std::string(name) + " must be positive, got " + std::to_string(v));
  };
  check(hbar, "hbar");
  check(mass, "mass");
  check(e2, "e2");
  return UnitSystem(hbar, mass, e2);
}

double UnitSystem::cell_volume() const noexcept {
  const double h = 2.0 * std::numbers::pi * hbar_;
  return h * h * h;
}

}  // namespace aforge
