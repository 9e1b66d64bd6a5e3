#pragma once

namespace aforge {

// Values of hbar, m and e^2. Atomic units (all ones) are the default.
// The Bohr radius is always derived, never stored.
class UnitSystem {
 public:
  UnitSystem() = default;

  // Throws Error(Domain) unless all three values are finite and positive.
  static UnitSystem make(double hbar, double mass, double e2);
  static UnitSystem atomic() { return UnitSystem{}; }

  double hbar() const noexcept { return hbar_; }
  double mass() const noexcept { return mass_; }
  double e2() const noexcept { return e2_; }
  double a0() const noexcept { return hbar_ * hbar_ / (mass_ * e2_); }

  // (2 pi hbar)^3, the phase-space cell volume.
  double cell_volume() const noexcept;

  bool operator==(const UnitSystem&) const = default;

 private:
  UnitSystem(double hbar, double mass, double e2)
      : hbar_(hbar), mass_(mass), e2_(e2) {}

  double hbar_ = 1.0;
  double mass_ = 1.0;
  double e2_ = 1.0;
};

}  // namespace aforge
