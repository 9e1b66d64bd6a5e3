#pragma once

#include <string>
#include <string_view>

#include "aforge/units.hpp"

namespace aforge {

enum class PotentialFamily { Coulomb, InverseSquare, Yukawa, CutoffCoulomb };
enum class Interaction { Attractive, Repulsive };

// Radial potential family with its parameters. Construct through the named
// factories, which enforce the parameter invariants.
//
//   Coulomb         U = -Z e^2 / r
//   InverseSquare   U = +alpha / r^2                 (repulsive only)
//   Yukawa          U = -Z e^2 exp(-kappa r) / r
//   CutoffCoulomb   U = -Z e^2 / max(r, r_cut)
//
// A repulsive Coulomb-type spec flips the overall sign.
struct PotentialSpec {
  PotentialFamily family = PotentialFamily::Coulomb;
  double Z = 0.0;
  double alpha = 0.0;
  double kappa = 0.0;
  double r_cut = 0.0;
  Interaction sign = Interaction::Attractive;

  static PotentialSpec coulomb(double Z, Interaction sign = Interaction::Attractive);
  static PotentialSpec inverse_square(double alpha);
  static PotentialSpec yukawa(double Z, double kappa, Interaction sign = Interaction::Attractive);
  static PotentialSpec cutoff_coulomb(double Z, double r_cut,
                                      Interaction sign = Interaction::Attractive);

  // +1 for repulsive, -1 for attractive.
  double sign_factor() const noexcept { return sign == Interaction::Repulsive ? 1.0 : -1.0; }

  bool operator==(const PotentialSpec&) const = default;
};

enum class TailKind { CoulombTail, Screened };
enum class CaseLabel { A, B, C, Unsupported };

struct SingularityClass {
  double small_x_exponent = 0.0;  // U ~ x^(-s) as x -> 0
  TailKind large_x_tail = TailKind::Screened;
  CaseLabel case_label = CaseLabel::Unsupported;

  bool operator==(const SingularityClass&) const = default;
};

// U(r). Throws Error(Domain) for r <= 0.
double evaluate(const PotentialSpec& spec, const UnitSystem& units, double r);

// Fourier transform of the unsigned potential shape with the convention
// U(k) = \int d^3x U(x) exp(-i k.x / hbar), normalised so the Coulomb
// transform is 4 pi Z e^2 hbar^2 / k^2. Multiply by sign_factor() for the
// transform of U itself. The CutoffCoulomb transform oscillates in sign.
// Throws Error(Domain) for k <= 0 and Error(NotRepresentable) for
// InverseSquare.
double fourier_transform_at(const PotentialSpec& spec, const UnitSystem& units, double k);

bool has_fourier_transform(const PotentialSpec& spec) noexcept;

SingularityClass classify(const PotentialSpec& spec) noexcept;

// Maps a small-x exponent onto the case table (s = 2 -> A, s = 1 -> B,
// 0 <= s < 1 -> C, otherwise Unsupported).
CaseLabel case_for_exponent(double s) noexcept;

// lim_{k->0} k^2 U(k) for the unsigned shape: 4 pi Z e^2 hbar^2 when the
// potential keeps a -Z e^2/r tail, 0 when the tail is screened.
double coulomb_tail_coefficient(const PotentialSpec& spec, const UnitSystem& units) noexcept;

// Parses `coulomb:Z=1`, `inverse-square:alpha=50`, `yukawa:Z=1,kappa=0.5`,
// `cutoff-coulomb:Z=1,rcut=1`. Case-insensitive; unknown or missing keys
// raise Error(Parse), invalid values Error(Domain).
PotentialSpec parse_potential(std::string_view text);

std::string to_string(const PotentialSpec& spec);
const char* to_string(PotentialFamily family) noexcept;
const char* to_string(TailKind tail) noexcept;
const char* to_string(CaseLabel label) noexcept;

}  // namespace aforge
