#pragma once

#include <vector>

#include "aforge/potentials.hpp"
#include "aforge/samples.hpp"
#include "aforge/units.hpp"

namespace aforge {

struct OracleConfig {
  double box_radius = 20.0;          // R for channel_spectrum / channel traces
  int ell_max = 60;                  // channels evaluated one by one
  int levels_per_channel = 4000;     // retained box levels per channel
  int grid_points = 400;             // finite-difference grid (non-Bessel families)
  std::vector<double> richardson_levels{20.0, 40.0, 80.0};  // radii for R -> inf

  // Throws Error(InvalidArgument) on R <= 0, ell_max < 10, grid_points < 200,
  // levels_per_channel < 1, or fewer than two increasing radii.
  void validate() const;
};

struct ChannelSpectrum {
  int ell = 0;
  double nu = 0.5;
  std::vector<double> eigenvalues;
  double box_radius = 0.0;  // 0 for synthetic spectra: no asymptotic tail
  UnitSystem units;
  bool discretization_converged = true;
};

// Exact spherical-box levels E_n = hbar^2 z_{nu,n}^2 / (2 m R^2).
ChannelSpectrum bessel_box_spectrum(double nu, int ell, double box_radius, int levels,
                                    const UnitSystem& units);

// InverseSquare: Bessel-zero spectrum with nu = sqrt(2 m alpha/hbar^2 + (l+1/2)^2).
// Other families: symmetric tridiagonal finite differences on (0, R) with
// Dirichlet ends, extrapolated over grids N, 2N, 4N; discretization_converged
// is false when the two extrapolants differ by more than 1e-6 relative.
ChannelSpectrum channel_spectrum(const PotentialSpec& spec, const UnitSystem& units, int ell,
                                 const OracleConfig& config);

struct ChannelTrace {
  double value = 0.0;  // includes the asymptotic tail
  double tail = 0.0;
  bool precision_warning = false;  // tail > 1% of the partial sum
};

// (2l+1) sum_n (Lambda + E_n)^-1; levels past the last one are summed from
// z_{nu,n} ~ pi (n + nu/2 - 1/4) when the spectrum has a box radius.
ChannelTrace quantum_channel_trace(const ChannelSpectrum& ch, double lambda);

// (2l+1)/(pi hbar) \int_0^R dr \int_0^P dp (Lambda + p^2/2m + hbar^2 (l+1/2)^2/(2 m r^2) + U)^-1
// with P = hbar z_cut / R matched to the quantum cutoff (levels_per_channel
// levels), plus the same asymptotic tail as quantum_channel_trace.
ChannelTrace classical_channel_trace(const PotentialSpec& spec, const UnitSystem& units, int ell,
                                     double lambda, const OracleConfig& config);

// The same for U = 0 with centrifugal order nu (an inverse-square potential
// only shifts nu), matched to a bessel_box_spectrum with `levels` levels.
ChannelTrace classical_channel_trace_bessel(double nu, int ell, double lambda, double box_radius,
                                            int levels, const UnitSystem& units);

struct OracleResult {
  double w = 0.0;
  double error = 0.0;
  int channels = 0;
};

// Nonperturbative reduced trace difference w(Lambda).
//
// InverseSquare: free-space radial resolvents restricted to a ball r < R, so
// that W_R = sum_l (2l+1) [T_nu - T_nu0] - dC_3D(R) with closed-form Langer
// classical channels; extrapolated in 1/R over richardson_levels.
//
// Yukawa: infinite-space Gel'fand-Yaglom channel determinants. The first
// order in U cancels exactly between quantum and classical traces, so only
// the second-and-higher parts are integrated; each channel subtracts its
// Langer classical counterpart and the discrete l-sum is reconciled with the
// 3D integral interval by interval. A power-law tail is fitted past ell_max.
//
// Other families raise Error(Unsupported): a Coulomb tail makes the
// first-order trace grow without bound with the box.
OracleResult oracle_w(const PotentialSpec& spec, const UnitSystem& units, double lambda,
                      const OracleConfig& config = {});

TraceSamples sample_oracle(const PotentialSpec& spec, const UnitSystem& units,
                           const std::vector<double>& lambda_grid, const OracleConfig& config = {});

// Per-channel pieces of the Yukawa oracle, exposed for testing.
struct ChannelDeterminant {
  double first_order = 0.0;   // d/dLambda of the O(U) part of ln det
  double higher_order = 0.0;  // d/dLambda of the O(U^2 and up) part
};
ChannelDeterminant gelfand_yaglom_channel(const PotentialSpec& spec, const UnitSystem& units,
                                          int ell, double lambda);

// Second-and-higher order part of the Langer classical channel trace (no
// (2l+1) factor) in infinite space.
double langer_channel_higher_order(const PotentialSpec& spec, const UnitSystem& units, double nu,
                                   double lambda);

// Lambda * w_R for the inverse-square ball at g = 2 m alpha / hbar^2 and
// X = sqrt(2 m Lambda) R / hbar.
double inverse_square_ball(double g, double X);

}  // namespace aforge
