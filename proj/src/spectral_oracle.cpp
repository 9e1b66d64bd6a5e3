#include "aforge/spectral_oracle.hpp"

#include <Eigen/Eigenvalues>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "aforge/bessel.hpp"
#include "aforge/error.hpp"
#include "aforge/kernels.hpp"
#include "aforge/quadrature.hpp"

namespace aforge {
namespace {

constexpr double kPi = std::numbers::pi;

// 10-point Gauss-Legendre on [-1, 1], positive half
constexpr double kGLx[5] = {0.1488743389816312, 0.4333953941292472, 0.6794095682990244,
                            0.8650633666889845, 0.9739065285171717};
constexpr double kGLw[5] = {0.2955242247147529, 0.2692667193099963, 0.2190863625159820,
                            0.1494513491505806, 0.0666713443086881};

template <class F>
double gauss_legendre_unit(F&& f, double a) {
  double s = 0.0;
  for (int i = 0; i < 5; ++i) s += kGLw[i] * (f(a + 0.5 + 0.5 * kGLx[i]) + f(a + 0.5 - 0.5 * kGLx[i]));
  return 0.5 * s;
}

void require_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) raise(ErrorKind::Domain, "Lambda must be positive");
}

// sum_{n > N} (Lambda + c (n + beta)^2)^-1, midpoint rule on the asymptotic zeros
double asymptotic_tail(double lambda, double c, double beta, std::size_t N) {
  const double y = std::sqrt(c / lambda) * (N + 0.5 + beta);
  return std::atan(1.0 / y) / std::sqrt(c * lambda);
}

double tail_scale(const UnitSystem& u, double R) {
  return u.hbar() * u.hbar() * kPi * kPi / (2.0 * u.mass() * R * R);
}

double mcmahon_offset(double nu) { return 0.5 * nu - 0.25; }

std::size_t retained_levels(const PotentialSpec& spec, const OracleConfig& config) {
  if (spec.family == PotentialFamily::InverseSquare) return config.levels_per_channel;
  return std::min<std::size_t>(config.levels_per_channel, config.grid_points / 8);
}

std::vector<double> fd_levels(const PotentialSpec& spec, const UnitSystem& u, int ell, double R,
                              int N, std::size_t count) {
  const double h = R / N;
  const double kin = u.hbar() * u.hbar() / (2.0 * u.mass() * h * h);
  const double cent = u.hbar() * u.hbar() * ell * (ell + 1.0) / (2.0 * u.mass());
  Eigen::VectorXd d(N - 1), s(N - 2);
  for (int i = 1; i < N; ++i) {
    const double r = i * h;
    d[i - 1] = 2.0 * kin + cent / (r * r) + evaluate(spec, u, r);
  }
  s.setConstant(-kin);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(d, s, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  std::vector<double> out(std::min<std::size_t>(count, ev.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ev[i];
  return out;
}

// (1/(pi hbar)) \int_0^R dr \int_0^P dp (a(r) + p^2/2m)^-1, principal value where a < 0
template <class A>
double classical_cut(A&& a_of_r, double R, double P, const UnitSystem& u) {
  const double m = u.mass();
  auto f = [&](double r) {
    const double a = a_of_r(r);
    if (a > 0.0) {
      const double s = std::sqrt(2.0 * m * a);
      return 2.0 * m / s * std::atan(P / s);
    }
    const double b = std::sqrt(-2.0 * m * a);
    return m / b * std::log(std::abs((P - b) / (P + b)));
  };
  const auto budget = QuadratureBudget::make(1e-300, 1e-13, 2000000);
  const double v = require_converged(integrate_adaptive(f, 0.0, R, budget), "classical channel").value;
  return v / (kPi * u.hbar());
}

ChannelTrace finish_classical(double cut, double lambda, double nu, int ell, double R,
                              std::size_t levels, const UnitSystem& u) {
  const double tail = asymptotic_tail(lambda, tail_scale(u, R), mcmahon_offset(nu), levels);
  ChannelTrace t;
  t.value = (2 * ell + 1) * (cut + tail);
  t.tail = (2 * ell + 1) * tail;
  t.precision_warning = tail > 0.01 * std::abs(cut);
  return t;
}

// Neville extrapolation to h = 0 of values v_i at h_i = 1/R_i.
double extrapolate_to_zero(const std::vector<double>& h, std::vector<double> v) {
  const std::size_t n = h.size();
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      v[i] = (h[i - k] * v[i] - h[i] * v[i - 1]) / (h[i - k] - h[i]);
      if (i == k) break;
    }
  return v[n - 1];
}

struct Tail {
  double sum = 0.0;
  double error = 0.0;
};

// Power-law tail of a channel series t_0..t_{n-1}, fitted on its upper half.
Tail fitted_tail(const std::vector<double>& t, double total) {
  const std::size_t n = t.size();
  const std::size_t lo = n / 2;
  double upper = 0.0;
  bool one_sign = true;
  for (std::size_t l = lo; l < n; ++l) {
    upper += std::abs(t[l]);
    if (!(t[l] * t[lo] > 0.0)) one_sign = false;
  }
  if (one_sign) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double cnt = static_cast<double>(n - lo);
    for (std::size_t l = lo; l < n; ++l) {
      const double x = std::log(l + 0.5), y = std::log(std::abs(t[l]));
      sx += x, sy += y, sxx += x * x, sxy += x * y;
    }
    const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    const double p = -slope;
    if (p > 1.5) {
      const double A = std::exp((sy - slope * sx) / cnt);
      Tail tail;
      tail.sum = std::copysign(A * std::pow(static_cast<double>(n), 1.0 - p) / (p - 1.0), t[lo]);
      tail.error = 0.5 * std::abs(tail.sum);
      return tail;
    }
  }
  // noisy or flat terms are acceptable only once they no longer matter
  if (upper <= 1e-6 * std::abs(total)) return Tail{0.0, upper};
  raise(ErrorKind::TailDivergent, "channel terms do not decay fast enough for a tail fit");
}

// -------------------------------------------------------------------------
// inverse-square ball

double ball_interval_term(double g, double X, long l) {
  const double X2 = X * X;
  auto f = [g, X2](double L) {
    const double a = std::sqrt(g + L * L + X2), b = std::sqrt(L * L + X2), c = std::sqrt(g + L * L);
    return L * g * (1.0 / (a + b) - 1.0 / (c + L));
  };
  return f(l + 0.5) - gauss_legendre_unit(f, static_cast<double>(l));
}

// -------------------------------------------------------------------------
// Gel'fand-Yaglom channel ODE

using OdeState = std::array<double, 7>;

double screened_coulomb_strength(const PotentialSpec& spec, const UnitSystem& u) {
  // lim_{r->0} r * 2m U / hbar^2
  return 2.0 * u.mass() * spec.sign_factor() * spec.Z * u.e2() / (u.hbar() * u.hbar());
}

}  // namespace

void OracleConfig::validate() const {
  if (!(box_radius > 0.0)) raise(ErrorKind::InvalidArgument, "box radius must be positive");
  if (ell_max < 10) raise(ErrorKind::InvalidArgument, "ell_max must be >= 10");
  if (grid_points < 200) raise(ErrorKind::InvalidArgument, "grid_points must be >= 200");
  if (levels_per_channel < 1) raise(ErrorKind::InvalidArgument, "levels_per_channel must be >= 1");
  if (richardson_levels.size() < 2) raise(ErrorKind::InvalidArgument, "need at least two Richardson radii");
  for (std::size_t i = 0; i < richardson_levels.size(); ++i) {
    if (!(richardson_levels[i] > 0.0)) raise(ErrorKind::InvalidArgument, "Richardson radii must be positive");
    if (i > 0 && !(richardson_levels[i] > richardson_levels[i - 1]))
      raise(ErrorKind::InvalidArgument, "Richardson radii must increase");
  }
}

ChannelSpectrum bessel_box_spectrum(double nu, int ell, double box_radius, int levels,
                                    const UnitSystem& units) {
  if (!(box_radius > 0.0)) raise(ErrorKind::InvalidArgument, "box radius must be positive");
  ChannelSpectrum ch;
  ch.ell = ell;
  ch.nu = nu;
  ch.box_radius = box_radius;
  ch.units = units;
  const double scale = units.hbar() * units.hbar() / (2.0 * units.mass() * box_radius * box_radius);
  for (double z : bessel_j_zeros(nu, levels)) ch.eigenvalues.push_back(scale * z * z);
  return ch;
}

ChannelSpectrum channel_spectrum(const PotentialSpec& spec, const UnitSystem& units, int ell,
                                 const OracleConfig& config) {
  config.validate();
  if (ell < 0) raise(ErrorKind::InvalidArgument, "ell must be non-negative");
  if (classify(spec).case_label == CaseLabel::Unsupported)
    raise(ErrorKind::Unsupported, "singularity stronger than x^-2");
  const double R = config.box_radius;
  if (spec.family == PotentialFamily::InverseSquare) {
    const double g = 2.0 * units.mass() * spec.alpha / (units.hbar() * units.hbar());
    const double nu = std::sqrt(g + (ell + 0.5) * (ell + 0.5));
    return bessel_box_spectrum(nu, ell, R, config.levels_per_channel, units);
  }

  const std::size_t count = retained_levels(spec, config);
  const int N = config.grid_points;
  const auto e1 = fd_levels(spec, units, ell, R, N, count);
  const auto e2 = fd_levels(spec, units, ell, R, 2 * N, count);
  const auto e4 = fd_levels(spec, units, ell, R, 4 * N, count);
  ChannelSpectrum ch;
  ch.ell = ell;
  ch.nu = ell + 0.5;
  ch.box_radius = R;
  ch.units = units;
  for (std::size_t i = 0; i < e1.size(); ++i) {
    // second-order scheme: Richardson in h^2
    const double r1 = (4.0 * e2[i] - e1[i]) / 3.0;
    const double r2 = (4.0 * e4[i] - e2[i]) / 3.0;
    if (std::abs(r2 - r1) > 1e-6 * std::abs(r2)) ch.discretization_converged = false;
    ch.eigenvalues.push_back(r2);
  }
  return ch;
}

ChannelTrace quantum_channel_trace(const ChannelSpectrum& ch, double lambda) {
  require_lambda(lambda);
  double partial = 0.0;
  for (double e : ch.eigenvalues) {
    if (!(lambda + e > 0.0)) raise(ErrorKind::Domain, "Lambda + E_n must be positive");
    partial += 1.0 / (lambda + e);
  }
  double tail = 0.0;
  if (ch.box_radius > 0.0)
    tail = asymptotic_tail(lambda, tail_scale(ch.units, ch.box_radius), mcmahon_offset(ch.nu),
                           ch.eigenvalues.size());
  ChannelTrace t;
  t.value = (2 * ch.ell + 1) * (partial + tail);
  t.tail = (2 * ch.ell + 1) * tail;
  t.precision_warning = tail > 0.01 * std::abs(partial);
  return t;
}

ChannelTrace classical_channel_trace_bessel(double nu, int ell, double lambda, double box_radius,
                                            int levels, const UnitSystem& units) {
  require_lambda(lambda);
  const double R = box_radius;
  const double P = units.hbar() * kPi * (levels + 0.5 + mcmahon_offset(nu)) / R;
  const double c = units.hbar() * units.hbar() * nu * nu / (2.0 * units.mass());
  const double cut = classical_cut([&](double r) { return lambda + c / (r * r); }, R, P, units);
  return finish_classical(cut, lambda, nu, ell, R, levels, units);
}

ChannelTrace classical_channel_trace(const PotentialSpec& spec, const UnitSystem& units, int ell,
                                     double lambda, const OracleConfig& config) {
  config.validate();
  require_lambda(lambda);
  if (classify(spec).case_label == CaseLabel::Unsupported)
    raise(ErrorKind::Unsupported, "singularity stronger than x^-2");
  const double R = config.box_radius;
  if (spec.family == PotentialFamily::InverseSquare) {
    const double g = 2.0 * units.mass() * spec.alpha / (units.hbar() * units.hbar());
    const double nu = std::sqrt(g + (ell + 0.5) * (ell + 0.5));
    return classical_channel_trace_bessel(nu, ell, lambda, R, config.levels_per_channel, units);
  }
  const std::size_t levels = retained_levels(spec, config);
  const double nu = ell + 0.5;
  const double P = units.hbar() * kPi * (levels + 0.5 + mcmahon_offset(nu)) / R;
  const double c = units.hbar() * units.hbar() * nu * nu / (2.0 * units.mass());
  const double cut = classical_cut(
      [&](double r) { return lambda + c / (r * r) + evaluate(spec, units, r); }, R, P, units);
  return finish_classical(cut, lambda, nu, ell, R, levels, units);
}

double inverse_square_ball(double g, double X) {
  if (!(g >= 0.0) || !(X > 0.0)) raise(ErrorKind::Domain, "inverse_square_ball needs g >= 0, X > 0");
  constexpr long kBlock = 256;
  const long start_check = static_cast<long>(2.0 * (X + std::sqrt(g))) + 64;
  double Q = 0.0, S = 0.0;
  std::vector<double> nu(kBlock), nu0(kBlock), tq(kBlock), tq0(kBlock);
  for (long l0 = 0;; l0 += kBlock) {
    if (l0 > 50'000'000) raise(ErrorKind::Unconverged, "inverse-square channel sum did not settle");
    for (long i = 0; i < kBlock; ++i) {
      nu0[i] = l0 + i + 0.5;
      nu[i] = std::sqrt(g + nu0[i] * nu0[i]);
    }
    if (nu0[0] >= kDebyeMinOrder) {
      kernels::debye_tail(nu.data(), tq.data(), kBlock, X);
      kernels::debye_tail(nu0.data(), tq0.data(), kBlock, X);
    } else {
      for (long i = 0; i < kBlock; ++i) {
        tq[i] = bessel_tau(nu[i], X);
        tq0[i] = bessel_tau(nu0[i], X);
      }
    }
    double bq = 0.0, bs = 0.0;
    for (long i = 0; i < kBlock; ++i) {
      bq -= (2.0 * (l0 + i) + 1.0) * (tq[i] - tq0[i]);
      bs += ball_interval_term(g, X, l0 + i);
    }
    Q += bq;
    S += bs;
    if (l0 > start_check && std::abs(bq) + std::abs(bs) <= 1e-15 * (std::abs(Q) + std::abs(S))) break;
  }
  return Q + S;
}

ChannelDeterminant gelfand_yaglom_channel(const PotentialSpec& spec, const UnitSystem& units,
                                          int ell, double lambda) {
  require_lambda(lambda);
  if (spec.family != PotentialFamily::Yukawa)
    raise(ErrorKind::Unsupported, "channel determinants are implemented for Yukawa potentials");
  namespace ode = boost::numeric::odeint;
  const double m = units.mass(), hb = units.hbar();
  const double k = std::sqrt(2.0 * m * lambda) / hb;
  const double dk = m / (hb * hb * k);  // d kappa / d Lambda
  const double nu0 = ell + 0.5;
  const double c = screened_coulomb_strength(spec, units);
  const double vscale = 2.0 * m / (hb * hb);

  // y = {rho, g1, h1, g2, h2, int h1, int h2}; g = (ln psi/psi0)', h = dg/dLambda,
  // split into first order in U (g1, h1) and the rest (g2, h2)
  auto rhs = [&](const OdeState& y, OdeState& d, double r) {
    const double x = k * r;
    const double rho = y[0];
    const double drho = 1.0 - (2.0 * nu0 + 1.0) * rho / x - rho * rho;
    const double L0 = (ell + 1.0) / r + k * rho;
    const double dL0 = dk * (rho + x * drho);
    const double v = vscale * evaluate(spec, units, r);
    const double g = y[1] + y[3], h = y[2] + y[4];
    d[0] = k * drho;
    d[1] = v - 2.0 * L0 * y[1];
    d[2] = -2.0 * L0 * y[2] - 2.0 * y[1] * dL0;
    d[3] = -g * g - 2.0 * L0 * y[3];
    d[4] = -2.0 * g * h - 2.0 * L0 * y[4] - 2.0 * y[3] * dL0;
    d[5] = y[2];
    d[6] = y[4];
  };
  const double r0 = 1e-7 / std::max({k, spec.kappa, std::abs(c)});
  const double rmax = 3.0 * nu0 / k + 40.0 / spec.kappa;
  OdeState y{};
  y[0] = k * r0 / (2.0 * nu0 + 2.0);
  y[1] = c / (2.0 * (ell + 1.0));
  auto stepper = ode::make_controlled(1e-16, 1e-11, ode::runge_kutta_dopri5<OdeState>());
  ode::integrate_adaptive(stepper, rhs, y, r0, rmax, 1e-3 * r0);
  return ChannelDeterminant{y[5], y[6]};
}

double langer_channel_higher_order(const PotentialSpec& spec, const UnitSystem& units, double nu,
                                   double lambda) {
  require_lambda(lambda);
  const double m = units.mass(), hb = units.hbar();
  const double cent = hb * hb * nu * nu / (2.0 * m);
  // \int dp/(2 pi hbar) (A + p^2/2m)^-1 = sqrt(2m)/(2 hbar sqrt(A)), expanded
  // past first order in U; zero principal value where A < 0
  auto f = [&](double r) {
    const double U = evaluate(spec, units, r);
    const double B = lambda + cent / (r * r);
    const double A = B + U;
    const double b = std::sqrt(B);
    if (A > 0.0) {
      const double a = std::sqrt(A);
      return U * U * (a + 2.0 * b) / (2.0 * a * b * b * b * (a + b) * (a + b));
    }
    return -1.0 / b + U / (2.0 * B * b);
  };
  const auto budget = QuadratureBudget::make(1e-300, 1e-12, 2000000);
  const double v = require_converged(integrate_adaptive(f, 0.0, INFINITY, budget), "Langer channel").value;
  return std::sqrt(2.0 * m) / (2.0 * hb) * v;
}

OracleResult oracle_w(const PotentialSpec& spec, const UnitSystem& units, double lambda,
                      const OracleConfig& config) {
  config.validate();
  require_lambda(lambda);
  OracleResult res;

  if (spec.family == PotentialFamily::InverseSquare) {
    const double g = 2.0 * units.mass() * spec.alpha / (units.hbar() * units.hbar());
    const double kappa = std::sqrt(2.0 * units.mass() * lambda) / units.hbar();
    std::vector<double> h, v;
    for (double R : config.richardson_levels) {
      h.push_back(1.0 / R);
      v.push_back(inverse_square_ball(g, kappa * R) / lambda);
    }
    res.w = extrapolate_to_zero(h, v);
    // compare with the extrapolant that drops the smallest radius
    const std::vector<double> h2(h.begin() + 1, h.end()), v2(v.begin() + 1, v.end());
    const double coarser = h2.size() >= 2 ? extrapolate_to_zero(h2, v2) : v2.back();
    res.error = std::abs(res.w - coarser) + 1e-12 * std::abs(res.w);
    res.channels = -1;
    return res;
  }

  if (spec.family == PotentialFamily::Yukawa) {
    if (spec.Z == 0.0) return res;
    auto f = [&](double L) { return 2.0 * L * langer_channel_higher_order(spec, units, L, lambda); };
    std::vector<double> terms;
    double total = 0.0, scale = 0.0;
    for (int l = 0; l <= config.ell_max; ++l) {
      const double nu = l + 0.5;
      const double q = gelfand_yaglom_channel(spec, units, l, lambda).higher_order;
      const double cl = langer_channel_higher_order(spec, units, nu, lambda);
      const double t = (2 * l + 1) * (q - cl) + f(nu) - gauss_legendre_unit(f, l);
      terms.push_back(t);
      total += t;
      scale += (2 * l + 1) * std::abs(q);
    }
    const Tail tail = fitted_tail(terms, total);
    res.w = total + tail.sum;
    res.error = tail.error + 1e-8 * scale;
    res.channels = config.ell_max + 1;
    return res;
  }

  raise(ErrorKind::Unsupported,
        std::string("oracle supports inverse-square and Yukawa potentials, not ") + to_string(spec.family));
}

TraceSamples sample_oracle(const PotentialSpec& spec, const UnitSystem& units,
                           const std::vector<double>& lambda_grid, const OracleConfig& config) {
  if (lambda_grid.empty()) raise(ErrorKind::InvalidArgument, "empty Lambda grid");
  TraceSamples s;
  s.spec = spec;
  s.units = units;
  s.source = TraceSource::Oracle;
  for (double lambda : lambda_grid) {
    const auto r = oracle_w(spec, units, lambda, config);
    s.entries.push_back({lambda, r.w, r.error});
  }
  s.validate();
  return s;
}

}  // namespace aforge
