#include <doctest.h>

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "aforge/error.hpp"
#include "aforge/quadrature.hpp"
#include "aforge/resolvent.hpp"
#include "aforge/samples.hpp"

using namespace aforge;
using std::numbers::pi;

namespace {

// Polar-angle average of (L + |p+k|^2/2m)^-1 by 200-point Gauss-Legendre.
double angle_average_direct(double p, double k, double lambda, double m = 1.0) {
  auto f = [&](double c) { return 1.0 / (lambda + (p * p + k * k + 2 * p * k * c) / (2 * m)); };
  return 0.5 * boost::math::quadrature::gauss<double, 200>::integrate(f, -1.0, 1.0);
}

double midpoint(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += f(a + (i + 0.5) * h);
  return s * h;
}

}  // namespace

TEST_CASE("integrate_adaptive: examples") {
  auto e1 = integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0);
  CHECK(e1.converged);
  CHECK(e1.value == doctest::Approx(1.0 / 3.0).epsilon(1e-13));

  auto e2 = integrate_adaptive([](double x) { return std::exp(-x); }, 0.0, INFINITY);
  CHECK(e2.value == doctest::Approx(1.0).epsilon(1e-12));

  auto f3 = [](double p) { return p * p / std::pow(1.0 + p * p / 2.0, 3); };
  const double exact = pi * std::sqrt(2.0) / 8.0;
  // midpoint oracle on [0, 400] plus the analytic 8/(3 p^3) tail
  const double mid = midpoint(f3, 0.0, 400.0, 1000000) + 8.0 / (3.0 * std::pow(400.0, 3));
  CHECK(mid == doctest::Approx(exact).epsilon(1e-6));
  CHECK(integrate_adaptive(f3, 0.0, INFINITY).value == doctest::Approx(exact).epsilon(1e-10));

  CHECK(integrate_adaptive([](double) { return 1.0; }, 2.0, 2.0).value == 0.0);
}

TEST_CASE("integrate_adaptive: error estimates bound the true error") {
  struct Case {
    std::function<double(double)> f;
    double a, b, exact;
  };
  const std::vector<Case> cases{
      {[](double x) { return std::sin(x); }, 0.0, pi, 2.0},
      {[](double x) { return std::sqrt(x); }, 0.0, 1.0, 2.0 / 3.0},
      {[](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 2.0},
      {[](double x) { return std::log(x); }, 0.0, 1.0, -1.0},
      {[](double x) { return 1.0 / (1.0 + x * x); }, 0.0, INFINITY, pi / 2},
      {[](double x) { return std::exp(-x * x); }, 0.0, INFINITY, std::sqrt(pi) / 2},
      {[](double x) { return x * std::exp(-x); }, 0.0, INFINITY, 1.0},
      {[](double x) { return std::cos(50 * x); }, 0.0, 1.0, std::sin(50.0) / 50.0},
      {[](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, 0.045 + 0.245},
      {[](double x) { return 1.0 / (1e-4 + (x - 0.5) * (x - 0.5)); }, 0.0, 1.0, 2.0 * std::atan(50.0) / 1e-2},
  };
  for (std::size_t i = 0; i < cases.size(); ++i) {
    CAPTURE(i);
    const auto& c = cases[i];
    const auto e = integrate_adaptive(c.f, c.a, c.b);
    CHECK(e.converged);
    const double true_err = std::abs(e.value - c.exact);
    CHECK(true_err <= e.error + 1e-14 * std::abs(c.exact));
  }
}

TEST_CASE("integrate_adaptive: budget exhaustion is reported") {
  const auto budget = QuadratureBudget::make(1e-300, 1e-300, 1000);
  const auto e = integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, budget);
  CHECK_FALSE(e.converged);
  CHECK_THROWS_AS(require_converged(e, "test"), Error);
  CHECK_THROWS_AS(QuadratureBudget::make(0.0, 1e-8, 10000), Error);
  CHECK_THROWS_AS(QuadratureBudget::make(1e-8, 1e-8, 10), Error);
}

TEST_CASE("integrate_adaptive_2d") {
  auto poly = [](std::span<const double> x, std::span<const double> y, std::span<double> out) {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * y[i];
  };
  CHECK(integrate_adaptive_2d(poly, Rect{0, 1, 0, 2}).value == doctest::Approx(1.0).epsilon(1e-13));

  auto decay = [](std::span<const double> x, std::span<const double> y, std::span<double> out) {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::exp(-x[i] - 2 * y[i]);
  };
  const auto e = integrate_adaptive_2d(decay, Rect{0, INFINITY, 0, INFINITY});
  CHECK(e.converged);
  CHECK(e.value == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("feynman_combine") {
  CHECK(feynman_combine(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(feynman_combine(2.0, 3.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(feynman_combine(10.0, 0.1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(feynman_combine(0.0, 1.0), Error);
  CHECK_THROWS_AS(feynman_combine(1.0, -2.0), Error);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(0.01, 100.0);
  for (int i = 0; i < 100; ++i) {
    const double a = d(rng), b = d(rng);
    CHECK(std::abs(feynman_combine(a, b) * a * b - 1.0) < 1e-8);
  }
}

TEST_CASE("angle_averaged_resolvent: examples against direct angle average") {
  const auto au = UnitSystem::atomic();
  CHECK(angle_averaged_resolvent(0.0, 2.0, 1.0, au) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(angle_averaged_resolvent(1.0, 0.0, 1.0, au) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(angle_averaged_resolvent(1.0, 1.0, 1.0, au) == doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-14));
  CHECK(angle_average_direct(1.0, 1.0, 1.0) == doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-12));

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> pk(0.0, 10.0), lam(0.1, 50.0);
  for (int i = 0; i < 200; ++i) {
    const double p = pk(rng), k = pk(rng), l = lam(rng);
    CHECK(angle_averaged_resolvent(p, k, l, au) == doctest::Approx(angle_average_direct(p, k, l)).epsilon(1e-11));
  }
  const auto u = UnitSystem::make(1.0, 2.5, 1.0);
  CHECK(angle_averaged_resolvent(0.7, 1.9, 3.0, u) ==
        doctest::Approx(angle_average_direct(0.7, 1.9, 3.0, 2.5)).epsilon(1e-12));
  CHECK_THROWS_AS(angle_averaged_resolvent(1.0, 1.0, 0.0, au), Error);
  CHECK_THROWS_AS(angle_averaged_resolvent(-1.0, 1.0, 1.0, au), Error);
}

TEST_CASE("angle_averaged_resolvent: p <-> k symmetry") {
  const auto au = UnitSystem::atomic();
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> pk(0.0, 30.0), lam(0.01, 100.0);
  for (int i = 0; i < 500; ++i) {
    const double p = pk(rng), k = pk(rng), l = lam(rng);
    const double a = angle_averaged_resolvent(p, k, l, au), b = angle_averaged_resolvent(k, p, l, au);
    CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
  }
}

TEST_CASE("small_k_curvature: examples and finite differences") {
  const auto au = UnitSystem::atomic();
  CHECK(small_k_curvature(0.0, 1.0, au) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(small_k_curvature(1.0, 1.0, au) == doctest::Approx(-10.0 / 81.0).epsilon(1e-14));
  CHECK(small_k_curvature(0.0, 4.0, au) == doctest::Approx(small_k_curvature(0.0, 1.0, au) / 16.0));

  // the bracket is even in k, so a central difference of the direct average
  // at k = 1e-3 recovers the curvature
  for (double p : {0.0, 0.3, 1.0, 2.0}) {
    for (double l : {0.5, 1.0, 7.0}) {
      const double k = 1e-3;
      const double g = 1.0 / (l + p * p / 2.0);
      const double fd = (angle_average_direct(p, k, l) - g) / (k * k);
      CHECK(small_k_curvature(p, l, au) == doctest::Approx(fd).epsilon(1e-5));
    }
  }
}

TEST_CASE("resolvent bracket divided by k^2 approaches the curvature") {
  const auto au = UnitSystem::atomic();
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> pd(0.0, 20.0), lam(0.1, 200.0);
  for (int i = 0; i < 100; ++i) {
    const double p = pd(rng), l = lam(rng), k = 1e-2;
    const double direct = angle_averaged_resolvent(p, k, l, au) - free_resolvent(p, l, au);
    CHECK(direct / (k * k) == doctest::Approx(small_k_curvature(p, l, au)).epsilon(1e-3));
    CHECK(resolvent_bracket(p, k, l, au) == doctest::Approx(direct).epsilon(1e-6));
  }
}

TEST_CASE("fit_power_law") {
  SUBCASE("exact power laws") {
    const std::vector<double> l{1, 2, 4, 8, 16}, w{2, 1, 0.5, 0.25, 0.125};
    const auto f = fit_power_law(l, w);
    CHECK(f.amplitude == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(f.gamma == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f.residual < 1e-10);
    CHECK(f.samples == 5);

    const std::vector<double> l2{1, 10, 100, 1000}, w2{-3, -0.03, -3e-4, -3e-6};
    const auto g = fit_power_law(l2, w2);
    CHECK(g.amplitude == doctest::Approx(-3.0).epsilon(1e-12));
    CHECK(g.gamma == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(g.residual < 1e-10);

    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> cd(-10, 10), gd(0.2, 3.0);
    for (int i = 0; i < 20; ++i) {
      const double c = cd(rng), gam = gd(rng);
      const auto grid = geometric_grid(3.0, 3000.0, 9);
      std::vector<double> ws;
      for (double x : grid) ws.push_back(c * std::pow(x, -gam));
      const auto h = fit_power_law(grid, ws);
      CHECK(h.amplitude == doctest::Approx(c).epsilon(1e-10));
      CHECK(h.gamma == doctest::Approx(gam).epsilon(1e-10));
      CHECK(h.residual < 1e-10);
    }
  }
  SUBCASE("preconditions") {
    auto kind = [](std::vector<double> l, std::vector<double> w) {
      try {
        fit_power_law(l, w);
      } catch (const Error& e) {
        return e.kind();
      }
      return ErrorKind::Domain;
    };
    // fewer than four samples, or less than a decade
    CHECK(kind({1, 10, 100}, {-3, -0.03, -3e-4}) == ErrorKind::InvalidArgument);
    CHECK(kind({1, 2, 4, 8}, {2, 1, 0.5, 0.25}) == ErrorKind::InvalidArgument);
    CHECK(kind({1, 10, 100, 1000}, {1, -1, 1, 1}) == ErrorKind::MixedSign);
    CHECK(kind({1, 10, 100, 1000}, {1, 0, 1, 1}) == ErrorKind::MixedSign);
    CHECK(kind({1, 10, 100, 1000}, {1, 1, 1}) == ErrorKind::InvalidArgument);
    CHECK(kind({-1, 10, 100, 1000}, {1, 1, 1, 1}) == ErrorKind::InvalidArgument);
  }
}

TEST_CASE("geometric_grid") {
  const auto g = geometric_grid(10.0, 1000.0, 17);
  CHECK(g.size() == 17);
  CHECK(g.front() == 10.0);
  CHECK(g.back() == 1000.0);
  CHECK(g[8] == doctest::Approx(100.0));
  CHECK(default_lambda_grid() == g);
  CHECK_THROWS_AS(geometric_grid(10.0, 1.0, 5), Error);
  CHECK_THROWS_AS(geometric_grid(0.0, 1.0, 5), Error);
}
