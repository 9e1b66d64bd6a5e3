#include "aforge/samples.hpp"

#include <cmath>
#include <string>

#include "aforge/error.hpp"

namespace aforge {

const char* to_string(TraceSource s) noexcept {
  switch (s) {
    case TraceSource::FirstOrder: return "first-order";
    case TraceSource::SecondOrder: return "second-order";
    case TraceSource::PerturbativeSum: return "first+second-order";
    case TraceSource::Oracle: return "oracle";
  }
  return "?";
}

void TraceSamples::validate() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (!(e.lambda > 0.0) || !std::isfinite(e.lambda))
      raise(ErrorKind::InvalidArgument, "Lambda values must be positive");
    if (i > 0 && !(e.lambda > entries[i - 1].lambda))
      raise(ErrorKind::InvalidArgument, "Lambda values must be strictly increasing");
    if (!(e.error >= 0.0)) raise(ErrorKind::InvalidArgument, "errors must be non-negative");
  }
}

std::vector<double> TraceSamples::lambdas() const {
  std::vector<double> out;
  for (const auto& e : entries) out.push_back(e.lambda);
  return out;
}

std::vector<double> TraceSamples::values() const {
  std::vector<double> out;
  for (const auto& e : entries) out.push_back(e.w);
  return out;
}

PowerLawFit fit_power_law(std::span<const double> lambda, std::span<const double> w) {
  const std::size_t n = lambda.size();
  if (w.size() != n) raise(ErrorKind::InvalidArgument, "lambda and w differ in length");
  if (n < 4)
    raise(ErrorKind::InvalidArgument, "power-law fit needs at least 4 samples, got " + std::to_string(n));

  double lo = lambda[0], hi = lambda[0];
  for (double l : lambda) {
    if (!(l > 0.0)) raise(ErrorKind::InvalidArgument, "Lambda values must be positive");
    lo = std::min(lo, l);
    hi = std::max(hi, l);
  }
  if (hi < 10.0 * lo * (1.0 - 1e-12))
    raise(ErrorKind::InvalidArgument, "Lambda values must span at least one decade");

  const double sign = w[0] > 0.0 ? 1.0 : -1.0;
  for (double v : w)
    if (!(v * sign > 0.0)) raise(ErrorKind::MixedSign, "W changes sign (or vanishes) across samples");

  double mx = 0.0, my = 0.0;
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = std::log(lambda[i]);
    y[i] = std::log(std::abs(w[i]));
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  const double icpt = my - slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (icpt + slope * x[i]);
    ssr += r * r;
  }

  PowerLawFit fit;
  fit.amplitude = sign * std::exp(icpt);
  fit.gamma = -slope;
  fit.gamma_err = std::sqrt(ssr / (n - 2) / sxx);
  fit.residual = std::sqrt(ssr / n);
  fit.lambda_min = lo;
  fit.lambda_max = hi;
  fit.samples = n;
  return fit;
}

PowerLawFit fit_power_law(const TraceSamples& samples) {
  samples.validate();
  const auto l = samples.lambdas();
  const auto v = samples.values();
  return fit_power_law(l, v);
}

std::vector<double> geometric_grid(double lo, double hi, std::size_t points) {
  if (!(lo > 0.0) || !(hi > lo)) raise(ErrorKind::InvalidArgument, "grid needs 0 < min < max");
  if (points < 2) raise(ErrorKind::InvalidArgument, "grid needs at least 2 points");
  std::vector<double> g(points);
  const double step = std::log(hi / lo) / (points - 1);
  for (std::size_t i = 0; i < points; ++i) g[i] = lo * std::exp(step * i);
  g.back() = hi;
  return g;
}

std::vector<double> default_lambda_grid() {
  // 8 per decade over two decades
  return geometric_grid(10.0, 1000.0, 17);
}

}  // namespace aforge
