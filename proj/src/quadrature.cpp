#include "aforge/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>
#include <vector>

#include "aforge/error.hpp"

namespace aforge {
namespace {

// Gauss-Kronrod 21 (QUADPACK qk21): Kronrod abscissae on [0,1], the odd
// indices are the 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk21 = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk21 = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525453126, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg10 = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

// Gauss-Kronrod 15 (qk15); odd indices are the 7-point Gauss nodes, the
// centre is a Gauss node as well.
constexpr std::array<double, 8> kXgk15 = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk15 = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322915386, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg7 = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk21(const Integrand1D& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resk = fc * kWgk21[10];
  double resg = 0.0;
  for (int j = 0; j < 10; ++j) {
    const double dx = h * kXgk21[j];
    const double s = f(c - dx) + f(c + dx);
    resk += kWgk21[j] * s;
    if (j % 2 == 1) resg += kWg10[j / 2] * s;
  }
  const double value = resk * h;
  const double err = std::abs((resk - resg) * h);
  return {a, b, value, err};
}

// Returns a wrapped integrand for semi-infinite ranges plus the finite range.
struct Mapped {
  Integrand1D g;
  double a, b;
};

Mapped map_range(const Integrand1D& f, double a, double b) {
  if (std::isinf(b)) {
    if (b < 0 || std::isinf(a)) raise(ErrorKind::Domain, "only [a, +inf) ranges are supported");
    auto g = [&f, a](double t) {
      const double u = 1.0 - t;
      const double x = a + t / u;
      const double v = f(x);
      return v == 0.0 ? 0.0 : v / (u * u);
    };
    return {g, 0.0, 1.0};
  }
  return {f, a, b};
}

void check_budget(const QuadratureBudget& b) {
  if (!(b.abs_tol > 0.0) || !(b.rel_tol > 0.0))
    raise(ErrorKind::Domain, "quadrature tolerances must be positive");
  if (b.max_evals < 1000) raise(ErrorKind::Domain, "quadrature max_evals must be >= 1000");
}

}  // namespace

QuadratureBudget QuadratureBudget::make(double abs_tol, double rel_tol, std::size_t max_evals) {
  QuadratureBudget b{abs_tol, rel_tol, max_evals};
  check_budget(b);
  return b;
}

Estimate& Estimate::operator+=(const Estimate& other) {
  value += other.value;
  error += other.error;
  evals += other.evals;
  converged = converged && other.converged;
  return *this;
}

const Estimate& require_converged(const Estimate& e, const char* what) {
  if (!e.converged) {
    char buf[96];
    std::snprintf(buf, sizeof buf, ": value %.6e +- %.2e after %zu evaluations", e.value, e.error, e.evals);
    raise(ErrorKind::Unconverged, what + std::string(buf));
  }
  return e;
}

Estimate integrate_adaptive(const Integrand1D& f, double a, double b,
                            const QuadratureBudget& budget) {
  check_budget(budget);
  if (a == b) return {};
  if (b < a) {
    Estimate e = integrate_adaptive(f, b, a, budget);
    e.value = -e.value;
    return e;
  }
  const Mapped m = map_range(f, a, b);

  std::priority_queue<Segment> heap;
  Segment first = gk21(m.g, m.a, m.b);
  std::size_t evals = 21;
  double total = first.value;
  double err = first.error;
  heap.push(first);

  auto done = [&] { return err <= std::max(budget.abs_tol, budget.rel_tol * std::abs(total)); };
  while (!done() && evals + 42 <= budget.max_evals) {
    const Segment s = heap.top();
    const double mid = 0.5 * (s.a + s.b);
    if (!(mid > s.a && mid < s.b)) break;  // interval at machine resolution
    heap.pop();
    const Segment l = gk21(m.g, s.a, mid);
    const Segment r = gk21(m.g, mid, s.b);
    evals += 42;
    total += l.value + r.value - s.value;
    err += l.error + r.error - s.error;
    heap.push(l);
    heap.push(r);
  }

  // Re-sum from scratch to shed the rounding of the running updates.
  double v = 0.0, e = 0.0;
  while (!heap.empty()) {
    v += heap.top().value;
    e += heap.top().error;
    heap.pop();
  }
  Estimate out;
  out.value = v;
  out.error = e;
  out.evals = evals;
  out.converged = e <= std::max(budget.abs_tol, budget.rel_tol * std::abs(v));
  return out;
}

namespace {

struct Cell {
  double x0, x1, y0, y1;
  double value, error;
  int split_axis;  // 0 = x, 1 = y
  bool operator<(const Cell& o) const { return error < o.error; }
};

struct Rule2D {
  std::array<double, 15> node{};   // offsets in [-1, 1]
  std::array<double, 15> wk{};     // Kronrod weights
  std::array<double, 15> wg{};     // Gauss weights (0 off the Gauss nodes)
  Rule2D() {
    for (int j = 0; j < 7; ++j) {
      node[j] = -kXgk15[j];
      node[14 - j] = kXgk15[j];
      wk[j] = wk[14 - j] = kWgk15[j];
      if (j % 2 == 1) wg[j] = wg[14 - j] = kWg7[j / 2];
    }
    node[7] = 0.0;
    wk[7] = kWgk15[7];
    wg[7] = kWg7[3];
  }
};

const Rule2D& rule2d() {
  static const Rule2D r;
  return r;
}

struct Axis {
  double lo, hi;
  bool infinite;
  // Physical coordinate and Jacobian for a compactified coordinate t.
  void map(double t, double& x, double& jac) const {
    if (!infinite) {
      x = t;
      jac = 1.0;
      return;
    }
    const double u = 1.0 - t;
    x = lo + t / u;
    jac = 1.0 / (u * u);
  }
};

class Cubature {
 public:
  Cubature(const Integrand2D& f, Axis ax, Axis ay) : f_(f), ax_(ax), ay_(ay) {}

  Cell apply(double x0, double x1, double y0, double y1) {
    const Rule2D& r = rule2d();
    const double cx = 0.5 * (x0 + x1), hx = 0.5 * (x1 - x0);
    const double cy = 0.5 * (y0 + y1), hy = 0.5 * (y1 - y0);
    std::array<double, 15> jx{}, jy{}, px{}, py{};
    for (int i = 0; i < 15; ++i) {
      ax_.map(cx + hx * r.node[i], px[i], jx[i]);
      ay_.map(cy + hy * r.node[i], py[i], jy[i]);
    }
    for (int i = 0; i < 15; ++i)
      for (int j = 0; j < 15; ++j) {
        xs_[i * 15 + j] = px[i];
        ys_[i * 15 + j] = py[j];
      }
    f_(xs_, ys_, vals_);
    double kk = 0.0, gg = 0.0, gk = 0.0, kg = 0.0;
    for (int i = 0; i < 15; ++i) {
      double row_k = 0.0, row_g = 0.0;
      for (int j = 0; j < 15; ++j) {
        const double v = vals_[i * 15 + j];
        const double w = v == 0.0 ? 0.0 : v * jx[i] * jy[j];
        row_k += r.wk[j] * w;
        row_g += r.wg[j] * w;
      }
      kk += r.wk[i] * row_k;
      kg += r.wk[i] * row_g;
      gk += r.wg[i] * row_k;
      gg += r.wg[i] * row_g;
    }
    const double area = hx * hy;
    Cell c{x0, x1, y0, y1, kk * area, std::abs(kk - gg) * area, 0};
    // Split along the axis whose Gauss-vs-Kronrod disagreement dominates.
    c.split_axis = std::abs(kk - gk) >= std::abs(kk - kg) ? 0 : 1;
    evals_ += 225;
    return c;
  }

  std::size_t evals() const { return evals_; }

 private:
  const Integrand2D& f_;
  Axis ax_, ay_;
  std::array<double, 225> xs_{}, ys_{}, vals_{};
  std::size_t evals_ = 0;
};

}  // namespace

Estimate integrate_adaptive_2d(const Integrand2D& f, Rect d, const QuadratureBudget& budget) {
  check_budget(budget);
  if (!(d.x1 > d.x0) || !(d.y1 > d.y0)) raise(ErrorKind::Domain, "2D domain must be non-empty");
  const Axis ax{d.x0, d.x1, std::isinf(d.x1)};
  const Axis ay{d.y0, d.y1, std::isinf(d.y1)};
  Cubature cub(f, ax, ay);
  const double x0 = ax.infinite ? 0.0 : d.x0, x1 = ax.infinite ? 1.0 : d.x1;
  const double y0 = ay.infinite ? 0.0 : d.y0, y1 = ay.infinite ? 1.0 : d.y1;

  std::priority_queue<Cell> heap;
  Cell first = cub.apply(x0, x1, y0, y1);
  double total = first.value, err = first.error;
  heap.push(first);
  auto done = [&] { return err <= std::max(budget.abs_tol, budget.rel_tol * std::abs(total)); };
  while (!done() && cub.evals() + 450 <= budget.max_evals) {
    const Cell c = heap.top();
    heap.pop();
    Cell a, b;
    if (c.split_axis == 0) {
      const double m = 0.5 * (c.x0 + c.x1);
      a = cub.apply(c.x0, m, c.y0, c.y1);
      b = cub.apply(m, c.x1, c.y0, c.y1);
    } else {
      const double m = 0.5 * (c.y0 + c.y1);
      a = cub.apply(c.x0, c.x1, c.y0, m);
      b = cub.apply(c.x0, c.x1, m, c.y1);
    }
    total += a.value + b.value - c.value;
    err += a.error + b.error - c.error;
    heap.push(a);
    heap.push(b);
  }
  double v = 0.0, e = 0.0;
  while (!heap.empty()) {
    v += heap.top().value;
    e += heap.top().error;
    heap.pop();
  }
  Estimate out;
  out.value = v;
  out.error = e;
  out.evals = cub.evals();
  out.converged = e <= std::max(budget.abs_tol, budget.rel_tol * std::abs(v));
  return out;
}

double feynman_combine(double a, double b, const QuadratureBudget& budget) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    raise(ErrorKind::Domain, "feynman_combine requires a > 0 and b > 0");
  const auto integrand = [a, b](double x) {
    const double d = a * x + b * (1.0 - x);
    return 1.0 / (d * d);
  };
  return require_converged(integrate_adaptive(integrand, 0.0, 1.0, budget), "feynman_combine").value;
}

}  // namespace aforge
