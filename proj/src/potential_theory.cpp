#include "qg/potential_theory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>

namespace qg {

namespace {

// 15-point Gauss-Legendre rule on [-1,1]; nodes solved at startup by Newton
// iteration on the Legendre recurrence so no tabulated constants are needed.
struct GaussLegendre {
  std::array<double, 15> x{};
  std::array<double, 15> w{};

  GaussLegendre() {
    const int n = 15;
    for (int i = 0; i < n; ++i) {
      double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 64; ++iter) {
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n; ++k) {
          const double pk = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = pk;
        }
        dp = n * (t * p1 - p0) / (t * t - 1.0);
        const double dt = p1 / dp;
        t -= dt;
        if (std::abs(dt) < 1e-15) {
          p0 = 1.0;
          p1 = t;
          for (int k = 2; k <= n; ++k) {
            const double pk = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = pk;
          }
          dp = n * (t * p1 - p0) / (t * t - 1.0);
          break;
        }
      }
      x[i] = t;
      w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
  }
};

const GaussLegendre& gl15() {
  static const GaussLegendre rule;
  return rule;
}

double gl_panel(const std::function<double(double)>& f, double a, double b) {
  const GaussLegendre& g = gl15();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < 15; ++i) s += g.w[i] * f(mid + half * g.x[i]);
  return half * s;
}

struct Panel {
  double a, b;
  double fine;  // two-half Gauss value
  double err;   // |whole - fine|
  bool operator<(const Panel& o) const { return err < o.err; }
};

Panel make_panel(const std::function<double(double)>& f, double a, double b) {
  const double whole = gl_panel(f, a, b);
  const double m = 0.5 * (a + b);
  const double fine = gl_panel(f, a, m) + gl_panel(f, m, b);
  return Panel{a, b, fine, std::abs(whole - fine)};
}

}  // namespace

double adaptive_integrate(const std::function<double(double)>& f, double a,
                          double b, double tol, int max_panels) {
  if (!(b > a)) return 0.0;
  std::priority_queue<Panel> heap;
  Panel root = make_panel(f, a, b);
  double total = root.fine;
  double total_err = root.err;
  heap.push(root);
  int used = 1;
  while (total_err > tol) {
    if (used >= max_panels || heap.empty())
      throw QuadratureError("adaptive_integrate: refinement did not converge");
    const Panel worst = heap.top();
    heap.pop();
    const double m = 0.5 * (worst.a + worst.b);
    const Panel left = make_panel(f, worst.a, m);
    const Panel right = make_panel(f, m, worst.b);
    total += left.fine + right.fine - worst.fine;
    total_err += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
    used += 2;
  }
  return total;
}

CircleMeasureDensity CircleMeasureDensity::haar() {
  return {[](double) { return 1.0; }, "haar"};
}

CircleMeasureDensity CircleMeasureDensity::sin2() {
  return {[](double th) {
            const double s = std::sin(th);
            return 2.0 * s * s;
          },
          "sin2"};
}

double CircleMeasureDensity::total_mass(double tol) const {
  const auto& w = weight;
  return adaptive_integrate([&](double th) { return w(th) / (2.0 * M_PI); },
                            -M_PI, M_PI, tol);
}

double circle_log_integral(Complex x, double r) {
  if (r <= 0.0) throw std::invalid_argument("circle_log_integral: r > 0");
  const double ax = std::abs(x);
  return 2.0 * M_PI * (ax <= r ? std::log(r) : std::log(ax));
}

double potential_uniform_disk(Complex x) {
  const double a2 = std::norm(x);
  return a2 <= 1.0 ? 0.5 * (1.0 - a2) : -0.5 * std::log(a2);
}

double sin2_log_integral(double r) {
  if (r < 0.0) throw std::invalid_argument("sin2_log_integral: r >= 0");
  if (r <= 1.0) return 0.25 * r * r;
  return 0.25 / (r * r) + std::log(r);
}

PoissonIntegrals poisson_integrals(double r) {
  if (r < 0.0) throw std::invalid_argument("poisson_integrals: r >= 0");
  if (r == 1.0)
    throw std::domain_error("poisson_integrals: divergent at r = 1");
  if (r < 1.0) {
    const double d = 1.0 - r * r;
    return {2.0 * M_PI / d, M_PI * (r * r + 1.0) / d};
  }
  const double d = r * r - 1.0;
  return {2.0 * M_PI / d, M_PI * (1.0 / (r * r) + 1.0) / d};
}

double potential_nu(Complex x) {
  const double re = x.real(), im = x.imag();
  const double quad = re * re - im * im;
  const double a2 = std::norm(x);
  if (a2 <= 1.0) return -0.25 * quad;
  return -quad / (4.0 * a2 * a2) - 0.5 * std::log(a2);
}

double quad_potential(const CircleMeasureDensity& dens, Complex x,
                      double tol) {
  const double split = (x == Complex(0.0)) ? 0.0 : std::arg(x);
  const auto& w = dens.weight;
  const auto integrand = [&](double th) {
    const double d = std::abs(x - std::polar(1.0, th));
    return -std::log(d) * w(th) / (2.0 * M_PI);
  };
  // Integrate over [split, split + 2 pi] so the near-singular angle sits at
  // panel endpoints, where the open Gauss nodes never land.
  const auto shifted = [&](double th) { return integrand(th); };
  return adaptive_integrate(shifted, split - M_PI, split, 0.5 * tol) +
         adaptive_integrate(shifted, split, split + M_PI, 0.5 * tol);
}

double quad_potential_disk(Complex x, double tol) {
  const double ax = std::abs(x);
  static const CircleMeasureDensity haar = CircleMeasureDensity::haar();
  const double inner_tol = 0.05 * tol;
  // U(x) = int_0^1 2r [circle potential of radius r at x] dr, with the
  // radius-r circle potential computed by quadrature after rescaling.
  const auto radial = [&](double r) -> double {
    if (r <= 0.0) return 0.0;
    const double u_circle = quad_potential(haar, x / r, inner_tol) - std::log(r);
    return 2.0 * r * u_circle;
  };
  const double budget = 0.45 * tol;
  if (ax > 0.0 && ax < 1.0)
    return adaptive_integrate(radial, 0.0, ax, budget) +
           adaptive_integrate(radial, ax, 1.0, budget);
  return adaptive_integrate(radial, 0.0, 1.0, 2.0 * budget);
}

DiscreteMeasure DiscreteMeasure::uniform(std::vector<Complex> pts) {
  if (pts.empty()) throw std::invalid_argument("DiscreteMeasure: empty");
  const double w = 1.0 / static_cast<double>(pts.size());
  DiscreteMeasure m;
  m.weights.assign(pts.size(), w);
  m.points = std::move(pts);
  return m;
}

DiscreteMeasure DiscreteMeasure::weighted(std::vector<Complex> pts,
                                          std::vector<double> w) {
  if (pts.size() != w.size() || pts.empty())
    throw std::invalid_argument("DiscreteMeasure: bad sizes");
  double s = 0.0;
  for (double wi : w) {
    if (wi < 0.0) throw std::invalid_argument("DiscreteMeasure: negative weight");
    s += wi;
  }
  if (std::abs(s - 1.0) > 1e-12)
    throw std::invalid_argument("DiscreteMeasure: weights must sum to 1");
  return {std::move(pts), std::move(w)};
}

double weighted_energy(const DiscreteMeasure& mu, const Potential& v) {
  const int n = static_cast<int>(mu.points.size());
  double e = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = std::abs(mu.points[i] - mu.points[j]);
      if (d == 0.0)
        throw std::domain_error("weighted_energy: coincident points");
      e += -2.0 * mu.weights[i] * mu.weights[j] * std::log(d);
    }
    e += mu.weights[i] * v(mu.points[i]);
  }
  return e;
}

EquilibriumCheck equilibrium_check(const std::function<double(Complex)>& u,
                                   const Potential& v,
                                   const std::function<bool(Complex)>& support,
                                   const std::vector<Complex>& grid) {
  if (grid.empty()) throw std::invalid_argument("equilibrium_check: empty grid");
  double sum = 0.0;
  int count = 0;
  for (const Complex& z : grid) {
    if (!support(z)) continue;
    sum += 2.0 * u(z) + v(z);
    ++count;
  }
  if (count == 0)
    throw std::invalid_argument("equilibrium_check: grid misses the support");
  EquilibriumCheck out{sum / count, 0.0, 0.0};
  double off_min = std::numeric_limits<double>::infinity();
  bool has_off = false;
  for (const Complex& z : grid) {
    const double t = 2.0 * u(z) + v(z);
    if (support(z)) {
      out.on_support_dev = std::max(out.on_support_dev, std::abs(t - out.l_hat));
    } else {
      has_off = true;
      off_min = std::min(off_min, t);
    }
  }
  if (has_off) out.off_support_violation = std::max(0.0, out.l_hat - off_min);
  return out;
}

QuadraticFit refute_quadratic_for_nu(int circle_points) {
  if (circle_points < 8)
    throw std::invalid_argument(
        "refute_quadratic_for_nu: at least 8 circle points");
  const int m = circle_points;

  // On |z|=1 the quadratic family reads
  //   V(theta) = a cos(2 theta) + ((c-2b)/2) sin(2 theta) + c,
  // so 2 U^nu + V - l = (a - 1/2) cos + ((c-2b)/2) sin + (c - l).
  // Least squares over [cos, sin, 1] against -2 U^nu determines a,
  // (c-2b)/2 and c-l; the direction moving b and c together is unseen.
  double g[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  double rhs[3] = {0, 0, 0};
  for (int i = 0; i < m; ++i) {
    const double th = -M_PI + 2.0 * M_PI * i / m;
    const double basis[3] = {std::cos(2.0 * th), std::sin(2.0 * th), 1.0};
    const double d = -2.0 * potential_nu(std::polar(1.0, th));
    for (int r = 0; r < 3; ++r) {
      rhs[r] += basis[r] * d;
      for (int c = 0; c < 3; ++c) g[r][c] += basis[r] * basis[c];
    }
  }
  const double det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                     g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                     g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
  if (std::abs(det) < 1e-9 * m)
    throw std::runtime_error("refute_quadratic_for_nu: degenerate fit");

  const auto solve3 = [&](int col) {
    double a[3][3];
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) a[r][c] = (c == col) ? rhs[r] : g[r][c];
    return (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
            a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
            a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])) /
           det;
  };
  const double fit_a = solve3(0);
  const double half_c_minus_2b = solve3(1);

  QuadraticFit out;
  out.a = fit_a;
  out.b_free = true;
  out.c_minus_2b = 2.0 * half_c_minus_2b;
  // Canonical admissible representative along the free direction.
  out.chosen_c = 1.0;
  out.chosen_b = 0.5 * (out.chosen_c - out.c_minus_2b);
  const Potential v =
      Potential::quadratic(out.a, out.chosen_b, out.chosen_c);

  double sum = 0.0;
  std::vector<double> vals(m);
  for (int i = 0; i < m; ++i) {
    const double th = -M_PI + 2.0 * M_PI * i / m;
    const Complex z = std::polar(1.0, th);
    vals[i] = 2.0 * potential_nu(z) + v(z);
    sum += vals[i];
  }
  out.l_hat = sum / m;
  out.circle_residual = 0.0;
  for (double t : vals)
    out.circle_residual = std::max(out.circle_residual, std::abs(t - out.l_hat));
  out.violation = out.l_hat - (2.0 * potential_nu(0.0) + v(0.0));
  return out;
}

}  // namespace qg
