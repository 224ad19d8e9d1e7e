#include "qg/loggas.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <utility>

namespace qg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_inv_dist(Complex x, Complex y) {
  const double d2 = std::norm(x - y);
  return d2 == 0.0 ? kInf : -0.5 * std::log(d2);
}

}  // namespace

Potential Potential::canonical() {
  Potential p;
  p.kind_ = Kind::Canonical;
  p.delta_ = 1.0;
  p.name_ = "canonical";
  return p;
}

Potential Potential::quadratic(double a, double b, double c, double delta) {
  Potential p;
  p.kind_ = Kind::Quadratic;
  p.a_ = a;
  p.b_ = b;
  p.c_ = c;
  p.delta_ = delta;
  char buf[96];
  std::snprintf(buf, sizeof buf, "quadratic(%g,%g,%g)", a, b, c);
  p.name_ = buf;
  return p;
}

Potential Potential::custom(std::function<double(Complex)> f, double delta,
                            std::string name) {
  Potential p;
  p.kind_ = Kind::Custom;
  p.f_ = std::move(f);
  p.delta_ = delta;
  p.name_ = std::move(name);
  return p;
}

double Potential::operator()(Complex z) const {
  switch (kind_) {
    case Kind::Canonical:
      return std::norm(z);
    case Kind::Quadratic: {
      const double x = z.real(), y = z.imag();
      return x * x * (a_ + c_) + y * y * (-a_ + c_) + x * y * (-2.0 * b_ + c_);
    }
    case Kind::Custom:
      return f_(z);
  }
  return 0.0;
}

AdmissibilityReport check_admissibility(const Potential& v) {
  AdmissibilityReport rep;
  const int n_radii = 100;
  const int n_angles = 16;

  rep.nonnegative = true;
  rep.conjugate_invariant = true;
  // Nonnegativity and conjugate-invariance probe on an angular fan inside
  // the unit disk.
  for (int i = 1; i <= 20; ++i) {
    const double r = i / 20.0;
    for (int a = 0; a < n_angles; ++a) {
      const double th = 2.0 * M_PI * a / n_angles;
      const Complex z = std::polar(r, th);
      if (v(z) < 0.0) rep.nonnegative = false;
      if (std::abs(v(z) - v(std::conj(z))) > 1e-12 * (1.0 + std::abs(v(z))))
        rep.conjugate_invariant = false;
    }
  }

  // Growth bound on log-spaced radii 10^0..10^6: find the first radius from
  // which V >= (delta+1) log(|z|^2+1) holds out to the end of the grid.
  const double bound_factor = v.delta() + 1.0;
  int first_ok = -1;
  for (int i = 0; i < n_radii; ++i) {
    const double r = std::pow(10.0, 6.0 * i / (n_radii - 1));
    const double bound = bound_factor * std::log(r * r + 1.0);
    bool ok = true;
    for (int a = 0; a < n_angles; ++a) {
      const double th = 2.0 * M_PI * a / n_angles;
      if (v(std::polar(r, th)) < bound) {
        ok = false;
        break;
      }
    }
    if (ok && first_ok < 0) first_ok = i;
    if (!ok) first_ok = -1;
  }
  if (first_ok >= 0) {
    rep.grows = true;
    rep.r0 = std::pow(10.0, 6.0 * first_ok / (n_radii - 1));
  }
  return rep;
}

double kernel_k(Complex x, Complex y, const Potential& v) {
  return log_inv_dist(x, y) + 0.5 * (v(x) + v(y));
}

double kernel_k_trunc(Complex x, Complex y, const Potential& v, double l) {
  if (l < 0.0) throw std::invalid_argument("kernel_k_trunc: l >= 0 required");
  return std::min(kernel_k(x, y, v), l);
}

GasState GasState::create(std::vector<Complex> pts, const Potential& v) {
  GasState s;
  s.n = static_cast<int>(pts.size());
  for (const Complex& p : pts)
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag()))
      throw std::invalid_argument("GasState: non-finite point");
  s.points = std::move(pts);
  s.refresh(v);
  return s;
}

void GasState::refresh(const Potential& v) {
  sum_pair_log = 0.0;
  sum_self_log = 0.0;
  sum_v = 0.0;
  const int m = static_cast<int>(points.size());
  for (int i = 0; i < m; ++i) {
    sum_self_log += log_inv_dist(points[i], std::conj(points[i]));
    sum_v += v(points[i]);
    for (int j = i + 1; j < m; ++j) {
      sum_pair_log += log_inv_dist(points[i], points[j]) +
                      log_inv_dist(points[i], std::conj(points[j]));
    }
  }
}

namespace {

// The full 2n-point list: stored points then their conjugates, matching the
// convention z_{n+i} = conj(z_i).
std::vector<Complex> full_configuration(const GasState& s) {
  std::vector<Complex> z;
  z.reserve(2 * s.points.size());
  for (const Complex& p : s.points) z.push_back(p);
  for (const Complex& p : s.points) z.push_back(std::conj(p));
  return z;
}

}  // namespace

double energy_Kn(const GasState& state, const Potential& v) {
  const std::vector<Complex> z = full_configuration(state);
  const int m = static_cast<int>(z.size());
  double k = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) k += 2.0 * kernel_k(z[i], z[j], v);
  return k;
}

double energy_Kn_trunc(const GasState& state, const Potential& v, double l) {
  const std::vector<Complex> z = full_configuration(state);
  const int m = static_cast<int>(z.size());
  double k = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) k += 2.0 * kernel_k_trunc(z[i], z[j], v, l);
  return k;
}

double log_density_unnorm(const GasState& state, const Potential& v) {
  for (const Complex& p : state.points)
    if (p.imag() <= 0.0) return -kInf;
  const std::vector<Complex> z = full_configuration(state);
  const int m = static_cast<int>(z.size());
  double pair_log = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const double t = log_inv_dist(z[i], z[j]);
      if (t == kInf) return -kInf;
      pair_log += t;
    }
  double sum_v = 0.0, self_log = 0.0;
  for (int i = 0; i < m; ++i) {
    sum_v += v(z[i]);
    self_log += log_inv_dist(z[i], std::conj(z[i]));
  }
  // K_n + sum V + sum log 1/|z - conj z| with K_n expanded.
  const double kn = 2.0 * pair_log + (m - 1) * sum_v;
  return -0.5 * (kn + sum_v + self_log);
}

namespace {

struct MoveDelta {
  double pair;
  double self;
  double v_term;
};

MoveDelta move_delta(const GasState& s, int m, Complex p_new,
                     const Potential& v) {
  const Complex p_old = s.points[m];
  MoveDelta d{0.0, 0.0, 0.0};
  const int n = static_cast<int>(s.points.size());
  for (int l = 0; l < n; ++l) {
    if (l == m) continue;
    const Complex q = s.points[l];
    d.pair += log_inv_dist(p_new, q) + log_inv_dist(p_new, std::conj(q));
    d.pair -= log_inv_dist(p_old, q) + log_inv_dist(p_old, std::conj(q));
  }
  d.self = log_inv_dist(p_new, std::conj(p_new)) -
           log_inv_dist(p_old, std::conj(p_old));
  d.v_term = v(p_new) - v(p_old);
  return d;
}

}  // namespace

double log_density_delta(const GasState& state, int m, Complex p_new,
                         const Potential& v) {
  if (p_new.imag() <= 0.0) return -kInf;
  const MoveDelta d = move_delta(state, m, p_new, v);
  return -2.0 * (d.pair + d.self + state.n * d.v_term);
}

McmcRun mcmc_run(GasState s, const Potential& v, long steps,
                 double proposal_scale, RandomStream& rng, long record_every,
                 const McmcTrace& trace) {
  if (steps < 1) throw std::invalid_argument("mcmc_run: steps >= 1");
  const int n = s.n;
  const double four_n2 = 4.0 * double(n) * double(n);

  McmcRun run;
  run.steps = steps;
  if (record_every > 0) run.states.reserve(steps / record_every + 1);

  double energy_acc = 0.0;
  for (long step = 0; step < steps; ++step) {
    const int m = static_cast<int>(rng.uniform_index(n));
    const Complex prop = s.points[m] + proposal_scale * Complex(rng.gaussian(),
                                                                rng.gaussian());
    bool accepted = false;
    if (prop.imag() > 0.0) {
      const MoveDelta d = move_delta(s, m, prop, v);
      const double delta = -2.0 * (d.pair + d.self + n * d.v_term);
      const double u = rng.uniform01();
      if (delta >= 0.0 || std::log(u) < delta) {
        accepted = true;
        s.points[m] = prop;
        s.sum_pair_log += d.pair;
        s.sum_self_log += d.self;
        s.sum_v += d.v_term;
      }
    }
    if (accepted) ++run.accepted;
    if (trace) trace(McmcStep{step, m, prop, accepted});

    // K_n from the cached sums (see GasState docs for the bookkeeping).
    const double kn = 4.0 * s.sum_pair_log + 2.0 * s.sum_self_log +
                      2.0 * (2 * n - 1) * s.sum_v;
    energy_acc += kn / four_n2;

    if ((step + 1) % 10000 == 0) {
      GasState fresh = s;
      fresh.refresh(v);
      const double drift =
          std::abs(fresh.sum_pair_log - s.sum_pair_log) +
          std::abs(fresh.sum_self_log - s.sum_self_log) +
          std::abs(fresh.sum_v - s.sum_v);
      if (!(drift <= 1e-6))
        throw std::runtime_error("mcmc_run: cached energy drifted beyond 1e-6");
      s = fresh;
    }
    if (record_every > 0 && (step + 1) % record_every == 0)
      run.states.push_back(s);
  }
  run.acceptance_rate = double(run.accepted) / double(steps);
  run.mean_energy = energy_acc / double(steps);
  run.final_state = std::move(s);
  return run;
}

McmcRun mcmc_run(int n, const Potential& v, long steps, double proposal_scale,
                 RandomStream& rng, long record_every, const McmcTrace& trace) {
  if (n < 1) throw std::invalid_argument("mcmc_run: n >= 1");
  std::vector<Complex> pts;
  pts.reserve(n);
  while (static_cast<int>(pts.size()) < n) {
    const double r = std::sqrt(rng.uniform01());
    const double th = rng.uniform(0.0, M_PI);
    const Complex z = std::polar(r, th);
    if (z.imag() > 0.0) pts.push_back(z);
  }
  return mcmc_run(GasState::create(std::move(pts), v), v, steps,
                  proposal_scale, rng, record_every, trace);
}

namespace {

// Nudge coincident points (and points sitting on the real axis, which
// coincide with their own conjugate) by 1e-12. Roundoff collisions should
// not kill a run; the ensemble almost surely has distinct points.
std::vector<Complex> perturb_coincident(std::vector<Complex> pts) {
  int bumped = 0;
  for (Complex& p : pts) {
    if (std::abs(p.imag()) < 1e-14) {
      p = Complex(p.real(), 1e-12);
      ++bumped;
    }
  }
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(pts[i] - pts[j]) < 1e-14 ||
          std::abs(pts[i] - std::conj(pts[j])) < 1e-14) {
        pts[j] += Complex(1e-12, 1e-12);
        ++bumped;
      }
    }
  }
  if (bumped > 0)
    std::fprintf(stderr, "loggas: perturbed %d coincident point(s) by 1e-12\n",
                 bumped);
  return pts;
}

}  // namespace

double empirical_energy(const GasState& state, const Potential& v) {
  const double four_n2 = 4.0 * double(state.n) * double(state.n);
  return energy_Kn(state, v) / four_n2;
}

double empirical_energy(const SpectrumSample& spec, const Potential& v) {
  GasState s = GasState::create(perturb_coincident(spec.upper), v);
  return empirical_energy(s, v);
}

}  // namespace qg
