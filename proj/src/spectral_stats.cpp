#include "qg/spectral_stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qg {

EmpiricalMeasure EmpiricalMeasure::uniform_complex(
    std::vector<std::complex<double>> pts) {
  if (pts.empty()) throw std::invalid_argument("EmpiricalMeasure: empty");
  EmpiricalMeasure m;
  m.domain = Domain::Complex;
  m.weights.assign(pts.size(), 1.0 / static_cast<double>(pts.size()));
  m.cpoints = std::move(pts);
  return m;
}

EmpiricalMeasure EmpiricalMeasure::weighted_quaternion(
    std::vector<Quaternion> pts, std::vector<double> w) {
  if (pts.size() != w.size() || pts.empty())
    throw std::invalid_argument("EmpiricalMeasure: bad sizes");
  double s = 0.0;
  for (double wi : w) {
    if (wi < 0.0) throw std::invalid_argument("EmpiricalMeasure: negative weight");
    s += wi;
  }
  if (std::abs(s - 1.0) > 1e-12)
    throw std::invalid_argument("EmpiricalMeasure: weights must sum to 1");
  EmpiricalMeasure m;
  m.domain = Domain::Quaternion;
  m.qpoints = std::move(pts);
  m.weights = std::move(w);
  return m;
}

EmpiricalMeasure esd(const SpectrumSample& spec) {
  return EmpiricalMeasure::uniform_complex(spec.all_eigs);
}

EmpiricalMeasure pushforward_half_plane(const EmpiricalMeasure& m) {
  if (m.domain != EmpiricalMeasure::Domain::Complex)
    throw std::invalid_argument("pushforward_half_plane: complex measure only");
  EmpiricalMeasure out = m;
  for (auto& z : out.cpoints) z = {z.real(), std::abs(z.imag())};
  return out;
}

ClassSample sample_classes(const SpectrumSample& spec, RandomStream& rng) {
  ClassSample cs;
  cs.reps = spec.upper;
  cs.units.reserve(cs.reps.size());
  cs.classes.reserve(cs.reps.size());
  cs.radii.reserve(cs.reps.size());
  for (const std::complex<double>& z : cs.reps) {
    const Quaternion u = sample_unit_sphere(rng);
    cs.units.push_back(u);
    cs.classes.push_back(conjugate_by(u, Quaternion(z)));
    cs.radii.push_back(std::abs(z.imag()));
  }
  return cs;
}

EmpiricalMeasure class_weighted_measure(const ClassSample& cs) {
  std::vector<Quaternion> pts;
  std::vector<double> w;
  double total = 0.0;
  int dropped = 0;
  for (std::size_t i = 0; i < cs.classes.size(); ++i) {
    if (cs.radii[i] < 1e-12) {
      ++dropped;
      continue;
    }
    pts.push_back(cs.classes[i]);
    w.push_back(cs.radii[i] * cs.radii[i]);  // 4 pi cancels on normalizing
    total += w.back();
  }
  if (dropped > 0)
    std::fprintf(stderr, "spectral_stats: dropped %d zero-radius class(es)\n",
                 dropped);
  if (total <= 0.0)
    throw std::domain_error("class_weighted_measure: all radii are zero");
  for (double& wi : w) wi /= total;
  return EmpiricalMeasure::weighted_quaternion(std::move(pts), std::move(w));
}

double rho_density(const Quaternion& q) {
  if (norm(q) > 1.0) return 0.0;
  const double r2 = q.x * q.x + q.y * q.y + q.z * q.z;
  if (r2 == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / (2.0 * M_PI * M_PI * r2);
}

LimitMarginals limit_marginals() {
  LimitMarginals m;
  m.real_cdf = [](double x) {
    if (x <= -1.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return 0.5 + (x * std::sqrt(1.0 - x * x) + std::asin(x)) / M_PI;
  };
  m.radial_cdf = [](double r) {
    if (r <= 0.0) return 0.0;
    if (r >= 1.0) return 1.0;
    return r * r;
  };
  return m;
}

double ks_statistic(std::vector<double> sample,
                    const std::function<double(double)>& cdf) {
  if (sample.empty()) throw std::invalid_argument("ks_statistic: empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max(d, std::max(f - static_cast<double>(i) / n,
                             static_cast<double>(i + 1) / n - f));
  }
  return d;
}

double ks_statistic_weighted(std::vector<double> sample,
                             std::vector<double> weights,
                             const std::function<double(double)>& cdf) {
  if (sample.empty() || sample.size() != weights.size())
    throw std::invalid_argument("ks_statistic_weighted: bad sizes");
  std::vector<std::size_t> order(sample.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return sample[a] < sample[b]; });
  double cum = 0.0;
  double d = 0.0;
  for (std::size_t idx : order) {
    const double f = cdf(sample[idx]);
    d = std::max(d, std::abs(f - cum));
    cum += weights[idx];
    d = std::max(d, std::abs(cum - f));
  }
  return d;
}

double product_independence_stat(const std::vector<double>& xs,
                                 const std::vector<double>& ys,
                                 const std::function<double(double)>& g,
                                 const std::function<double(double)>& h) {
  if (xs.size() != ys.size() || xs.empty())
    throw std::invalid_argument("product_independence_stat: bad sizes");
  const double n = static_cast<double>(xs.size());
  double gm = 0.0, hm = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    gm += g(xs[i]);
    hm += h(ys[i]);
  }
  gm /= n;
  hm /= n;
  double s = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    s += (g(xs[i]) - gm) * (h(ys[i]) - hm);
  return s / n;
}

}  // namespace qg
