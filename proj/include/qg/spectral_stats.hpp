#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "qg/eig.hpp"
#include "qg/quaternion.hpp"
#include "qg/random.hpp"

namespace qg {

// Weighted point cloud in C or H; weights sum to 1.
struct EmpiricalMeasure {
  enum class Domain { Complex, Quaternion };

  Domain domain = Domain::Complex;
  std::vector<std::complex<double>> cpoints;
  std::vector<Quaternion> qpoints;
  std::vector<double> weights;

  std::size_t size() const {
    return domain == Domain::Complex ? cpoints.size() : qpoints.size();
  }

  static EmpiricalMeasure uniform_complex(std::vector<std::complex<double>> pts);
  static EmpiricalMeasure weighted_quaternion(std::vector<Quaternion> pts,
                                              std::vector<double> w);
};

// Empirical spectral distribution: uniform weights 1/(2n) on all 2n
// eigenvalues of the paired spectrum.
EmpiricalMeasure esd(const SpectrumSample& spec);

// Push atoms through z -> Re(z) + i |Im(z)|, masses preserved.
EmpiricalMeasure pushforward_half_plane(const EmpiricalMeasure& m);

// One uniformly drawn element per similarity class: c_i = u_i z_i u_i* for
// independent uniform unit quaternions u_i over the upper representatives.
struct ClassSample {
  std::vector<std::complex<double>> reps;
  std::vector<Quaternion> units;
  std::vector<Quaternion> classes;
  std::vector<double> radii;  // |Im(z_i)|
};

ClassSample sample_classes(const SpectrumSample& spec, RandomStream& rng);

// Measure weighting each class by its sphere area 4 pi r_i^2, normalized;
// zero-radius atoms (r < 1e-12) are dropped with a note on stderr.
EmpiricalMeasure class_weighted_measure(const ClassSample& cs);

// Limit density of uniformly drawn right-spectrum classes:
// 1/(2 pi^2 |Im q|^2) on the unit ball of H.
double rho_density(const Quaternion& q);

// Limit marginals: real part semicircular on [-1,1], modulus CDF r^2.
struct LimitMarginals {
  std::function<double(double)> real_cdf;
  std::function<double(double)> radial_cdf;
};
LimitMarginals limit_marginals();

// One-sample Kolmogorov-Smirnov statistics against a reference CDF.
double ks_statistic(std::vector<double> sample,
                    const std::function<double(double)>& cdf);
double ks_statistic_weighted(std::vector<double> sample,
                             std::vector<double> weights,
                             const std::function<double(double)>& cdf);

// Centered product statistic (1/n) sum (g(x_i)-mean g)(h(y_i)-mean h);
// vanishing for independent samples at the O(n^{-1/2}) scale.
double product_independence_stat(const std::vector<double>& xs,
                                 const std::vector<double>& ys,
                                 const std::function<double(double)>& g,
                                 const std::function<double(double)>& h);

}  // namespace qg
