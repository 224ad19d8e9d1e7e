#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "qg/eig.hpp"
#include "qg/random.hpp"

namespace qg {

// Confining potential V on C, conjugate invariant. The quadratic family is
// parameterized as V(x+iy) = x^2 (a+c) + y^2 (-a+c) + xy (-2b+c); the
// canonical choice is V(z) = |z|^2.
class Potential {
 public:
  enum class Kind { Canonical, Quadratic, Custom };

  static Potential canonical();
  static Potential quadratic(double a, double b, double c, double delta = 1.0);
  static Potential custom(std::function<double(Complex)> f, double delta,
                          std::string name = "custom");

  double operator()(Complex z) const;

  Kind kind() const { return kind_; }
  double quad_a() const { return a_; }
  double quad_b() const { return b_; }
  double quad_c() const { return c_; }
  double delta() const { return delta_; }
  const std::string& describe() const { return name_; }

 private:
  Potential() = default;
  Kind kind_ = Kind::Canonical;
  double a_ = 0.0, b_ = 0.0, c_ = 0.0;
  double delta_ = 1.0;
  std::function<double(Complex)> f_;
  std::string name_;
};

// Numerical admissibility scan: V conjugate invariant and >= 0 on a disk
// sample, and V(z) >= (delta+1) log(|z|^2+1) from some radius r0 on, probed
// over a log-spaced radius grid 10^0..10^6 (100 points, 16 angles). A grid
// check, not a proof.
struct AdmissibilityReport {
  bool nonnegative = false;
  bool conjugate_invariant = false;
  bool grows = false;      // growth bound holds from r0 to the grid end
  double r0 = 0.0;         // first grid radius where the bound takes over
  bool admissible() const {
    return nonnegative && conjugate_invariant && grows;
  }
};

AdmissibilityReport check_admissibility(const Potential& v);

// Pair kernel k(x,y) = log(1/|x-y|) + (V(x)+V(y))/2; +infinity at x == y.
double kernel_k(Complex x, Complex y, const Potential& v);

// Truncated kernel k^l = min(k, l).
double kernel_k_trunc(Complex x, Complex y, const Potential& v, double l);

// Configuration of a 2n-point log-gas stored as its n upper-half-plane
// points; the other n are the implicit conjugates. Cached sums are over
// the stored points:
//   sum_pair_log = sum_{m<l} [log(1/|p_m-p_l|) + log(1/|p_m-conj(p_l)|)]
//   sum_self_log = sum_m log(1/|p_m - conj(p_m)|)
//   sum_v        = sum_m V(p_m)
struct GasState {
  int n = 0;
  std::vector<Complex> points;
  double sum_pair_log = 0.0;
  double sum_self_log = 0.0;
  double sum_v = 0.0;

  static GasState create(std::vector<Complex> pts, const Potential& v);
  void refresh(const Potential& v);

  // log of the unnormalized density, from the cached sums:
  // -2 (sum_pair_log + sum_self_log + n sum_v).
  double cached_log_density() const {
    return -2.0 * (sum_pair_log + sum_self_log + n * sum_v);
  }
};

// Energy K_n: sum of k over ordered distinct pairs of the full 2n-point
// configuration (points and their conjugates). Recomputed from scratch;
// +infinity when points coincide.
double energy_Kn(const GasState& state, const Potential& v);

// Truncated energy K_n^l with the same pair convention.
double energy_Kn_trunc(const GasState& state, const Potential& v, double l);

// log of the unnormalized density
//   -1/2 (K_n + sum_{i<=2n} V(z_i) + sum_{i<=2n} log(1/|z_i - conj z_i|));
// -infinity when any point is real or two points coincide.
double log_density_unnorm(const GasState& state, const Potential& v);

// Change in log density from moving stored point m to p_new, computed in
// O(n); this is the quantity the Metropolis chain accepts on.
double log_density_delta(const GasState& state, int m, Complex p_new,
                         const Potential& v);

struct McmcStep {
  long step;
  int point_index;
  Complex proposal;
  bool accepted;
};

struct McmcRun {
  std::vector<GasState> states;  // recorded every record_every steps
  GasState final_state;
  long steps = 0;
  long accepted = 0;
  double acceptance_rate = 0.0;
  double mean_energy = 0.0;      // average of K_n/(4 n^2) along the chain
};

using McmcTrace = std::function<void(const McmcStep&)>;

// Metropolis chain over GasState: single-point Gaussian proposals of width
// proposal_scale, proposals leaving the open upper half-plane rejected
// outright, acceptance from incremental O(n) energy updates, and the cache
// revalidated against a full recomputation every 10^4 steps (1e-6 budget).
McmcRun mcmc_run(GasState initial, const Potential& v, long steps,
                 double proposal_scale, RandomStream& rng,
                 long record_every = 1, const McmcTrace& trace = nullptr);

// Same, starting from a fresh configuration drawn uniformly from the upper
// half of the unit disk.
McmcRun mcmc_run(int n, const Potential& v, long steps, double proposal_scale,
                 RandomStream& rng, long record_every = 1,
                 const McmcTrace& trace = nullptr);

inline double default_proposal_scale(int n) {
  return 1.0 / std::sqrt(static_cast<double>(n));
}
constexpr long kDefaultBurnin = 100000;

// (1/(4n^2)) K_n evaluated on a paired spectrum. Coincident eigenvalues
// (within 1e-14) are perturbed by 1e-12 with a warning on stderr instead of
// poisoning the sum.
double empirical_energy(const SpectrumSample& spec, const Potential& v);

// The same statistic for an arbitrary upper-half configuration.
double empirical_energy(const GasState& state, const Potential& v);

}  // namespace qg
