#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qg/complex_matrix.hpp"
#include "qg/loggas.hpp"

namespace qg {

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Globally adaptive Gauss-Legendre integration of f over [a,b] to absolute
// tolerance tol. Handles integrable endpoint/interior log singularities by
// refinement; throws QuadratureError when the panel budget runs out.
double adaptive_integrate(const std::function<double(double)>& f, double a,
                          double b, double tol, int max_panels = 4000);

// Probability density on the unit circle with respect to d(theta)/(2 pi).
struct CircleMeasureDensity {
  std::function<double(double)> weight;
  std::string name;

  static CircleMeasureDensity haar();  // weight = 1
  static CircleMeasureDensity sin2();  // weight = 2 sin^2(theta)

  // Mass by quadrature; the densities used here integrate to 1.
  double total_mass(double tol = 1e-12) const;
};

// int_{-pi}^{pi} log|x - r e^{i theta}| d(theta): 2 pi log r inside,
// 2 pi log|x| outside (mean-value property of harmonic functions).
double circle_log_integral(Complex x, double r);

// Logarithmic potential of the uniform unit-disk measure:
// (1-|x|^2)/2 inside, -log|x| outside.
double potential_uniform_disk(Complex x);

// int log|r - e^{i theta}| (1/pi) sin^2(theta) d(theta):
// r^2/4 for 0 <= r <= 1, 1/(4 r^2) + log r for r > 1.
double sin2_log_integral(double r);

// Poisson-kernel companions: A1 = int d(theta)/(r^2+1-2r cos theta),
// A2 = int cos^2(theta) d(theta)/(r^2+1-2r cos theta). r = 1 diverges.
struct PoissonIntegrals {
  double a1;
  double a2;
};
PoissonIntegrals poisson_integrals(double r);

// Logarithmic potential of d(nu) = 2 |Im z|^2 d(sigma) on the circle:
// -(Re^2-Im^2)/4 inside; -(Re^2-Im^2)/(4|x|^4) - log|x| outside. The
// exterior branch is the one the quadrature oracle confirms (and the only
// one with the -log|x| decay a probability measure must have).
double potential_nu(Complex x);

// Quadrature oracle for circle-measure potentials:
// int log(1/|x - e^{i theta}|) dens(theta) d(theta)/(2 pi), with the panel
// split at the angle nearest arg(x) to tame the near-singularity.
double quad_potential(const CircleMeasureDensity& dens, Complex x, double tol);

// Independent oracle for the uniform-disk potential: radial quadrature of
// numerically integrated circle potentials (no closed forms involved).
double quad_potential_disk(Complex x, double tol);

// Weighted point cloud; weights must sum to 1 within 1e-12.
struct DiscreteMeasure {
  std::vector<Complex> points;
  std::vector<double> weights;

  static DiscreteMeasure uniform(std::vector<Complex> pts);
  static DiscreteMeasure weighted(std::vector<Complex> pts,
                                  std::vector<double> w);
};

// sum_{i != j} w_i w_j log(1/|x_i-x_j|) + sum_i w_i V(x_i), ordered pairs,
// diagonal excluded. Coincident points are an error.
double weighted_energy(const DiscreteMeasure& mu, const Potential& v);

// Equilibrium characterization probe: l_hat is the mean of 2U+V over the
// on-support grid points, on_support_dev the worst deviation from it there,
// and off_support_violation how far below l_hat the off-support minimum of
// 2U+V dips (0 when the variational inequality holds).
struct EquilibriumCheck {
  double l_hat;
  double on_support_dev;
  double off_support_violation;
};

EquilibriumCheck equilibrium_check(const std::function<double(Complex)>& u,
                                   const Potential& v,
                                   const std::function<bool(Complex)>& support,
                                   const std::vector<Complex>& grid);

// Least-squares fit of a quadratic potential making 2 U^nu + V constant on
// the circle. The constancy pins a and the combination c - 2b; b itself
// stays free (b_free), so the reported violation uses the canonical
// admissible representative c = 1. A positive violation at the origin is
// the contradiction with the equilibrium characterization.
struct QuadraticFit {
  double a;
  bool b_free;
  double c_minus_2b;
  double violation;        // l_hat - (2 U^nu(0) + V(0))
  double circle_residual;  // max |2U+V - l_hat| over the fit circle
  double chosen_c;
  double chosen_b;
  double l_hat;
};

QuadraticFit refute_quadratic_for_nu(int circle_points);

}  // namespace qg
