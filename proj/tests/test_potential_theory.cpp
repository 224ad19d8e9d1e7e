#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qg/potential_theory.hpp"

using namespace qg;

TEST_CASE("circle log integral branches") {
  CHECK(circle_log_integral(Complex(0, 0), 1.0) == 0.0);
  CHECK(circle_log_integral(Complex(2, 0), 1.0) ==
        doctest::Approx(2.0 * M_PI * std::log(2.0)).epsilon(1e-15));
  // both branches meet at |x| = r
  CHECK(circle_log_integral(Complex(0.7, 0), 0.7) ==
        doctest::Approx(2.0 * M_PI * std::log(0.7)).epsilon(1e-15));
  CHECK(circle_log_integral(std::polar(3.0, 1.1), 3.0) ==
        doctest::Approx(2.0 * M_PI * std::log(3.0)).epsilon(1e-15));
}

TEST_CASE("uniform disk potential") {
  CHECK(potential_uniform_disk(Complex(0, 0)) == 0.5);
  CHECK(potential_uniform_disk(std::polar(1.0, 0.3)) ==
        doctest::Approx(0.0).epsilon(1e-15));
  CHECK(potential_uniform_disk(Complex(2, 0)) ==
        doctest::Approx(-std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("sin^2-weighted log integral") {
  CHECK(sin2_log_integral(0.0) == 0.0);
  CHECK(sin2_log_integral(1.0) == 0.25);
  CHECK(sin2_log_integral(2.0) ==
        doctest::Approx(1.0 / 16.0 + std::log(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS((void)sin2_log_integral(-0.5), std::invalid_argument);
}

TEST_CASE("poisson integrals") {
  const PoissonIntegrals at_half = poisson_integrals(0.5);
  CHECK(at_half.a1 == doctest::Approx(8.0 * M_PI / 3.0).epsilon(1e-15));
  const PoissonIntegrals at_zero = poisson_integrals(0.0);
  CHECK(at_zero.a1 == doctest::Approx(2.0 * M_PI).epsilon(1e-15));
  CHECK(at_zero.a2 == doctest::Approx(M_PI).epsilon(1e-15));
  const PoissonIntegrals at_two = poisson_integrals(2.0);
  CHECK(at_two.a1 == doctest::Approx(2.0 * M_PI / 3.0).epsilon(1e-15));
  CHECK(at_two.a2 == doctest::Approx(M_PI * 1.25 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS((void)poisson_integrals(1.0), std::domain_error);
}

TEST_CASE("potential of the sin^2 circle measure") {
  CHECK(potential_nu(Complex(0, 0)) == 0.0);
  CHECK(potential_nu(Complex(1, 0)) == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(potential_nu(Complex(0, 1)) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(potential_nu(Complex(2, 0)) ==
        doctest::Approx(-1.0 / 16.0 - std::log(2.0)).epsilon(1e-15));

  RandomStream rng(1);
  for (int t = 0; t < 50; ++t) {
    const Complex x(2.0 * rng.gaussian(), 2.0 * rng.gaussian());
    CHECK(potential_nu(x) == potential_nu(std::conj(x)));
    CHECK(potential_nu(x) == potential_nu(-x));
  }
}

TEST_CASE("quadrature oracle on reference points") {
  const CircleMeasureDensity haar = CircleMeasureDensity::haar();
  const CircleMeasureDensity sin2 = CircleMeasureDensity::sin2();
  CHECK(haar.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sin2.total_mass() == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(std::abs(quad_potential(haar, Complex(0, 0), 1e-11)) <= 1e-10);
  // -1/16 at the real point 1/2 under the sin^2 weight
  CHECK(quad_potential(sin2, Complex(0.5, 0), 1e-10) ==
        doctest::Approx(-1.0 / 16.0).epsilon(1e-8));
  // The oracle adjudicates the exterior branch of potential_nu.
  CHECK(quad_potential(sin2, Complex(2, 0), 1e-10) ==
        doctest::Approx(potential_nu(Complex(2, 0))).epsilon(1e-8));
}

TEST_CASE("closed forms track the oracle off and on the circle") {
  const CircleMeasureDensity sin2 = CircleMeasureDensity::sin2();
  RandomStream rng(2);
  for (int t = 0; t < 25; ++t) {
    const double r =
        (t % 2 == 0) ? rng.uniform(0.05, 0.99) : rng.uniform(1.01, 2.5);
    const Complex x = std::polar(r, rng.uniform(-M_PI, M_PI));
    CHECK(std::abs(potential_nu(x) - quad_potential(sin2, x, 1e-9)) <= 1e-8);
    CHECK(std::abs(potential_uniform_disk(x) - quad_potential_disk(x, 1e-9)) <=
          1e-8);
  }
  for (double th : {0.27, 2.1, -1.4}) {
    const Complex x = std::polar(1.0, th);
    CHECK(std::abs(potential_nu(x) - quad_potential(sin2, x, 1e-7)) <= 1e-5);
    CHECK(std::abs(potential_uniform_disk(x) - quad_potential_disk(x, 1e-7)) <=
          1e-5);
  }
}

TEST_CASE("uniform circle potential matches the mean-value branches") {
  const CircleMeasureDensity haar = CircleMeasureDensity::haar();
  RandomStream rng(3);
  for (int t = 0; t < 20; ++t) {
    const double r =
        (t % 2 == 0) ? rng.uniform(0.05, 0.95) : rng.uniform(1.05, 3.0);
    const Complex x = std::polar(r, rng.uniform(-M_PI, M_PI));
    const double closed = -circle_log_integral(x, 1.0) / (2.0 * M_PI);
    // zero inside the circle, -log|x| outside
    CHECK(std::abs(closed - std::min(0.0, -std::log(std::abs(x)))) <= 1e-15);
    CHECK(quad_potential(haar, x, 1e-10) ==
          doctest::Approx(closed).epsilon(1e-8));
  }
}

TEST_CASE("weighted energy of small configurations") {
  const Potential zero = Potential::custom([](Complex) { return 0.0; }, 1.0);
  const DiscreteMeasure two =
      DiscreteMeasure::uniform({Complex(-1, 0), Complex(1, 0)});
  CHECK(weighted_energy(two, zero) ==
        doctest::Approx(-0.5 * std::log(2.0)).epsilon(1e-15));

  const DiscreteMeasure single = DiscreteMeasure::uniform({Complex(0.3, 0.4)});
  CHECK(weighted_energy(single, zero) == 0.0);

  CHECK_THROWS_AS(
      (void)weighted_energy(
          DiscreteMeasure::uniform({Complex(1, 1), Complex(1, 1)}), zero),
      std::domain_error);
  CHECK_THROWS_AS((void)DiscreteMeasure::weighted({Complex(0, 0)}, {0.5}),
                  std::invalid_argument);
}

TEST_CASE("weighted energy of uniform disk samples approaches 3/4") {
  const Potential v = Potential::canonical();
  RandomStream rng(4);
  const auto sample_disk = [&](int count) {
    std::vector<Complex> pts;
    pts.reserve(count);
    for (int i = 0; i < count; ++i)
      pts.push_back(std::polar(std::sqrt(rng.uniform01()),
                               rng.uniform(-M_PI, M_PI)));
    return DiscreteMeasure::uniform(std::move(pts));
  };
  // The estimator error is O(1/N): the diagonal-exclusion bias is -1/(4N)
  // and the fluctuation is also O(1/N) since 2U+V is constant on the
  // support. Check the 1/N scale at both sizes.
  const double e1 = weighted_energy(sample_disk(10000), v);
  CHECK(std::abs(e1 - 0.75) <= 0.01);
  CHECK(std::abs(e1 - 0.75) <= 10.0 / 10000);
  const double e4 = weighted_energy(sample_disk(40000), v);
  CHECK(std::abs(e4 - 0.75) <= 10.0 / 40000);
}

TEST_CASE("equilibrium characterization of the disk") {
  const Potential v = Potential::canonical();
  std::vector<Complex> grid;
  for (int i = 0; i < 20; ++i)
    for (int a = 0; a < 24; ++a)
      grid.push_back(std::polar((i + 0.5) / 20.0, 2.0 * M_PI * a / 24.0));
  for (int i = 0; i < 20; ++i)
    for (int a = 0; a < 24; ++a)
      grid.push_back(
          std::polar(1.0 + 0.2 * (i + 1), 2.0 * M_PI * a / 24.0));

  const EquilibriumCheck chk = equilibrium_check(
      potential_uniform_disk, v, [](Complex z) { return std::abs(z) <= 1.0; },
      grid);
  CHECK(chk.l_hat == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(chk.on_support_dev <= 1e-12);
  CHECK(chk.off_support_violation == 0.0);

  CHECK_THROWS_AS(
      (void)equilibrium_check(potential_uniform_disk, v,
                              [](Complex) { return true; },
                              std::vector<Complex>{}),
      std::invalid_argument);
}

TEST_CASE("no quadratic potential equilibrates the sin^2 circle measure") {
  const QuadraticFit fit = refute_quadratic_for_nu(512);
  CHECK(std::abs(fit.a - 0.5) <= 1e-6);
  CHECK(std::abs(fit.c_minus_2b) <= 1e-6);
  CHECK(fit.b_free);
  CHECK(fit.circle_residual <= 1e-6);
  // The interior gap at the origin equals the fitted c and must be > 0,
  // violating the equilibrium inequality inside the disk.
  CHECK(fit.violation > 0.0);
  CHECK(fit.violation == doctest::Approx(fit.chosen_c).epsilon(1e-9));

  // The same violation through equilibrium_check on a disk grid.
  const Potential v =
      Potential::quadratic(fit.a, fit.chosen_b, fit.chosen_c);
  std::vector<Complex> grid;
  for (int a = 0; a < 64; ++a)
    grid.push_back(std::polar(1.0, 2.0 * M_PI * a / 64.0));
  grid.push_back(Complex(0, 0));
  const EquilibriumCheck chk = equilibrium_check(
      potential_nu, v,
      [](Complex z) { return std::abs(std::abs(z) - 1.0) < 1e-9; }, grid);
  CHECK(chk.on_support_dev <= 1e-9);
  CHECK(chk.off_support_violation > 0.5);  // ~ c at the origin

  CHECK_THROWS_AS((void)refute_quadratic_for_nu(4), std::invalid_argument);
}

TEST_CASE("adaptive integration handles smooth and singular integrands") {
  CHECK(adaptive_integrate([](double x) { return std::sin(x); }, 0.0, M_PI,
                           1e-12) == doctest::Approx(2.0).epsilon(1e-12));
  // integrable log singularity at an endpoint
  CHECK(adaptive_integrate([](double x) { return std::log(x); }, 0.0, 1.0,
                           1e-10) == doctest::Approx(-1.0).epsilon(1e-9));
  // a hard 1/sqrt blow-up inside the panel budget fails loudly
  CHECK_THROWS_AS(
      (void)adaptive_integrate([](double x) { return 1.0 / std::sqrt(x); },
                               0.0, 1.0, 1e-14, 40),
      QuadratureError);
}
