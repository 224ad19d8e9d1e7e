#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qg/eig.hpp"
#include "qg/matrix_model.hpp"

using namespace qg;

namespace {

ComplexMatrix random_matrix(int n, RandomStream& rng, double scale = 1.0) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = scale * Complex(rng.gaussian(), rng.gaussian());
  return m;
}

}  // namespace

TEST_CASE("rotation block has eigenvalues +i, -i") {
  ComplexMatrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = -1.0;
  const std::vector<Complex> e = eigenvalues(m);
  CHECK(match_distance(e, {Complex(0, 1), Complex(0, -1)}) <= 1e-14);
}

TEST_CASE("diagonal matrix returns its diagonal") {
  ComplexMatrix m(4, 4);
  const std::vector<Complex> d = {Complex(1, 0), Complex(-2, 0.5),
                                  Complex(0, 3), Complex(4, -4)};
  for (int i = 0; i < 4; ++i) m(i, i) = d[i];
  CHECK(match_distance(eigenvalues(m), d) <= 1e-14);
}

TEST_CASE("companion matrix of x^2 - 1") {
  ComplexMatrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  CHECK(match_distance(eigenvalues(m), {Complex(1, 0), Complex(-1, 0)}) <=
        1e-14);
}

TEST_CASE("recovers a known spectrum through a unitary similarity") {
  const int n = 30;
  RandomStream rng(5);
  std::vector<Complex> d(n);
  ComplexMatrix dm(n, n);
  for (int i = 0; i < n; ++i) {
    d[i] = std::polar(rng.uniform(0.0, 2.0), rng.uniform(-M_PI, M_PI));
    dm(i, i) = d[i];
  }
  const ComplexMatrix u = random_unitary(n, rng);
  CHECK((u * u.adjoint() - ComplexMatrix::identity(n)).max_abs() <= 1e-13);

  const ComplexMatrix m = u * dm * u.adjoint();
  CHECK(match_distance(eigenvalues(m), d) <= 1e-8 * m.frobenius_norm());
}

TEST_CASE("similarity invariance under a well-conditioned transform") {
  const int n = 40;
  RandomStream rng(6);
  const ComplexMatrix m = random_matrix(n, rng);

  ComplexMatrix p = ComplexMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      p(i, j) += 0.2 * Complex(rng.gaussian(), rng.gaussian());
  const Lu lu(p);
  REQUIRE(!lu.singular());
  ComplexMatrix pinv(n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<Complex> e(n);
    e[j] = 1.0;
    const std::vector<Complex> col = lu.solve(e);
    for (int i = 0; i < n; ++i) pinv(i, j) = col[i];
  }
  const double cond = p.frobenius_norm() * pinv.frobenius_norm();

  const ComplexMatrix sim = p * m * pinv;
  CHECK(match_distance(eigenvalues(sim), eigenvalues(m)) <=
        1e-7 * cond * m.frobenius_norm());
}

TEST_CASE("trace and determinant identities") {
  const int n = 20;
  RandomStream rng(7);
  const ComplexMatrix m = random_matrix(n, rng);
  const std::vector<Complex> e = eigenvalues(m);

  Complex sum = 0.0, prod = 1.0;
  for (const Complex& z : e) {
    sum += z;
    prod *= z;
  }
  CHECK(std::abs(sum - m.trace()) <= 1e-9 * m.frobenius_norm() * n);
  const Complex det = Lu(m).determinant();
  CHECK(std::abs(prod - det) <= 1e-7 * std::abs(det));
}

TEST_CASE("balancing keeps badly scaled matrices accurate") {
  const int n = 12;
  RandomStream rng(8);
  const ComplexMatrix m = random_matrix(n, rng);
  const std::vector<Complex> ref = eigenvalues(m);

  ComplexMatrix scaled = m;
  for (int i = 0; i < n; ++i) {
    const double s = std::pow(10.0, (i % 5) * 3 - 6);
    for (int j = 0; j < n; ++j) {
      scaled(i, j) *= s;
      scaled(j, i) /= s;
    }
  }
  CHECK(match_distance(eigenvalues(scaled), ref) <=
        1e-8 * m.frobenius_norm());
}

TEST_CASE("iteration budget failure carries the deflation count") {
  RandomStream rng(9);
  const ComplexMatrix m = random_matrix(8, rng);
  EigOptions opts;
  opts.max_iter_per_eig = 0;
  try {
    (void)eigenvalues(m, opts);
    FAIL("expected EigenFailure");
  } catch (const EigenFailure& e) {
    CHECK(e.deflated() >= 0);
    CHECK(e.deflated() < 8);
  }
  // A diagonal matrix deflates without any QR sweeps even at budget zero.
  ComplexMatrix d(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  d(2, 2) = 3.0;
  CHECK_NOTHROW((void)eigenvalues(d, opts));
}

TEST_CASE("rejects bad input") {
  CHECK_THROWS_AS((void)eigenvalues(ComplexMatrix(2, 3)),
                  std::invalid_argument);
  ComplexMatrix m(2, 2);
  m(0, 0) = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS((void)eigenvalues(m), std::invalid_argument);
}

TEST_CASE("pair_spectrum on a clean conjugate pair") {
  const SpectrumSample s =
      pair_spectrum({Complex(1, 2), Complex(1, -2)});
  CHECK(s.n == 1);
  CHECK(s.upper.size() == 1);
  CHECK(s.upper[0] == Complex(1, 2));
  CHECK(s.pairing_residual <= 1e-15);
}

TEST_CASE("pair_spectrum pairs real eigenvalues of even multiplicity") {
  // {3, 3} is a tie at Im = 0: one representative, imaginary part exactly 0.
  const SpectrumSample s = pair_spectrum({Complex(3, 0), Complex(3, 0)});
  CHECK(s.upper.size() == 1);
  CHECK(s.upper[0].imag() == 0.0);
  CHECK(s.upper[0].real() == 3.0);

  // A genuine conjugate pair with a tiny imaginary part is kept as is.
  const SpectrumSample t =
      pair_spectrum({Complex(3, 1e-12), Complex(3, -1e-12)});
  CHECK(t.upper[0].imag() == doctest::Approx(1e-12).epsilon(1e-12));
}

TEST_CASE("pair_spectrum on a random adjoint spectrum") {
  RandomStream rng(10);
  const QuaternionMatrix x = sample_ginibre_quaternion(5, rng);
  const SpectrumSample s = pair_spectrum(eigenvalues(complex_adjoint(x)));
  CHECK(s.n == 5);
  CHECK(s.pairing_residual <= 1e-8);
  for (const Complex& z : s.upper) CHECK(z.imag() >= 0.0);

  // upper and conj(upper) reproduce the full spectrum as multisets.
  std::vector<Complex> rebuilt;
  for (const Complex& z : s.upper) {
    rebuilt.push_back(z);
    rebuilt.push_back(std::conj(z));
  }
  CHECK(match_distance(rebuilt, s.all_eigs) <= 2.0 * s.pairing_residual + 1e-12);
}

TEST_CASE("pair_spectrum rejects unpaired input") {
  CHECK_THROWS_AS((void)pair_spectrum({Complex(0, 1)}), std::invalid_argument);
  CHECK_THROWS_AS((void)pair_spectrum({Complex(0, 1), Complex(0, 3)}),
                  std::invalid_argument);
}
