#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "qg/quaternion.hpp"
#include "qg/spectral_stats.hpp"

using namespace qg;

namespace {

const Quaternion qi{0, 1, 0, 0};
const Quaternion qj{0, 0, 1, 0};
const Quaternion qk{0, 0, 0, 1};
const Quaternion one{1, 0, 0, 0};

Quaternion random_q(RandomStream& rng, double s = 1.0) {
  return {s * rng.gaussian(), s * rng.gaussian(), s * rng.gaussian(),
          s * rng.gaussian()};
}

// Independent multiplication oracle: the left-regular 4x4 real matrix of a,
// written out from the multiplication table, applied to b as a vector.
Quaternion multiply_oracle(const Quaternion& a, const Quaternion& b) {
  const std::array<std::array<double, 4>, 4> left = {{
      {a.w, -a.x, -a.y, -a.z},
      {a.x, a.w, -a.z, a.y},
      {a.y, a.z, a.w, -a.x},
      {a.z, -a.y, a.x, a.w},
  }};
  const std::array<double, 4> vb = {b.w, b.x, b.y, b.z};
  std::array<double, 4> out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[r] += left[r][c] * vb[c];
  return {out[0], out[1], out[2], out[3]};
}

double dist(const Quaternion& a, const Quaternion& b) { return norm(a - b); }

}  // namespace

TEST_CASE("multiplication table") {
  CHECK(qi * qj == qk);
  CHECK(qj * qi == -qk);
  CHECK(qj * qk == qi);
  CHECK(qk * qj == -qi);
  CHECK(qk * qi == qj);
  CHECK(qi * qk == -qj);
  CHECK(qi * qi == -one);
  CHECK(qj * qj == -one);
  CHECK(qk * qk == -one);

  RandomStream rng(1);
  const Quaternion q = random_q(rng);
  CHECK(dist(one * q, q) == 0.0);
  CHECK(dist(q * one, q) == 0.0);
}

TEST_CASE("products against the 4x4 real-matrix oracle") {
  // (1+i)(1-i) expands to 2 by the table.
  const Quaternion p = Quaternion{1, 1, 0, 0} * Quaternion{1, -1, 0, 0};
  CHECK(dist(p, Quaternion{2, 0, 0, 0}) == 0.0);

  RandomStream rng(2);
  for (int t = 0; t < 200; ++t) {
    const Quaternion a = random_q(rng), b = random_q(rng);
    CHECK(dist(a * b, multiply_oracle(a, b)) <= 1e-14 * norm(a) * norm(b));
  }
}

TEST_CASE("norm and conjugation") {
  CHECK(norm(one) == 1.0);
  CHECK(norm(Quaternion{1, 1, 1, 1}) == doctest::Approx(2.0).epsilon(1e-15));

  RandomStream rng(3);
  for (int t = 0; t < 200; ++t) {
    const Quaternion a = random_q(rng), b = random_q(rng);
    // |qq'| = |q||q'|
    CHECK(norm(a * b) ==
          doctest::Approx(norm(a) * norm(b)).epsilon(1e-12));
    // q q* = |q|^2
    CHECK(dist(a * conj(a), Quaternion(norm_sq(a))) <= 1e-12 * norm_sq(a));
    // (q*)* = q, (ab)* = b* a*
    CHECK(conj(conj(a)) == a);
    CHECK(dist(conj(a * b), conj(b) * conj(a)) <= 1e-13 * norm(a) * norm(b));
    // re/im decomposition
    CHECK(re(im(a)) == 0.0);
    CHECK(dist(Quaternion(re(a)) + im(a), a) == 0.0);
  }
}

TEST_CASE("inverse") {
  RandomStream rng(4);
  for (int t = 0; t < 100; ++t) {
    const Quaternion q = random_q(rng);
    if (norm(q) < 1e-3) continue;
    CHECK(dist(q * inverse(q), one) <= 1e-12);
    CHECK(dist(inverse(q) * q, one) <= 1e-12);
  }
  CHECK_THROWS_AS((void)inverse(Quaternion{0, 0, 0, 0}), std::domain_error);
}

TEST_CASE("associativity") {
  RandomStream rng(5);
  for (int t = 0; t < 200; ++t) {
    const Quaternion a = random_q(rng), b = random_q(rng), c = random_q(rng);
    CHECK(dist((a * b) * c, a * (b * c)) <=
          1e-12 * norm(a) * norm(b) * norm(c));
  }
}

TEST_CASE("canonical form") {
  CHECK(canonical_form(qj) == Complex(0, 1));
  CHECK(canonical_form(Quaternion(5.0)) == Complex(5, 0));
  // |Im(1+2i-2j+k)| = sqrt(4+4+1) = 3
  const Complex c = canonical_form(Quaternion{1, 2, -2, 1});
  CHECK(c.real() == 1.0);
  CHECK(c.imag() == doctest::Approx(3.0).epsilon(1e-15));

  RandomStream rng(6);
  for (int t = 0; t < 100; ++t) {
    const Quaternion q = random_q(rng);
    const Quaternion u = sample_unit_sphere(rng);
    CHECK(std::abs(canonical_form(conjugate_by(u, q)) - canonical_form(q)) <=
          1e-10 * (1.0 + norm(q)));
  }
}

TEST_CASE("conjugation action") {
  RandomStream rng(7);
  const Quaternion t{1, 2, 0, 0};  // 1 + 2i
  CHECK(dist(conjugate_by(one, t), t) == 0.0);
  for (int k = 0; k < 100; ++k) {
    const Quaternion u = sample_unit_sphere(rng);
    const Quaternion c = conjugate_by(u, t);
    CHECK(std::abs(re(c) - 1.0) <= 1e-12);
    const Quaternion q = random_q(rng);
    CHECK(norm(conjugate_by(u, q)) ==
          doctest::Approx(norm(q)).epsilon(1e-12));
  }
  CHECK_THROWS_AS((void)conjugate_by(Quaternion{0.5, 0, 0, 0}, t),
                  std::invalid_argument);
}

TEST_CASE("uniform sphere sampling") {
  RandomStream rng(8);
  const int draws = 100000;
  double mean[4] = {0, 0, 0, 0};
  double w2 = 0.0;
  std::vector<double> first;
  first.reserve(draws);
  for (int i = 0; i < draws; ++i) {
    const Quaternion u = sample_unit_sphere(rng);
    CHECK(std::abs(norm(u) - 1.0) <= 1e-14);
    mean[0] += u.w;
    mean[1] += u.x;
    mean[2] += u.y;
    mean[3] += u.z;
    w2 += u.w * u.w;
    first.push_back(u.w);
  }
  for (double m : mean) CHECK(std::abs(m / draws) <= 0.01);
  CHECK(w2 / draws == doctest::Approx(0.25).epsilon(0.04));

  // First coordinate of a uniform S^3 draw follows the semicircle law.
  const LimitMarginals lm = limit_marginals();
  CHECK(ks_statistic(first, lm.real_cdf) <= 0.01);
}

TEST_CASE("uniform sphere of the imaginary subspace") {
  RandomStream rng(9);
  for (int i = 0; i < 1000; ++i) {
    const Quaternion u = sample_unit_sphere_im(rng);
    CHECK(u.w == 0.0);
    CHECK(std::abs(norm(u) - 1.0) <= 1e-14);
  }
}

TEST_CASE("random stream determinism and children") {
  RandomStream a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    CHECK(a.next_u64() == b.next_u64());
  }
  RandomStream c(42), d(42);
  for (int i = 0; i < 100; ++i) CHECK(c.gaussian() == d.gaussian());

  RandomStream root(42);
  RandomStream c0 = root.child(0), c1 = root.child(1), c0b = root.child(0);
  CHECK(c0.next_u64() != c1.next_u64());
  RandomStream c0c = root.child(0);
  CHECK(c0b.next_u64() == c0c.next_u64());
}
