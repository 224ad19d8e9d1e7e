#include "qg/matrix_model.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qg {

QuaternionMatrix sample_ginibre_quaternion(int n, RandomStream& rng) {
  if (n < 1) throw std::invalid_argument("sample_ginibre_quaternion: n >= 1");
  const double sigma = 1.0 / (2.0 * std::sqrt(static_cast<double>(n)));
  QuaternionMatrix a(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double w = sigma * rng.gaussian();
      const double x = sigma * rng.gaussian();
      const double y = sigma * rng.gaussian();
      const double z = sigma * rng.gaussian();
      a(i, j) = Quaternion{w, x, y, z};
    }
  }
  return a;
}

QuaternionMatrix sample_ginibre_quaternion(const EnsembleConfig& cfg) {
  RandomStream rng(cfg.seed);
  return sample_ginibre_quaternion(cfg.n, rng);
}

ComplexMatrix complex_adjoint(const QuaternionMatrix& a) {
  const int n = a.size();
  ComplexMatrix m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Quaternion& q = a(i, j);
      const Complex a1(q.w, q.x);
      const Complex a2(q.y, q.z);
      m(i, j) = a1;
      m(i, j + n) = a2;
      m(i + n, j) = -std::conj(a2);
      m(i + n, j + n) = std::conj(a1);
    }
  }
  return m;
}

namespace {

// X = Y + Z j componentwise.
void split_complex_pair(const Quaternion& q, Complex& y, Complex& z) {
  y = Complex(q.w, q.x);
  z = Complex(q.y, q.z);
}

}  // namespace

RightEigenCheck check_right_eigen(const QuaternionMatrix& a, Complex lambda,
                                  const std::vector<Quaternion>& x,
                                  double tol) {
  const int n = a.size();
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("check_right_eigen: vector size mismatch");
  double xnorm2 = 0.0;
  for (const Quaternion& q : x) xnorm2 += norm_sq(q);
  if (xnorm2 == 0.0)
    throw std::invalid_argument("check_right_eigen: zero vector");

  const Quaternion lam(lambda);

  // (i) directly over the quaternions: A X - X lambda (right action).
  double res_i2 = 0.0;
  for (int i = 0; i < n; ++i) {
    Quaternion acc{};
    for (int j = 0; j < n; ++j) acc = acc + a(i, j) * x[j];
    acc = acc - x[i] * lam;
    res_i2 += norm_sq(acc);
  }

  // (ii) on the complex adjoint with the stacked vector (Y, -conj(Z)).
  const ComplexMatrix m = complex_adjoint(a);
  std::vector<Complex> v(2 * n);
  for (int i = 0; i < n; ++i) {
    Complex y, z;
    split_complex_pair(x[i], y, z);
    v[i] = y;
    v[i + n] = -std::conj(z);
  }
  double res_ii2 = 0.0;
  for (int i = 0; i < 2 * n; ++i) {
    Complex acc = 0.0;
    for (int j = 0; j < 2 * n; ++j) acc += m(i, j) * v[j];
    acc -= lambda * v[i];
    res_ii2 += std::norm(acc);
  }

  const double scale = std::sqrt(xnorm2);
  RightEigenCheck out;
  out.residual_direct = std::sqrt(res_i2);
  out.residual_adjoint = std::sqrt(res_ii2);
  out.holds_direct = out.residual_direct <= tol * scale;
  out.holds_adjoint = out.residual_adjoint <= tol * scale;
  return out;
}

bool verify_right_eigen_equivalence(const QuaternionMatrix& a, Complex lambda,
                                    const std::vector<Quaternion>& x,
                                    double tol) {
  const RightEigenCheck c = check_right_eigen(a, lambda, x, tol);
  return c.holds_direct == c.holds_adjoint;
}

void write_csv(const QuaternionMatrix& a, std::ostream& os) {
  os << "row,col,w,x,y,z\n";
  char buf[160];
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      const Quaternion& q = a(i, j);
      std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g,%.17g,%.17g\n", i, j,
                    q.w, q.x, q.y, q.z);
      os << buf;
    }
  }
}

void write_csv(const ComplexMatrix& m, std::ostream& os) {
  os << "row,col,re,im\n";
  char buf[120];
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g\n", i, j,
                    m(i, j).real(), m(i, j).imag());
      os << buf;
    }
  }
}

}  // namespace qg
