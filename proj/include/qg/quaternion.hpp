#pragma once

#include <cmath>
#include <complex>
#include <ostream>
#include <stdexcept>

#include "qg/random.hpp"

namespace qg {

// Quaternion w + x i + y j + z k over doubles.
//
// The complex plane embeds as a + b i -> (a, b, 0, 0), so real and complex
// scalars act through the usual inclusion R < C < H.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Quaternion() = default;
  Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}
  explicit Quaternion(double real) : w(real) {}
  explicit Quaternion(std::complex<double> c) : w(c.real()), x(c.imag()) {}

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Quaternion operator-(const Quaternion& a) {
    return {-a.w, -a.x, -a.y, -a.z};
  }
  friend Quaternion operator*(double s, const Quaternion& q) {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
  }
  friend Quaternion operator*(const Quaternion& q, double s) { return s * q; }

  // Hamilton product: i^2=j^2=k^2=-1, ij=-ji=k, jk=-kj=i, ki=-ik=j.
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.w << ',' << q.x << ',' << q.y << ',' << q.z << ')';
  }
};

inline Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

inline double norm_sq(const Quaternion& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

inline double re(const Quaternion& q) { return q.w; }

inline Quaternion im(const Quaternion& q) { return {0.0, q.x, q.y, q.z}; }

inline double im_norm(const Quaternion& q) {
  return std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
}

inline Quaternion inverse(const Quaternion& q) {
  const double n2 = norm_sq(q);
  if (n2 == 0.0) throw std::domain_error("inverse of zero quaternion");
  return (1.0 / n2) * conj(q);
}

// Canonical similarity representative Re(q) + |Im(q)| i, imaginary part >= 0.
inline std::complex<double> canonical_form(const Quaternion& q) {
  return {q.w, im_norm(q)};
}

constexpr double kUnitNormTol = 1e-12;

// u q u* for unit u. Rejects |u| off 1 by more than 1e-12 and renormalizes
// u before use so long conjugation chains do not drift.
inline Quaternion conjugate_by(const Quaternion& u, const Quaternion& q) {
  const double n = norm(u);
  if (std::abs(n - 1.0) > kUnitNormTol)
    throw std::invalid_argument("conjugate_by: u is not a unit quaternion");
  const Quaternion un = (1.0 / n) * u;
  return un * q * conj(un);
}

// Uniform draw on the unit sphere of H: four standard Gaussians, normalized.
inline Quaternion sample_unit_sphere(RandomStream& rng) {
  for (;;) {
    const Quaternion g{rng.gaussian(), rng.gaussian(), rng.gaussian(),
                       rng.gaussian()};
    const double n = norm(g);
    if (n > 0.0) return (1.0 / n) * g;
  }
}

// Uniform draw on the unit sphere of H0 = {Re(q)=0}: three Gaussians.
inline Quaternion sample_unit_sphere_im(RandomStream& rng) {
  for (;;) {
    const Quaternion g{0.0, rng.gaussian(), rng.gaussian(), rng.gaussian()};
    const double n = norm(g);
    if (n > 0.0) return (1.0 / n) * g;
  }
}

}  // namespace qg
