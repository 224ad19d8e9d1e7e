#include "qg/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qg {

namespace {

constexpr double kDeflateEps = 0x1.0p-52;

// Parlett-Reinsch balancing with radix-2 scaling; a diagonal similarity,
// so the spectrum is untouched and no roundoff is introduced.
void balance_inplace(ComplexMatrix& m) {
  const int n = m.rows();
  bool again = true;
  while (again) {
    again = false;
    for (int i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(m(j, i));
        r += std::abs(m(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      const double s = c + r;
      double f = 1.0;
      double g = r / 2.0;
      while (c < g) {
        f *= 2.0;
        c *= 4.0;
      }
      g = r * 2.0;
      while (c >= g) {
        f /= 2.0;
        c /= 4.0;
      }
      if ((c + r) / f < 0.95 * s) {
        again = true;
        const double inv = 1.0 / f;
        for (int j = 0; j < n; ++j) m(i, j) *= inv;
        for (int j = 0; j < n; ++j) m(j, i) *= f;
      }
    }
  }
}

// In-place Householder reduction to upper Hessenberg form. Transforms are
// not accumulated; only eigenvalues are wanted downstream.
void hessenberg_inplace(ComplexMatrix& m) {
  const int n = m.rows();
  std::vector<Complex> v(n);
  for (int k = 0; k + 2 < n; ++k) {
    double xnorm2 = 0.0;
    for (int i = k + 1; i < n; ++i) xnorm2 += std::norm(m(i, k));
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) continue;

    const Complex x0 = m(k + 1, k);
    const Complex phase =
        (x0 == Complex(0.0)) ? Complex(1.0) : x0 / std::abs(x0);
    const Complex alpha = -phase * xnorm;

    // v = x - alpha e1, reflector P = I - tau v v*.
    double vnorm2 = 0.0;
    for (int i = k + 1; i < n; ++i) {
      v[i] = m(i, k);
      if (i == k + 1) v[i] -= alpha;
      vnorm2 += std::norm(v[i]);
    }
    if (vnorm2 == 0.0) continue;
    const double tau = 2.0 / vnorm2;

    // Left: rows k+1..n-1, columns k..n-1 (earlier columns already zero).
    for (int j = k; j < n; ++j) {
      Complex s = 0.0;
      for (int i = k + 1; i < n; ++i) s += std::conj(v[i]) * m(i, j);
      s *= tau;
      if (s == Complex(0.0)) continue;
      for (int i = k + 1; i < n; ++i) m(i, j) -= s * v[i];
    }
    // Right: all rows, columns k+1..n-1.
    for (int i = 0; i < n; ++i) {
      Complex s = 0.0;
      Complex* row = m.row(i);
      for (int j = k + 1; j < n; ++j) s += row[j] * v[j];
      s *= tau;
      if (s == Complex(0.0)) continue;
      for (int j = k + 1; j < n; ++j) row[j] -= s * std::conj(v[j]);
    }
    m(k + 1, k) = alpha;
    for (int i = k + 2; i < n; ++i) m(i, k) = 0.0;
  }
}

struct Givens {
  double c;
  Complex s;
};

// Rotation G = [[c, s], [-conj(s), c]] with G (a, b)^T = (r, 0)^T.
Givens make_givens(Complex a, Complex b) {
  const double aa = std::abs(a);
  const double ab = std::abs(b);
  if (ab == 0.0) return {1.0, Complex(0.0)};
  if (aa == 0.0) return {0.0, std::conj(b) / ab};
  const double r = std::hypot(aa, ab);
  return {aa / r, (a / aa) * std::conj(b) / r};
}

// Eigenvalues of a 2x2 block, with the quotient formula for the second
// root to dodge cancellation.
void eig2x2(Complex a, Complex b, Complex c, Complex d, Complex& l1,
            Complex& l2) {
  const Complex t = 0.5 * (a + d);
  const Complex det = a * d - b * c;
  Complex s = std::sqrt(t * t - det);
  if (std::real(std::conj(t) * s) < 0.0) s = -s;
  l1 = t + s;
  l2 = (l1 == Complex(0.0)) ? t - s : det / l1;
}

// Wilkinson shift: eigenvalue of the trailing 2x2 closest to the corner.
Complex wilkinson_shift(const ComplexMatrix& h, int hi) {
  Complex l1, l2;
  eig2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi), l1, l2);
  const Complex corner = h(hi, hi);
  return (std::abs(l1 - corner) <= std::abs(l2 - corner)) ? l1 : l2;
}

std::vector<Complex> qr_eigenvalues_hessenberg(ComplexMatrix& h,
                                               const EigOptions& opts) {
  const int n = h.rows();
  std::vector<Complex> eig(n);
  std::vector<Givens> rot(std::max(0, n - 1));

  int hi = n - 1;
  int iters = 0;
  while (hi >= 0) {
    if (hi == 0) {
      eig[0] = h(0, 0);
      break;
    }

    // Smallest lo with an unbroken subdiagonal chain up to hi.
    int lo = hi;
    while (lo > 0) {
      const double sub = std::abs(h(lo, lo - 1));
      if (sub <= kDeflateEps * (std::abs(h(lo - 1, lo - 1)) +
                                std::abs(h(lo, lo)))) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }

    if (lo == hi) {
      eig[hi] = h(hi, hi);
      --hi;
      iters = 0;
      continue;
    }
    if (lo == hi - 1) {
      eig2x2(h(lo, lo), h(lo, hi), h(hi, lo), h(hi, hi), eig[lo], eig[hi]);
      hi -= 2;
      iters = 0;
      continue;
    }

    if (iters >= opts.max_iter_per_eig)
      throw EigenFailure("eigenvalues: QR iteration did not converge",
                         n - 1 - hi);
    ++iters;

    Complex sigma;
    if (iters % 10 == 0) {
      // Exceptional ad-hoc shift to break symmetric stalls.
      sigma = Complex(std::abs(h(hi, hi - 1)) + std::abs(h(hi - 1, hi - 2)),
                      0.0);
    } else {
      sigma = wilkinson_shift(h, hi);
    }

    // Explicit single-shift QR sweep on the active window.
    for (int i = lo; i <= hi; ++i) h(i, i) -= sigma;
    for (int k = lo; k < hi; ++k) {
      const Givens g = make_givens(h(k, k), h(k + 1, k));
      rot[k] = g;
      Complex* r0 = h.row(k);
      Complex* r1 = h.row(k + 1);
      for (int j = k; j <= hi; ++j) {
        const Complex u = r0[j], w = r1[j];
        r0[j] = g.c * u + g.s * w;
        r1[j] = -std::conj(g.s) * u + g.c * w;
      }
    }
    for (int k = lo; k < hi; ++k) {
      const Givens g = rot[k];
      const int top = std::min(k + 1, hi);
      for (int i = lo; i <= top; ++i) {
        Complex* row = h.row(i);
        const Complex u = row[k], w = row[k + 1];
        row[k] = g.c * u + std::conj(g.s) * w;
        row[k + 1] = -g.s * u + g.c * w;
      }
    }
    for (int i = lo; i <= hi; ++i) h(i, i) += sigma;
  }
  return eig;
}

}  // namespace

std::vector<Complex> eigenvalues(const ComplexMatrix& m,
                                 const EigOptions& opts) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("eigenvalues: square matrix required");
  const int n = m.rows();
  if (n == 0) return {};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        throw std::invalid_argument("eigenvalues: non-finite entry");

  ComplexMatrix h = m;
  if (opts.balance) balance_inplace(h);
  hessenberg_inplace(h);
  return qr_eigenvalues_hessenberg(h, opts);
}

SpectrumSample pair_spectrum(const std::vector<Complex>& eigs) {
  if (eigs.size() % 2 != 0)
    throw std::invalid_argument("pair_spectrum: even count required");
  const int n2 = static_cast<int>(eigs.size());
  const int n = n2 / 2;

  double scale = 0.0;
  for (const Complex& z : eigs) scale = std::max(scale, std::abs(z));

  // Visit by descending |Im| so genuinely complex values claim their
  // partners before the near-real stragglers pair among themselves.
  std::vector<int> order(n2);
  for (int i = 0; i < n2; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(eigs[a].imag()) > std::abs(eigs[b].imag());
  });

  std::vector<bool> used(n2, false);
  SpectrumSample out;
  out.n = n;
  out.all_eigs = eigs;
  out.upper.reserve(n);

  for (int idx : order) {
    if (used[idx]) continue;
    used[idx] = true;
    const Complex target = std::conj(eigs[idx]);
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n2; ++j) {
      if (used[j]) continue;
      const double d = std::abs(target - eigs[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    used[best] = true;
    out.pairing_residual = std::max(out.pairing_residual, best_d);

    Complex rep = 0.5 * (eigs[idx] + std::conj(eigs[best]));
    if (rep.imag() < 0.0) rep = std::conj(rep);
    // A pair of near-real values is a tie at Im = 0; snap it there.
    const double im_span =
        std::max(std::abs(eigs[idx].imag()), std::abs(eigs[best].imag()));
    if (im_span <= 0.5 * best_d) rep = Complex(rep.real(), 0.0);
    out.upper.push_back(rep);
  }

  if (out.pairing_residual > 1e-6 * std::max(scale, 1e-300) && scale > 0.0)
    throw std::invalid_argument(
        "pair_spectrum: residual exceeds 1e-6 * scale; "
        "spectrum is not conjugate-paired");

  std::sort(out.upper.begin(), out.upper.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

ComplexMatrix random_unitary(int n, RandomStream& rng) {
  // QR of a Ginibre matrix via Householder reflectors, applied to I.
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Complex(rng.gaussian(), rng.gaussian());

  ComplexMatrix q = ComplexMatrix::identity(n);
  std::vector<Complex> v(n);
  for (int k = 0; k < n; ++k) {
    double xnorm2 = 0.0;
    for (int i = k; i < n; ++i) xnorm2 += std::norm(a(i, k));
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) continue;
    const Complex x0 = a(k, k);
    const Complex phase =
        (x0 == Complex(0.0)) ? Complex(1.0) : x0 / std::abs(x0);
    const Complex alpha = -phase * xnorm;
    double vnorm2 = 0.0;
    for (int i = k; i < n; ++i) {
      v[i] = a(i, k);
      if (i == k) v[i] -= alpha;
      vnorm2 += std::norm(v[i]);
    }
    if (vnorm2 == 0.0) continue;
    const double tau = 2.0 / vnorm2;
    for (int j = k; j < n; ++j) {
      Complex s = 0.0;
      for (int i = k; i < n; ++i) s += std::conj(v[i]) * a(i, j);
      s *= tau;
      for (int i = k; i < n; ++i) a(i, j) -= s * v[i];
    }
    for (int j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (int i = k; i < n; ++i) s += std::conj(v[i]) * q(i, j);
      s *= tau;
      for (int i = k; i < n; ++i) q(i, j) -= s * v[i];
    }
  }
  // q now holds Q*; its adjoint is the unitary factor.
  return q.adjoint();
}

double match_distance(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("match_distance: size mismatch");
  const int n = static_cast<int>(a.size());
  std::vector<bool> ua(n, false), ub(n, false);
  double worst = 0.0;
  for (int pick = 0; pick < n; ++pick) {
    double best = std::numeric_limits<double>::infinity();
    int bi = -1, bj = -1;
    for (int i = 0; i < n; ++i) {
      if (ua[i]) continue;
      for (int j = 0; j < n; ++j) {
        if (ub[j]) continue;
        const double d = std::abs(a[i] - b[j]);
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    ua[bi] = true;
    ub[bj] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace qg
