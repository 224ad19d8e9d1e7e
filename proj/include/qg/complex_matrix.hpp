#pragma once

#include <cassert>
#include <complex>
#include <stdexcept>
#include <vector>

namespace qg {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Just enough linear algebra for the
// eigensolver and for building test matrices; nothing clever.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static ComplexMatrix identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& operator()(int i, int j) {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const Complex& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Complex* row(int i) { return a_.data() + static_cast<std::size_t>(i) * cols_; }
  const Complex* row(int i) const {
    return a_.data() + static_cast<std::size_t>(i) * cols_;
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const Complex& v : a_) s += std::norm(v);
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (const Complex& v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b) {
    assert(a.cols_ == b.rows_);
    ComplexMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        const Complex aik = a(i, k);
        if (aik == 0.0) continue;
        const Complex* brow = b.row(k);
        Complex* crow = c.row(i);
        for (int j = 0; j < b.cols_; ++j) crow[j] += aik * brow[j];
      }
    }
    return c;
  }

  friend ComplexMatrix operator+(const ComplexMatrix& a,
                                 const ComplexMatrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    ComplexMatrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
    return c;
  }

  friend ComplexMatrix operator-(const ComplexMatrix& a,
                                 const ComplexMatrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    ComplexMatrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
    return c;
  }

  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
    ComplexMatrix c = a;
    for (Complex& v : c.a_) v *= s;
    return c;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> a_;
};

// LU factorization with partial pivoting, kept around for determinants and
// the occasional small solve in tests.
class Lu {
 public:
  explicit Lu(ComplexMatrix m) : lu_(std::move(m)), perm_sign_(1.0) {
    const int n = lu_.rows();
    if (n != lu_.cols()) throw std::invalid_argument("Lu: square matrix required");
    piv_.resize(n);
    for (int k = 0; k < n; ++k) {
      int p = k;
      double best = std::abs(lu_(k, k));
      for (int i = k + 1; i < n; ++i) {
        const double v = std::abs(lu_(i, k));
        if (v > best) {
          best = v;
          p = i;
        }
      }
      piv_[k] = p;
      if (p != k) {
        for (int j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
        perm_sign_ = -perm_sign_;
      }
      const Complex pivot = lu_(k, k);
      if (pivot == 0.0) {
        singular_ = true;
        continue;
      }
      for (int i = k + 1; i < n; ++i) {
        const Complex f = lu_(i, k) / pivot;
        lu_(i, k) = f;
        if (f == 0.0) continue;
        for (int j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
      }
    }
  }

  bool singular() const { return singular_; }

  Complex determinant() const {
    Complex d = perm_sign_;
    for (int i = 0; i < lu_.rows(); ++i) d *= lu_(i, i);
    return d;
  }

  std::vector<Complex> solve(std::vector<Complex> b) const {
    const int n = lu_.rows();
    if (singular_) throw std::domain_error("Lu::solve: singular matrix");
    if (static_cast<int>(b.size()) != n)
      throw std::invalid_argument("Lu::solve: size mismatch");
    // All row swaps first (the stored multipliers are fully permuted), then
    // the two triangular solves.
    for (int k = 0; k < n; ++k)
      if (piv_[k] != k) std::swap(b[k], b[piv_[k]]);
    for (int k = 0; k < n; ++k)
      for (int i = k + 1; i < n; ++i) b[i] -= lu_(i, k) * b[k];
    for (int i = n - 1; i >= 0; --i) {
      for (int j = i + 1; j < n; ++j) b[i] -= lu_(i, j) * b[j];
      b[i] /= lu_(i, i);
    }
    return b;
  }

 private:
  ComplexMatrix lu_;
  std::vector<int> piv_;
  Complex perm_sign_;
  bool singular_ = false;
};

}  // namespace qg
