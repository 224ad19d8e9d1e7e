#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "qg/complex_matrix.hpp"
#include "qg/quaternion.hpp"
#include "qg/random.hpp"

namespace qg {

struct EnsembleConfig {
  int n = 1;
  std::uint64_t seed = 0;
};

// Square quaternionic matrix, entries row-major.
class QuaternionMatrix {
 public:
  explicit QuaternionMatrix(int n)
      : n_(n), entries_(static_cast<std::size_t>(n) * n) {}

  int size() const { return n_; }

  Quaternion& operator()(int i, int j) {
    return entries_[static_cast<std::size_t>(i) * n_ + j];
  }
  const Quaternion& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * n_ + j];
  }

  friend bool operator==(const QuaternionMatrix& a, const QuaternionMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  int n_;
  std::vector<Quaternion> entries_;
};

// Gaussian quaternionic ensemble: every entry has four independent centered
// Gaussian components of variance 1/(4n), so E|X_ij|^2 = 1/n. Entries are
// filled row-major with components drawn in (w,x,y,z) order, making the
// matrix a pure function of the seed.
QuaternionMatrix sample_ginibre_quaternion(const EnsembleConfig& cfg);
QuaternionMatrix sample_ginibre_quaternion(int n, RandomStream& rng);

// 2n x 2n complex doubling [[A1, A2], [-conj(A2), conj(A1)]] of
// A = A1 + A2 j, with entry q = (w + x i) + (y + z i) j.
ComplexMatrix complex_adjoint(const QuaternionMatrix& a);

// Residuals of the two sides of the right-eigenvalue equivalence for a
// candidate (lambda, X): (i) is ||A X - X lambda|| over H^n, (ii) is the
// same equation transported to the stacked complex vector (Y, -conj(Z))
// with X = Y + Z j.
struct RightEigenCheck {
  double residual_direct = 0.0;   // condition (i)
  double residual_adjoint = 0.0;  // condition (ii)
  bool holds_direct = false;
  bool holds_adjoint = false;
};

RightEigenCheck check_right_eigen(const QuaternionMatrix& a, Complex lambda,
                                  const std::vector<Quaternion>& x,
                                  double tol = 1e-8);

// True iff conditions (i) and (ii) agree (both hold or both fail) at tol.
bool verify_right_eigen_equivalence(const QuaternionMatrix& a, Complex lambda,
                                    const std::vector<Quaternion>& x,
                                    double tol = 1e-8);

// CSV dumps: `row,col,w,x,y,z` for quaternionic matrices and `row,col,re,im`
// for complex ones, 17 significant digits.
void write_csv(const QuaternionMatrix& a, std::ostream& os);
void write_csv(const ComplexMatrix& m, std::ostream& os);

}  // namespace qg
