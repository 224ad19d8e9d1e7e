#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qg/complex_matrix.hpp"
#include "qg/random.hpp"

namespace qg {

// Thrown when the QR iteration exhausts its budget; carries how many
// eigenvalues had already been deflated.
class EigenFailure : public std::runtime_error {
 public:
  EigenFailure(const std::string& what, int deflated)
      : std::runtime_error(what), deflated_(deflated) {}
  int deflated() const { return deflated_; }

 private:
  int deflated_;
};

struct EigOptions {
  bool balance = true;       // Parlett-Reinsch diagonal balancing
  int max_iter_per_eig = 40; // QR sweeps allowed per deflation
};

// Eigenvalues of a general complex matrix: balancing, Householder reduction
// to upper Hessenberg, then implicit single-shift QR with Wilkinson shifts,
// an exceptional shift every 10 stalled sweeps, and deflation when a
// subdiagonal entry drops below 2^-52 times its diagonal neighbours.
std::vector<Complex> eigenvalues(const ComplexMatrix& m,
                                 const EigOptions& opts = {});

// Spectrum of a complex-adjoint matrix folded onto its upper-half
// representatives; the conjugate pairing convention z_{n+i} = conj(z_i).
struct SpectrumSample {
  int n = 0;
  std::vector<Complex> all_eigs;  // 2n values as computed
  std::vector<Complex> upper;     // n representatives, Im >= 0
  double pairing_residual = 0.0;  // worst |conj(z) - partner|
};

// Greedy nearest-neighbour matching of each eigenvalue with the conjugate
// of another; near-real values pair among themselves and are snapped to
// Im = 0. Throws if the residual exceeds 1e-6 times the spectral scale,
// which signals the input was not adjoint-structured.
SpectrumSample pair_spectrum(const std::vector<Complex>& eigs);

// Haar-ish random unitary from Householder QR of a Gaussian matrix; used to
// build matrices with known spectra in tests and verification.
ComplexMatrix random_unitary(int n, RandomStream& rng);

// Worst distance under greedy minimal-distance matching of two equal-size
// multisets; the "optimal assignment" yardstick for spectra.
double match_distance(std::vector<Complex> a, std::vector<Complex> b);

}  // namespace qg
