#ifndef NEGWIT_RANDOM_HPP
#define NEGWIT_RANDOM_HPP

#include <string_view>
#include <vector>

#include "negwit/density.hpp"
#include "negwit/linalg.hpp"
#include "negwit/rng.hpp"

namespace negwit {

/// Families of random amplitude matrices used throughout the experiments.
enum class AmplitudeClass {
  PositiveHermitian,      // U diag(w) U^dagger, Weyl-chamber w
  Hermitian,              // (Z + Z^dagger)/2, Ginibre Z
  NormalComplexDiag,      // U diag(unitary row) U^dagger
  ArbitraryComplex,       // Ginibre Z
  RealSymmetricPositive,  // O diag(w) O^T, Haar orthogonal O
};

std::string_view to_string(AmplitudeClass c);
AmplitudeClass amplitude_class_from_string(std::string_view tag);  // throws invalid_argument

/// d x d matrix of i.i.d. standard complex normals (g1 + i*g2)/sqrt(2),
/// E|z|^2 = 1. Entries are drawn row-major, real part before imaginary.
ComplexMatrix ginibre(int d, RngStream& rng);

/// Real d x d matrix of i.i.d. standard normals, drawn row-major.
ComplexMatrix ginibre_real(int d, RngStream& rng);

/// Haar-distributed unitary via phase-corrected QR of a Ginibre matrix.
/// Rank-deficient draws are resampled up to 3 times before failing.
ComplexMatrix haar_unitary(int d, RngStream& rng);

/// Haar-distributed real orthogonal matrix (stored with zero imaginary parts).
ComplexMatrix haar_orthogonal(int d, RngStream& rng);

/// Point in the Weyl chamber: |row of a fresh Haar unitary|^2. Draw order is
/// part of the contract: the unitary first, then the uniform row index.
std::vector<double> weyl_diagonal(int d, RngStream& rng);

/// Haar-uniform density matrix U diag(weyl) U^dagger. Consumes the stream in
/// the documented order: weyl_diagonal(d) first, then a fresh haar_unitary(d).
DensityMatrix random_density_matrix(int d, RngStream& rng);

/// Unnormalized amplitude matrix of the requested class.
ComplexMatrix sample_amplitudes(AmplitudeClass c, int d, RngStream& rng);

/// Structural residual of the class property (hermiticity, symmetry,
/// negative-eigenvalue magnitude, ...); all samplers stay below 1e-10 except
/// ArbitraryComplex, whose residual is 0 by definition.
double amplitude_class_residual(AmplitudeClass c, const ComplexMatrix& c_matrix);

/// (base + eta*sigma) / Tr[...] with a fresh Haar-uniform sigma; eta = 0
/// returns the base unchanged without consuming the stream.
DensityMatrix purity_targeted_density(const DensityMatrix& base, double eta, RngStream& rng);

/// Amplitude-side deviation: C = rho/sqrt(Tr[rho^2]) with
/// rho = base/sqrt(Tr[base^2]) + eta*sigma, sigma a Haar-uniform density
/// matrix. The base must be Hermitian; the result has unit Frobenius norm.
ComplexMatrix purity_targeted_amplitudes(const ComplexMatrix& base, double eta, RngStream& rng);

struct HistogramBin {
  double center = 0.0;
  long count = 0;
};

/// Deterministic fixed-range histogram: half-open bins [lo+k*w, lo+(k+1)*w)
/// with the last bin closed at hi. Out-of-range values are dropped.
std::vector<HistogramBin> histogram(const std::vector<double>& values, int bins, double lo,
                                    double hi);

}  // namespace negwit

#endif
