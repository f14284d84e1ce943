#ifndef NEGWIT_PURE_HPP
#define NEGWIT_PURE_HPP

#include <map>
#include <utility>
#include <vector>

#include "negwit/density.hpp"
#include "negwit/linalg.hpp"

namespace negwit {

// Partial-transpose eigenvalues below -kNegativeEigenvalueEps count towards
// the negativity; rank-1 states carry many analytically-zero eigenvalues that
// rounding perturbs to either side of zero.
inline constexpr double kNegativeEigenvalueEps = 1e-10;

/// Bipartite pure state |psi> = sum_{n,m} c_nm |n,m> held as its d x d
/// amplitude matrix with Tr[C C^dagger] = 1.
struct PureState {
  int d = 0;
  ComplexMatrix amplitudes;
};

/// Frobenius-normalizes a nonzero square matrix into a PureState.
PureState make_pure(const ComplexMatrix& raw);

/// |psi> = sum_n c_n |nn> (C diagonal), normalized.
PureState diagonal_state(const std::vector<Complex>& coeffs);

/// Superposition of NmmN states: each entry (n, m != n) -> c adds
/// c/sqrt(2) to both C[n][m] and C[m][n]; the result is normalized.
PureState nmmn_superposition(int d, const std::map<std::pair<int, int>, Complex>& coeffs);

/// Truncated coherent-state coefficients c_n = beta^n/sqrt(n!) e^{-|beta|^2/2}
/// for n = 0..M, renormalized after truncation. Rejects beta whose
/// pre-truncation tail mass beyond M exceeds 0.01.
std::vector<Complex> coherent_coeffs(Complex beta, int M);

/// C[n][m] = N (psi_n phi_m + phi_n psi_m)/sqrt(2) with
/// N = (1 + |<psi|phi>|^2)^{-1/2}; psi and phi must be unit vectors of equal
/// length. Separable (rank-1) exactly when phi is proportional to psi.
PureState symmetric_product_superposition(const ComplexVector& psi, const ComplexVector& phi);

/// rho = v v^dagger with v the row-major flattening of C; split = d.
DensityMatrix pure_density(const PureState& state);

/// Partial transpose on subsystem b:
/// rhoG[(n,m),(n',m')] = rho[(n,m'),(n',m)]. An involution that preserves
/// Hermiticity.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, int d);
ComplexMatrix partial_transpose(const DensityMatrix& rho);

struct LnPair {
  double negativity = 0.0;
  double ln = 0.0;  // bits, log2(1 + 2*negativity)
};

/// Exact Log Negativity oracle: negativity = sum of |lambda| over negative
/// partial-transpose eigenvalues; works for any bipartite density matrix.
LnPair ln_exact(const DensityMatrix& rho);
LnPair ln_exact(const PureState& state);

struct NegativityComponents {
  double n1 = 0.0;  // (1/2) sum_{n, m!=n} |c_nn c_mm|
  double n2 = 0.0;  // (1/2) sum_{n, m!=n} |c_nm c_mn|
};
NegativityComponents negativity_components(const PureState& state);

/// Amplitude witness: N_a = (1/2) sum_{n, m!=n} |c_nn c_mm - c_nm c_mn|,
/// ln = log2(1 + 2 N_a). Vanishes identically on product states c_nm = a_n b_m.
LnPair ln_approx(const PureState& state);

/// log2(1 + |Tr[C] Tr[C^dagger] - Tr[C C^dagger]|). For Hermitian amplitudes
/// this equals the trace-form bound log2(1 + |(Tr C)^2 - Tr C^2|), which the
/// triangle inequality keeps at or below ln_approx.
double ln_variation(const PureState& state);

struct SchmidtSpectrum {
  std::vector<double> sigmas;  // descending, clipped at 0, sum 1
};

/// Schmidt weights sigma_n = eigenvalues of C C^dagger.
SchmidtSpectrum schmidt_spectrum(const PureState& state);

/// log2((sum_n sqrt(sigma_n))^2); equal to ln_exact on pure states.
double ln_schmidt(const PureState& state);

/// LE = 1 - Tr[rho_a^2] with rho_a = C C^dagger; in [0, 1 - 1/d].
double linear_entropy(const PureState& state);

struct TwoQubitPtSpectrum {
  double lambda1 = 0.0;  // |c00 c11 - c01 c10|
  double lambda2 = 0.0;  // -lambda1
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
};

/// Closed-form partial-transpose spectrum of an arbitrary two-qubit pure
/// state; matches the numeric spectrum to 1e-10 per eigenvalue.
TwoQubitPtSpectrum two_qubit_pt_spectrum(const PureState& state);

/// All per-state measures computed from one normalized amplitude matrix.
/// purity_of_c is Tr[rho^2] of the unit-trace matrix proportional to C,
/// i.e. 1/|Tr C|^2; for the C = rho/sqrt(Tr[rho^2]) construction it equals
/// the purity of rho.
struct WitnessReport {
  double ln_exact = 0.0;
  double ln_approx = 0.0;
  double ln_variation = 0.0;
  double linear_entropy = 0.0;
  double purity_of_c = 0.0;
  double negativity_exact = 0.0;
  double negativity_approx = 0.0;
};

WitnessReport witness_report(const PureState& state);

}  // namespace negwit

#endif
