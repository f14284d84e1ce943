#ifndef NEGWIT_LINALG_HPP
#define NEGWIT_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

namespace negwit {

using Complex = std::complex<double>;

// All bipartite index bookkeeping in this library assumes row-major storage:
// the amplitude c_nm of |n,m> lives at flat index n*d + m.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Relative tolerance for accepting a matrix as Hermitian; inputs inside the
// tolerance are symmetrized as (h + h^dagger)/2 before eigensolving.
inline constexpr double kHermiticityTol = 1e-10;

/// Real eigenvalues of a Hermitian matrix, sorted ascending.
struct Spectrum {
  std::vector<double> values;

  double sum() const;
  double sum_squares() const;
  double min_value() const;
  /// Sum of |lambda| over eigenvalues lambda < -eps.
  double negative_magnitude_sum(double eps) const;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);

/// Re Tr[rho^2] for a square matrix that is Hermitian within tolerance.
double purity(const ComplexMatrix& rho);

/// Eigenvalues of a Hermitian matrix (ascending). The input must satisfy
/// max|h - h^dagger| <= 1e-10 * max|h|; it is symmetrized before solving.
/// The spectrum is validated against the trace and Frobenius norm of the
/// input to 1e-9 relative; a violation raises numeric_error.
Spectrum hermitian_eigenvalues(const ComplexMatrix& h);

struct QrResult {
  ComplexMatrix q;  // unitary
  ComplexMatrix r;  // upper-triangular, strictly positive real diagonal
};

/// QR decomposition made unique by forcing the diagonal of R to be real and
/// strictly positive (q -> q*Lambda, r -> Lambda^-1*r with
/// Lambda_ii = R_ii/|R_ii|). This is the decomposition that turns a Ginibre
/// matrix into a Haar-distributed unitary.
QrResult qr_phase_corrected(const ComplexMatrix& z);

/// Row-major ("stripped by rows") flattening of the bipartite index pair
/// (n, m) with 0 <= n, m < d onto k = n*d + m. Fixed globally; never
/// configurable.
int flatten_index(int n, int m, int d);
std::pair<int, int> unflatten_index(int k, int d);

// Small helpers shared across modules.
double max_abs(const ComplexMatrix& m);
double hermiticity_residual(const ComplexMatrix& m);  // max|m - m^dagger|

}  // namespace negwit

#endif
