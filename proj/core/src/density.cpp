#include "negwit/density.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "negwit/errors.hpp"

namespace negwit {

DensityMatrix DensityMatrix::create(ComplexMatrix matrix, std::optional<int> split,
                                    bool check_psd) {
  if (matrix.rows() == 0 || matrix.rows() != matrix.cols()) {
    throw std::invalid_argument("DensityMatrix: matrix must be square and nonempty");
  }
  const int dim = static_cast<int>(matrix.rows());
  if (split && (*split < 1 || *split * *split != dim)) {
    throw std::invalid_argument("DensityMatrix: split " + std::to_string(*split) +
                                " does not square to dimension " + std::to_string(dim));
  }
  if (hermiticity_residual(matrix) > kHermiticityTol * std::max(max_abs(matrix), 1e-300)) {
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian within tolerance");
  }
  const Complex tr = matrix.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > 1e-10) {
    throw std::invalid_argument("DensityMatrix: trace deviates from 1 beyond tolerance");
  }
  if (check_psd) {
    const Spectrum spec = hermitian_eigenvalues(matrix);
    if (spec.min_value() < -1e-9) {
      throw std::invalid_argument("DensityMatrix: matrix has an eigenvalue below -1e-9");
    }
  }
  return DensityMatrix{std::move(matrix), dim, split};
}

int DensityMatrix::subsystem_dim() const {
  if (!split) {
    throw std::invalid_argument("DensityMatrix: bipartite split is not set");
  }
  return *split;
}

double purity(const DensityMatrix& rho) { return purity(rho.matrix); }

DensityMatrix bell_projector(int d) {
  if (d < 1) throw std::invalid_argument("bell_projector: d must be >= 1");
  const int dim = d * d;
  ComplexVector v = ComplexVector::Zero(dim);
  for (int n = 0; n < d; ++n) v(flatten_index(n, n, d)) = Complex(1.0 / std::sqrt(double(d)), 0.0);
  ComplexMatrix m = v * v.adjoint();
  return DensityMatrix{std::move(m), dim, d};
}

DensityMatrix maximally_mixed(int dim, std::optional<int> split) {
  if (dim < 1) throw std::invalid_argument("maximally_mixed: dim must be >= 1");
  ComplexMatrix m = ComplexMatrix::Identity(dim, dim) / double(dim);
  DensityMatrix rho{std::move(m), dim, split};
  if (split && (*split) * (*split) != dim) {
    throw std::invalid_argument("maximally_mixed: split does not square to dim");
  }
  return rho;
}

}  // namespace negwit
