#include "negwit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "negwit/errors.hpp"

namespace negwit {

namespace {

void require_square(const ComplexMatrix& a, const char* op) {
  if (a.rows() == 0 || a.rows() != a.cols()) {
    throw std::invalid_argument(std::string(op) + ": matrix must be square and nonempty, got " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

}  // namespace

double Spectrum::sum() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

double Spectrum::sum_squares() const {
  double s = 0.0;
  for (double v : values) s += v * v;
  return s;
}

double Spectrum::min_value() const {
  return values.empty() ? 0.0 : *std::min_element(values.begin(), values.end());
}

double Spectrum::negative_magnitude_sum(double eps) const {
  double s = 0.0;
  for (double v : values) {
    if (v < -eps) s -= v;
  }
  return s;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: dimension mismatch, " + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()));
  }
  return a * b;
}

ComplexMatrix dagger(const ComplexMatrix& a) { return a.adjoint(); }

Complex trace(const ComplexMatrix& a) {
  require_square(a, "trace");
  return a.trace();
}

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double hermiticity_residual(const ComplexMatrix& m) {
  return max_abs(ComplexMatrix(m - m.adjoint()));
}

double purity(const ComplexMatrix& rho) {
  require_square(rho, "purity");
  if (hermiticity_residual(rho) > kHermiticityTol * std::max(max_abs(rho), 1e-300)) {
    throw std::invalid_argument("purity: input is not Hermitian within tolerance");
  }
  return (rho * rho).trace().real();
}

Spectrum hermitian_eigenvalues(const ComplexMatrix& h) {
  require_square(h, "hermitian_eigenvalues");
  const double scale = std::max(max_abs(h), 1e-300);
  if (hermiticity_residual(h) > kHermiticityTol * scale) {
    throw std::invalid_argument("hermitian_eigenvalues: input is not Hermitian within tolerance");
  }
  const ComplexMatrix sym = (h + h.adjoint()) / 2.0;

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw numeric_error("hermitian_eigenvalues: eigensolver failed to converge");
  }

  Spectrum spectrum;
  spectrum.values.assign(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(spectrum.values.begin(), spectrum.values.end());

  // Characteristic-invariant residuals: the spectrum must reproduce the trace
  // and the squared Frobenius norm of the (symmetrized) input.
  const double tr = sym.trace().real();
  if (std::abs(spectrum.sum() - tr) > 1e-9 * std::max(1.0, std::abs(tr))) {
    throw numeric_error("hermitian_eigenvalues: trace residual exceeds tolerance");
  }
  const double fro2 = sym.squaredNorm();
  if (std::abs(spectrum.sum_squares() - fro2) > 1e-9 * std::max(1.0, fro2)) {
    throw numeric_error("hermitian_eigenvalues: Frobenius residual exceeds tolerance");
  }
  return spectrum;
}

QrResult qr_phase_corrected(const ComplexMatrix& z) {
  require_square(z, "qr_phase_corrected");
  const Eigen::Index d = z.rows();

  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();

  const double znorm = std::max(z.norm(), 1e-300);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double mag = std::abs(r(i, i));
    if (mag <= 1e-12 * znorm) {
      throw std::invalid_argument("qr_phase_corrected: input is numerically rank deficient");
    }
    const Complex phase = r(i, i) / mag;
    q.col(i) *= phase;
    r.row(i) *= std::conj(phase);
    r(i, i) = Complex(mag, 0.0);  // exact: real, strictly positive
  }
  return {std::move(q), std::move(r)};
}

int flatten_index(int n, int m, int d) {
  if (d < 1 || n < 0 || n >= d || m < 0 || m >= d) {
    throw std::out_of_range("flatten_index: indices out of range");
  }
  return n * d + m;
}

std::pair<int, int> unflatten_index(int k, int d) {
  if (d < 1 || k < 0 || k >= d * d) {
    throw std::out_of_range("unflatten_index: index out of range");
  }
  return {k / d, k % d};
}

}  // namespace negwit
