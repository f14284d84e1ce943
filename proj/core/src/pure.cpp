#include "negwit/pure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "negwit/errors.hpp"

namespace negwit {

PureState make_pure(const ComplexMatrix& raw) {
  if (raw.rows() == 0 || raw.rows() != raw.cols()) {
    throw std::invalid_argument("make_pure: amplitude matrix must be square and nonempty");
  }
  const double norm = raw.norm();  // sqrt(Tr[raw raw^dagger])
  if (norm < 1e-150) {
    throw std::invalid_argument("make_pure: amplitude matrix is zero");
  }
  return PureState{static_cast<int>(raw.rows()), raw / norm};
}

PureState diagonal_state(const std::vector<Complex>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("diagonal_state: empty coefficient vector");
  const int d = static_cast<int>(coeffs.size());
  ComplexMatrix c = ComplexMatrix::Zero(d, d);
  for (int n = 0; n < d; ++n) c(n, n) = coeffs[static_cast<std::size_t>(n)];
  return make_pure(c);
}

PureState nmmn_superposition(int d, const std::map<std::pair<int, int>, Complex>& coeffs) {
  if (d < 2) throw std::invalid_argument("nmmn_superposition: d must be >= 2");
  if (coeffs.empty()) throw std::invalid_argument("nmmn_superposition: empty coefficient map");
  ComplexMatrix c = ComplexMatrix::Zero(d, d);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (const auto& [key, value] : coeffs) {
    const auto [n, m] = key;
    if (n == m) throw std::invalid_argument("nmmn_superposition: keys require n != m");
    if (n < 0 || n >= d || m < 0 || m >= d) {
      throw std::invalid_argument("nmmn_superposition: index out of range");
    }
    c(n, m) += value * inv_sqrt2;
    c(m, n) += value * inv_sqrt2;
  }
  return make_pure(c);  // throws on an all-cancelling map
}

std::vector<Complex> coherent_coeffs(Complex beta, int M) {
  if (M < 0) throw std::invalid_argument("coherent_coeffs: M must be >= 0");
  const double lambda = std::norm(beta);  // |beta|^2

  // Poisson(|beta|^2) mass retained by the truncation n <= M.
  double pmf = std::exp(-lambda);
  double retained = pmf;
  for (int n = 1; n <= M; ++n) {
    pmf *= lambda / n;
    retained += pmf;
  }
  if (1.0 - retained > 0.01) {
    throw std::invalid_argument("coherent_coeffs: tail mass beyond M exceeds 0.01; raise M");
  }

  std::vector<Complex> c(static_cast<std::size_t>(M) + 1);
  c[0] = Complex(std::exp(-lambda / 2.0), 0.0);
  for (int n = 1; n <= M; ++n) {
    c[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(n) - 1] * beta / std::sqrt(double(n));
  }
  double norm2 = 0.0;
  for (const Complex& v : c) norm2 += std::norm(v);
  const double inv_norm = 1.0 / std::sqrt(norm2);
  for (Complex& v : c) v *= inv_norm;
  return c;
}

PureState symmetric_product_superposition(const ComplexVector& psi, const ComplexVector& phi) {
  if (psi.size() == 0 || psi.size() != phi.size()) {
    throw std::invalid_argument("symmetric_product_superposition: vectors must have equal nonzero length");
  }
  if (std::abs(psi.norm() - 1.0) > 1e-10 || std::abs(phi.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("symmetric_product_superposition: inputs must be unit vectors");
  }
  const int d = static_cast<int>(psi.size());
  const Complex overlap = psi.dot(phi);  // <psi|phi>
  const double nfac = 1.0 / std::sqrt(1.0 + std::norm(overlap));
  ComplexMatrix c(d, d);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int n = 0; n < d; ++n) {
    for (int m = 0; m < d; ++m) {
      c(n, m) = nfac * inv_sqrt2 * (psi(n) * phi(m) + phi(n) * psi(m));
    }
  }
  return make_pure(c);
}

DensityMatrix pure_density(const PureState& state) {
  const int d = state.d;
  const Eigen::Map<const ComplexVector> v(state.amplitudes.data(), d * d);
  ComplexMatrix rho = v * v.adjoint();
  return DensityMatrix{std::move(rho), d * d, d};
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, int d) {
  if (d < 1 || rho.rows() != rho.cols() || rho.rows() != Eigen::Index(d) * d) {
    throw std::invalid_argument("partial_transpose: dimension is not the square of d");
  }
  ComplexMatrix out(rho.rows(), rho.cols());
  for (int n = 0; n < d; ++n) {
    for (int m = 0; m < d; ++m) {
      for (int np = 0; np < d; ++np) {
        for (int mp = 0; mp < d; ++mp) {
          out(n * d + m, np * d + mp) = rho(n * d + mp, np * d + m);
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho) {
  return partial_transpose(rho.matrix, rho.subsystem_dim());
}

namespace {

LnPair ln_from_negativity(double negativity) {
  return LnPair{negativity, std::log2(1.0 + 2.0 * negativity)};
}

}  // namespace

LnPair ln_exact(const DensityMatrix& rho) {
  const ComplexMatrix pt = partial_transpose(rho);
  const Spectrum spectrum = hermitian_eigenvalues(pt);
  return ln_from_negativity(spectrum.negative_magnitude_sum(kNegativeEigenvalueEps));
}

LnPair ln_exact(const PureState& state) { return ln_exact(pure_density(state)); }

NegativityComponents negativity_components(const PureState& state) {
  const ComplexMatrix& c = state.amplitudes;
  const int d = state.d;
  NegativityComponents out;
  for (int n = 0; n < d; ++n) {
    for (int m = 0; m < d; ++m) {
      if (m == n) continue;
      out.n1 += 0.5 * std::abs(c(n, n) * c(m, m));
      out.n2 += 0.5 * std::abs(c(n, m) * c(m, n));
    }
  }
  return out;
}

LnPair ln_approx(const PureState& state) {
  const ComplexMatrix& c = state.amplitudes;
  const int d = state.d;
  double na = 0.0;
  for (int n = 0; n < d; ++n) {
    for (int m = 0; m < d; ++m) {
      if (m == n) continue;
      na += 0.5 * std::abs(c(n, n) * c(m, m) - c(n, m) * c(m, n));
    }
  }
  return ln_from_negativity(na);
}

double ln_variation(const PureState& state) {
  const ComplexMatrix& c = state.amplitudes;
  const Complex tr = c.trace();
  const double frob2 = c.squaredNorm();  // Tr[C C^dagger]
  return std::log2(1.0 + std::abs(tr * std::conj(tr) - Complex(frob2, 0.0)));
}

SchmidtSpectrum schmidt_spectrum(const PureState& state) {
  const ComplexMatrix reduced = state.amplitudes * state.amplitudes.adjoint();
  Spectrum spectrum = hermitian_eigenvalues(reduced);
  SchmidtSpectrum out;
  out.sigmas.assign(spectrum.values.rbegin(), spectrum.values.rend());
  for (double& sigma : out.sigmas) {
    if (sigma < 0.0) {
      if (sigma < -1e-12) {
        throw numeric_error("schmidt_spectrum: eigenvalue below -1e-12");
      }
      sigma = 0.0;
    }
  }
  return out;
}

double ln_schmidt(const PureState& state) {
  const SchmidtSpectrum spectrum = schmidt_spectrum(state);
  double root_sum = 0.0;
  for (double sigma : spectrum.sigmas) root_sum += std::sqrt(sigma);
  return std::log2(root_sum * root_sum);
}

double linear_entropy(const PureState& state) {
  const ComplexMatrix reduced = state.amplitudes * state.amplitudes.adjoint();
  return 1.0 - (reduced * reduced).trace().real();
}

TwoQubitPtSpectrum two_qubit_pt_spectrum(const PureState& state) {
  if (state.d != 2) throw std::invalid_argument("two_qubit_pt_spectrum: requires d = 2");
  const ComplexMatrix& c = state.amplitudes;
  const double lambda1 = std::abs(c(0, 0) * c(1, 1) - c(0, 1) * c(1, 0));
  const double radicand = std::max(0.0, 1.0 - 4.0 * lambda1 * lambda1);
  const double root = std::sqrt(radicand);
  return TwoQubitPtSpectrum{lambda1, -lambda1, 0.5 * (1.0 + root), 0.5 * (1.0 - root)};
}

WitnessReport witness_report(const PureState& state) {
  WitnessReport report;
  const LnPair exact = ln_exact(state);
  const LnPair approx = ln_approx(state);
  report.ln_exact = exact.ln;
  report.negativity_exact = exact.negativity;
  report.ln_approx = approx.ln;
  report.negativity_approx = approx.negativity;
  report.ln_variation = ln_variation(state);
  report.linear_entropy = linear_entropy(state);
  const double tr2 = std::norm(state.amplitudes.trace());
  report.purity_of_c = tr2 > 0.0 ? 1.0 / tr2 : std::numeric_limits<double>::infinity();
  return report;
}

}  // namespace negwit
