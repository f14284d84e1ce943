#include "negwit/random.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "negwit/errors.hpp"

namespace negwit {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

std::string_view to_string(AmplitudeClass c) {
  switch (c) {
    case AmplitudeClass::PositiveHermitian: return "positive-hermitian";
    case AmplitudeClass::Hermitian: return "hermitian";
    case AmplitudeClass::NormalComplexDiag: return "normal-complex-diag";
    case AmplitudeClass::ArbitraryComplex: return "arbitrary-complex";
    case AmplitudeClass::RealSymmetricPositive: return "real-symmetric-positive";
  }
  throw std::invalid_argument("to_string: unknown amplitude class");
}

AmplitudeClass amplitude_class_from_string(std::string_view tag) {
  if (tag == "positive-hermitian") return AmplitudeClass::PositiveHermitian;
  if (tag == "hermitian") return AmplitudeClass::Hermitian;
  if (tag == "normal-complex-diag") return AmplitudeClass::NormalComplexDiag;
  if (tag == "arbitrary-complex") return AmplitudeClass::ArbitraryComplex;
  if (tag == "real-symmetric-positive") return AmplitudeClass::RealSymmetricPositive;
  throw std::invalid_argument("unknown amplitude class tag: " + std::string(tag));
}

ComplexMatrix ginibre(int d, RngStream& rng) {
  if (d < 1) throw std::invalid_argument("ginibre: d must be >= 1");
  ComplexMatrix z(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      z(i, j) = Complex(re * kInvSqrt2, im * kInvSqrt2);
    }
  }
  return z;
}

ComplexMatrix ginibre_real(int d, RngStream& rng) {
  if (d < 1) throw std::invalid_argument("ginibre_real: d must be >= 1");
  ComplexMatrix z(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      z(i, j) = Complex(rng.normal(), 0.0);
    }
  }
  return z;
}

namespace {

ComplexMatrix haar_from(ComplexMatrix (*sampler)(int, RngStream&), int d, RngStream& rng,
                        const char* what) {
  for (int attempt = 0; attempt < 3; ++attempt) {
    try {
      return qr_phase_corrected(sampler(d, rng)).q;
    } catch (const std::invalid_argument&) {
      // rank-deficient draw (probability ~0); resample
    }
  }
  throw numeric_error(std::string(what) + ": rank-deficient Ginibre draw three times in a row");
}

}  // namespace

ComplexMatrix haar_unitary(int d, RngStream& rng) {
  return haar_from(&ginibre, d, rng, "haar_unitary");
}

ComplexMatrix haar_orthogonal(int d, RngStream& rng) {
  ComplexMatrix q = haar_from(&ginibre_real, d, rng, "haar_orthogonal");
  q.imag().setZero();  // phases are +-1 for a real input; drop rounding dust
  return q;
}

std::vector<double> weyl_diagonal(int d, RngStream& rng) {
  const ComplexMatrix u = haar_unitary(d, rng);
  const auto row = static_cast<Eigen::Index>(rng.uniform_index(static_cast<std::uint64_t>(d)));
  std::vector<double> w(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) w[static_cast<std::size_t>(j)] = std::norm(u(row, j));
  return w;
}

DensityMatrix random_density_matrix(int d, RngStream& rng) {
  const std::vector<double> w = weyl_diagonal(d, rng);
  const ComplexMatrix u = haar_unitary(d, rng);
  ComplexMatrix rho = ComplexMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) rho += w[static_cast<std::size_t>(j)] * (u.col(j) * u.col(j).adjoint());
  rho = ((rho + rho.adjoint()) / 2.0).eval();  // zero the FMA dust on the diagonal
  return DensityMatrix::create(std::move(rho));
}

ComplexMatrix sample_amplitudes(AmplitudeClass c, int d, RngStream& rng) {
  if (d < 1) throw std::invalid_argument("sample_amplitudes: d must be >= 1");
  switch (c) {
    case AmplitudeClass::PositiveHermitian: {
      return random_density_matrix(d, rng).matrix;
    }
    case AmplitudeClass::Hermitian: {
      const ComplexMatrix z = ginibre(d, rng);
      return (z + z.adjoint()) / 2.0;
    }
    case AmplitudeClass::NormalComplexDiag: {
      const ComplexMatrix uprime = haar_unitary(d, rng);
      const auto row = static_cast<Eigen::Index>(rng.uniform_index(static_cast<std::uint64_t>(d)));
      const ComplexMatrix u = haar_unitary(d, rng);
      ComplexMatrix out = ComplexMatrix::Zero(d, d);
      for (int j = 0; j < d; ++j) out += uprime(row, j) * (u.col(j) * u.col(j).adjoint());
      return out;
    }
    case AmplitudeClass::ArbitraryComplex: {
      return ginibre(d, rng);
    }
    case AmplitudeClass::RealSymmetricPositive: {
      // Same Weyl-chamber construction as the positive Hermitian class, with
      // the unitary replaced by a Haar orthogonal.
      const ComplexMatrix uprime = haar_unitary(d, rng);
      const auto row = static_cast<Eigen::Index>(rng.uniform_index(static_cast<std::uint64_t>(d)));
      const ComplexMatrix o = haar_orthogonal(d, rng);
      ComplexMatrix out = ComplexMatrix::Zero(d, d);
      for (int j = 0; j < d; ++j) {
        out += std::norm(uprime(row, j)) * (o.col(j) * o.col(j).transpose());
      }
      return out;
    }
  }
  throw std::invalid_argument("sample_amplitudes: unknown amplitude class");
}

double amplitude_class_residual(AmplitudeClass c, const ComplexMatrix& m) {
  switch (c) {
    case AmplitudeClass::PositiveHermitian: {
      const double herm = hermiticity_residual(m);
      const double neg = -std::min(0.0, hermitian_eigenvalues(m).min_value());
      return std::max(herm, neg);
    }
    case AmplitudeClass::Hermitian:
      return hermiticity_residual(m);
    case AmplitudeClass::NormalComplexDiag: {
      // Normality: [C, C^dagger] = 0.
      return max_abs(ComplexMatrix(m * m.adjoint() - m.adjoint() * m));
    }
    case AmplitudeClass::ArbitraryComplex:
      return 0.0;
    case AmplitudeClass::RealSymmetricPositive: {
      const double imag = m.imag().cwiseAbs().maxCoeff();
      const double symm = max_abs(ComplexMatrix(m - m.transpose()));
      const double neg = -std::min(0.0, hermitian_eigenvalues(m).min_value());
      return std::max({imag, symm, neg});
    }
  }
  throw std::invalid_argument("amplitude_class_residual: unknown amplitude class");
}

DensityMatrix purity_targeted_density(const DensityMatrix& base, double eta, RngStream& rng) {
  if (eta < 0.0) throw std::invalid_argument("purity_targeted_density: eta must be >= 0");
  if (eta == 0.0) return base;
  ComplexMatrix accum = base.matrix + eta * random_density_matrix(base.dim, rng).matrix;
  accum /= accum.trace().real();
  return DensityMatrix{std::move(accum), base.dim, base.split};
}

ComplexMatrix purity_targeted_amplitudes(const ComplexMatrix& base, double eta, RngStream& rng) {
  if (eta < 0.0) throw std::invalid_argument("purity_targeted_amplitudes: eta must be >= 0");
  if (base.rows() == 0 || base.rows() != base.cols()) {
    throw std::invalid_argument("purity_targeted_amplitudes: base must be square");
  }
  if (hermiticity_residual(base) > kHermiticityTol * std::max(max_abs(base), 1e-300)) {
    throw std::invalid_argument("purity_targeted_amplitudes: base must be Hermitian");
  }
  const int d = static_cast<int>(base.rows());
  const double base_norm = base.norm();
  if (base_norm < 1e-150) {
    throw std::invalid_argument("purity_targeted_amplitudes: base is zero");
  }
  ComplexMatrix rho = base / base_norm;  // sqrt(Tr[base^2]) = Frobenius norm for Hermitian base
  if (eta > 0.0) {
    rho += eta * random_density_matrix(d, rng).matrix;
  }
  const double rho_norm = rho.norm();
  if (rho_norm < 1e-150) {
    throw numeric_error("purity_targeted_amplitudes: deviation cancelled the base to zero");
  }
  return rho / rho_norm;
}

std::vector<HistogramBin> histogram(const std::vector<double>& values, int bins, double lo,
                                    double hi) {
  if (bins < 1) throw std::invalid_argument("histogram: bins must be >= 1");
  if (!(lo < hi)) throw std::invalid_argument("histogram: requires lo < hi");
  const double width = (hi - lo) / bins;
  std::vector<HistogramBin> out(static_cast<std::size_t>(bins));
  for (int k = 0; k < bins; ++k) out[static_cast<std::size_t>(k)].center = lo + (k + 0.5) * width;

  for (double x : values) {
    if (x < lo || x > hi) continue;
    int k = static_cast<int>(std::floor((x - lo) / width));
    k = std::min(std::max(k, 0), bins - 1);
    // Pin to the half-open boundary semantics regardless of rounding in the
    // division above.
    while (k > 0 && x < lo + k * width) --k;
    while (k + 1 < bins && x >= lo + (k + 1) * width) ++k;
    ++out[static_cast<std::size_t>(k)].count;
  }
  return out;
}

}  // namespace negwit
