#include "negwit/mixed.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <stdexcept>
#include <string>

#include "negwit/errors.hpp"

namespace negwit {

LnPair ln_exact_mixed(const DensityMatrix& rho) { return ln_exact(rho); }

namespace {

LnPair ln_from_negativity(double negativity) {
  return LnPair{negativity, std::log2(1.0 + 2.0 * negativity)};
}

}  // namespace

LnPair ln_approx_mixed(const DensityMatrix& rho) {
  const int d = rho.subsystem_dim();
  const ComplexMatrix& m = rho.matrix;
  double na = 0.0;
  for (int n = 0; n < d; ++n) {
    for (int mm = 0; mm < d; ++mm) {
      if (mm == n) continue;
      na += 0.5 * std::abs(m(n * d + n, mm * d + mm) - m(n * d + mm, mm * d + n));
    }
  }
  return ln_from_negativity(na);
}

LnPair ln_approx_mixed_sym(const DensityMatrix& rho) {
  const int d = rho.subsystem_dim();
  const ComplexMatrix& m = rho.matrix;
  double na = 0.0;
  for (int n = 0; n < d; ++n) {
    for (int mm = 0; mm < d; ++mm) {
      if (mm == n) continue;
      const Complex diag_pair = 0.5 * (m(n * d + n, mm * d + mm) + m(mm * d + mm, n * d + n));
      const Complex off_pair = 0.5 * (m(n * d + mm, mm * d + n) + m(mm * d + n, n * d + mm));
      na += 0.5 * std::abs(diag_pair - off_pair);
    }
  }
  return ln_from_negativity(na);
}

DensityMatrix werner_state(int d, double p) {
  if (d < 2) throw std::invalid_argument("werner_state: d must be >= 2");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("werner_state: p must lie in [0, 1]");
  const int dim = d * d;
  ComplexMatrix m = p * bell_projector(d).matrix;
  m += ((1.0 - p) / dim) * ComplexMatrix::Identity(dim, dim);
  return DensityMatrix{std::move(m), dim, d};
}

WernerAnalytics werner_analytics(int d, double p) {
  if (d < 2) throw std::invalid_argument("werner_analytics: d must be >= 2");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("werner_analytics: p must lie in [0, 1]");
  WernerAnalytics out;
  out.d = d;
  out.p = p;
  const double dd = d;
  out.lambda_minus = (1.0 - (dd + 1.0) * p) / (dd * dd);
  out.multiplicity = static_cast<long>(d) * (d - 1) / 2;
  out.negativity_exact = std::max(0.0, 0.5 * ((dd - 1.0) / dd) * ((dd + 1.0) * p - 1.0));
  out.ln_exact = std::log2(1.0 + 2.0 * out.negativity_exact);
  out.negativity_approx = p * (dd - 1.0) / 2.0;
  out.ln_approx = std::log2(1.0 + (dd - 1.0) * p);
  out.purity = (1.0 + (dd * dd - 1.0) * p * p) / (dd * dd);
  out.p_star = 1.0 / (dd + 1.0);
  out.mu_star = 2.0 / (dd * (dd + 1.0));
  return out;
}

DensityMatrix separable_mixture(const std::vector<SeparableTerm>& parts) {
  if (parts.empty()) throw std::invalid_argument("separable_mixture: empty mixture");
  const int da = parts.front().rho_a.dim;
  const int db = parts.front().rho_b.dim;
  if (da != db) {
    throw std::invalid_argument("separable_mixture: subsystems must have equal dimension");
  }
  double weight_sum = 0.0;
  ComplexMatrix accum = ComplexMatrix::Zero(da * db, da * db);
  for (const SeparableTerm& term : parts) {
    if (term.weight < 0.0) throw std::invalid_argument("separable_mixture: negative weight");
    if (term.rho_a.dim != da || term.rho_b.dim != db) {
      throw std::invalid_argument("separable_mixture: inconsistent subsystem dimensions");
    }
    weight_sum += term.weight;
    accum += term.weight *
             Eigen::kroneckerProduct(term.rho_a.matrix, term.rho_b.matrix).eval();
  }
  if (std::abs(weight_sum - 1.0) > 1e-12) {
    throw std::invalid_argument("separable_mixture: weights must sum to 1");
  }
  return DensityMatrix{std::move(accum), da * db, da};
}

std::vector<SeparableTerm> werner_separable_decomposition(double p) {
  if (p < 0.0 || p > 1.0 / 3.0 + 1e-15) {
    throw std::invalid_argument("werner_separable_decomposition: valid only for 0 <= p <= 1/3");
  }
  auto qubit = [](Complex a, Complex b) {
    ComplexVector v(2);
    v << a, b;
    v /= v.norm();
    ComplexMatrix m = v * v.adjoint();
    return DensityMatrix{std::move(m), 2, std::nullopt};
  };
  const DensityMatrix zero = qubit(1.0, 0.0);
  const DensityMatrix one = qubit(0.0, 1.0);
  const DensityMatrix plus = qubit(1.0, 1.0);
  const DensityMatrix minus = qubit(1.0, -1.0);
  const DensityMatrix y_plus = qubit(1.0, Complex(0.0, 1.0));
  const DensityMatrix y_minus = qubit(1.0, Complex(0.0, -1.0));
  const DensityMatrix mixed = maximally_mixed(2);

  // z and x pairs are correlated, the y pair anticorrelated; this is what
  // reproduces p(XX - YY + ZZ) of the Bell projector.
  std::vector<SeparableTerm> parts;
  parts.push_back({1.0 - 3.0 * p, mixed, mixed});
  parts.push_back({p / 2.0, zero, zero});
  parts.push_back({p / 2.0, one, one});
  parts.push_back({p / 2.0, plus, plus});
  parts.push_back({p / 2.0, minus, minus});
  parts.push_back({p / 2.0, y_plus, y_minus});
  parts.push_back({p / 2.0, y_minus, y_plus});
  return parts;
}

PsdEnsemble psd_sample(int d, int k, AmplitudeClass cls, RngStream& rng) {
  if (k < 1) throw std::invalid_argument("psd_sample: k must be >= 1");
  PsdEnsemble ensemble;
  ensemble.weights = weyl_diagonal(k, rng);
  ensemble.states.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    ensemble.states.push_back(make_pure(sample_amplitudes(cls, d, rng)));
  }
  return ensemble;
}

DensityMatrix psd_to_density(const PsdEnsemble& ensemble) {
  if (ensemble.states.empty() || ensemble.weights.size() != ensemble.states.size()) {
    throw std::invalid_argument("psd_to_density: malformed ensemble");
  }
  const int d = ensemble.states.front().d;
  ComplexMatrix accum = ComplexMatrix::Zero(d * d, d * d);
  for (std::size_t i = 0; i < ensemble.states.size(); ++i) {
    if (ensemble.states[i].d != d) {
      throw std::invalid_argument("psd_to_density: components have mixed dimensions");
    }
    accum += ensemble.weights[i] * pure_density(ensemble.states[i]).matrix;
  }
  return DensityMatrix{std::move(accum), d * d, d};
}

double avg_ln(const PsdEnsemble& ensemble, AvgMeasure measure) {
  if (ensemble.states.empty() || ensemble.weights.size() != ensemble.states.size()) {
    throw std::invalid_argument("avg_ln: malformed ensemble");
  }
  double out = 0.0;
  for (std::size_t i = 0; i < ensemble.states.size(); ++i) {
    const double value = measure == AvgMeasure::Exact ? ln_exact(ensemble.states[i]).ln
                                                      : ln_approx(ensemble.states[i]).ln;
    out += ensemble.weights[i] * value;
  }
  return out;
}

}  // namespace negwit
