#ifndef NEGWIT_MIXED_HPP
#define NEGWIT_MIXED_HPP

#include <vector>

#include "negwit/density.hpp"
#include "negwit/pure.hpp"
#include "negwit/random.hpp"

namespace negwit {

/// Exact Log Negativity of a bipartite mixed state; same partial-transpose
/// oracle as the pure-state path.
LnPair ln_exact_mixed(const DensityMatrix& rho);

/// Mixed-state witness ansatz
/// N_a = (1/2) sum_{n, m!=n} |rho_{nn,mm} - rho_{nm,mn}|.
LnPair ln_approx_mixed(const DensityMatrix& rho);

/// Symmetrized witness
/// N_a = (1/2) sum_{n, m!=n} |(rho_{nn,mm}+rho_{mm,nn})/2
///                            - (rho_{nm,mn}+rho_{mn,nm})/2|.
/// Vanishes on separable mixtures sum_i p_i rho_a^(i) x rho_b^(i) whenever
/// each term has a real rho_a^(i) or rho_b^(i); the canonical mixed witness.
LnPair ln_approx_mixed_sym(const DensityMatrix& rho);

/// Werner state p|Bell><Bell| + (1-p)/d^2 I with bipartite split d.
DensityMatrix werner_state(int d, double p);

/// Closed forms for the d^2-dimensional Werner family.
struct WernerAnalytics {
  int d = 0;
  double p = 0.0;
  double lambda_minus = 0.0;     // (1/d^2)(1 - (d+1) p)
  long multiplicity = 0;         // d(d-1)/2
  double negativity_exact = 0.0; // max(0, (1/2)((d-1)/d)((d+1)p - 1))
  double ln_exact = 0.0;         // 0 for p <= p_star, log2 d at p = 1
  double negativity_approx = 0.0;  // p(d-1)/2
  double ln_approx = 0.0;          // log2(1 + (d-1)p)
  double purity = 0.0;             // (1 + (d^2-1) p^2)/d^2
  double p_star = 0.0;             // 1/(d+1)
  double mu_star = 0.0;            // 2/(d(d+1))
};

WernerAnalytics werner_analytics(int d, double p);

struct SeparableTerm {
  double weight = 0.0;
  DensityMatrix rho_a;
  DensityMatrix rho_b;
};

/// sum_i p_i rho_a^(i) x rho_b^(i); PPT by construction.
DensityMatrix separable_mixture(const std::vector<SeparableTerm>& parts);

/// Six-projector separable decomposition of the two-qubit Werner state,
/// valid for 0 <= p <= 1/3. The y-basis pair has both factors complex, which
/// is exactly the blind spot of the symmetrized witness.
std::vector<SeparableTerm> werner_separable_decomposition(double p);

/// Weighted pure-state decomposition rho = sum_i p_i |psi_i><psi_i|.
struct PsdEnsemble {
  std::vector<double> weights;   // >= 0, sum 1
  std::vector<PureState> states; // all same d
};

/// Ensemble with Weyl-chamber weights over k components and amplitude
/// matrices of the requested class. Stream order: weights first, then the
/// components in index order.
PsdEnsemble psd_sample(int d, int k, AmplitudeClass cls, RngStream& rng);

DensityMatrix psd_to_density(const PsdEnsemble& ensemble);

enum class AvgMeasure {
  Exact,       // per-component pure-state ln_exact
  ApproxPure,  // per-component pure-state ln_approx
};

/// Weighted average of the chosen per-component pure-state measure.
double avg_ln(const PsdEnsemble& ensemble, AvgMeasure measure);

}  // namespace negwit

#endif
