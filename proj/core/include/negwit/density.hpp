#ifndef NEGWIT_DENSITY_HPP
#define NEGWIT_DENSITY_HPP

#include <optional>

#include "negwit/linalg.hpp"

namespace negwit {

/// D x D Hermitian, unit-trace, positive-semidefinite matrix. When the state
/// is bipartite, `split` holds the subsystem dimension d with D = d*d and
/// matrix indices flattened row-major ((n,m) -> n*d + m).
struct DensityMatrix {
  ComplexMatrix matrix;
  int dim = 0;
  std::optional<int> split;

  /// Validates Hermiticity (1e-10 relative) and unit trace (1e-10). The PSD
  /// check costs an eigensolve and is opt-in: construction paths in this
  /// library produce PSD matrices structurally, so only paths assembling a
  /// matrix from unconstrained data should pass check_psd = true.
  static DensityMatrix create(ComplexMatrix matrix, std::optional<int> split = std::nullopt,
                              bool check_psd = false);

  int subsystem_dim() const;  // throws if no bipartite split is set
};

double purity(const DensityMatrix& rho);

/// Projector onto the d-dimensional maximally entangled state
/// (1/sqrt(d)) sum_n |nn>; a d^2 x d^2 density matrix with split d.
DensityMatrix bell_projector(int d);

/// Maximally mixed state I/D, optionally tagged with a bipartite split.
DensityMatrix maximally_mixed(int dim, std::optional<int> split = std::nullopt);

}  // namespace negwit

#endif
