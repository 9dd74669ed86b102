#pragma once

#include <Eigen/Dense>
#include <vector>

#include "xxz/chain_spec.hpp"
#include "xxz/operators.hpp"

namespace xxz {

// Eigen-decomposition of one sector block.  Eigenvalues ascending,
// eigenvectors as orthonormal columns aligned with them.
struct SectorEigen {
  int n_up = 0;
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
};

// Full sector-resolved spectrum of a chain: one entry per n_up = 0..L.
struct SpectrumSet {
  ChainSpec spec;
  std::vector<SectorEigen> sectors;
  double e_min = 0.0;  // global ground energy over all sectors

  std::size_t total_dim() const;  // = 2^L
};

// Diagonalizes every sector of the chain.  Deterministic for identical
// input; throws NumericalError if the eigensolver fails to converge.
SpectrumSet diagonalize(const ChainSpec& spec);

}  // namespace xxz
