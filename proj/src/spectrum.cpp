#include "xxz/spectrum.hpp"

#include <limits>
#include <string>

namespace xxz {

std::size_t SpectrumSet::total_dim() const {
  std::size_t n = 0;
  for (const auto& sec : sectors) n += static_cast<std::size_t>(sec.eigenvalues.size());
  return n;
}

SpectrumSet diagonalize(const ChainSpec& spec) {
  validate_chain_spec(spec);

  SpectrumSet out;
  out.spec = spec;
  out.sectors.reserve(spec.L + 1);
  out.e_min = std::numeric_limits<double>::infinity();

  for (int n_up = 0; n_up <= spec.L; ++n_up) {
    const SectorBasis basis = enumerate_sector_basis(spec.L, n_up);
    const OperatorBlock block = build_hamiltonian_block(spec, basis);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block.matrix);
    if (solver.info() != Eigen::Success)
      throw NumericalError("eigensolver failed in sector n_up=" + std::to_string(n_up));

    SectorEigen sec;
    sec.n_up = n_up;
    sec.eigenvalues = solver.eigenvalues();
    sec.eigenvectors = solver.eigenvectors();
    if (sec.eigenvalues(0) < out.e_min) out.e_min = sec.eigenvalues(0);
    out.sectors.push_back(std::move(sec));
  }
  return out;
}

}  // namespace xxz
