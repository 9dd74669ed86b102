#include "xxz/operators.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace xxz {

namespace {

// Position of each configuration inside the sector basis, or -1.
std::vector<std::int32_t> index_table(const SectorBasis& basis) {
  std::vector<std::int32_t> pos(std::size_t{1} << basis.L, -1);
  for (int i = 0; i < basis.dim(); ++i) pos[basis.states[i]] = i;
  return pos;
}

void check_basis(const ChainSpec& spec, const SectorBasis& basis) {
  if (basis.L != spec.L)
    throw ParameterError("basis is for L=" + std::to_string(basis.L) +
                         ", chain has L=" + std::to_string(spec.L));
}

inline int spin_at(std::uint32_t s, int site) { return (s >> site) & 1u ? 1 : -1; }

}  // namespace

OperatorBlock build_hamiltonian_block(const ChainSpec& spec, const SectorBasis& basis) {
  validate_chain_spec(spec);
  check_basis(spec, basis);

  const auto bonds = bonds_of(spec);
  const auto pos = index_table(basis);
  const int dim = basis.dim();

  OperatorBlock block{basis.n_up, Eigen::MatrixXd::Zero(dim, dim)};
  for (int a = 0; a < dim; ++a) {
    const std::uint32_t s = basis.states[a];
    double align = 0.0;
    for (const auto& [j, k] : bonds) {
      const int sj = spin_at(s, j);
      const int sk = spin_at(s, k);
      align += sj * sk;
      if (sj != sk) {
        // sx sx + sy sy exchanges the anti-aligned pair with amplitude 2.
        const std::uint32_t t = s ^ ((1u << j) | (1u << k));
        block.matrix(a, pos[t]) += 2.0 * spec.J;
      }
    }
    block.matrix(a, a) = spec.J * spec.delta * align;
  }
  return block;
}

CorrelatorBlocks build_correlator_blocks(const ChainSpec& spec, const SectorBasis& basis,
                                         int first_site) {
  validate_chain_spec(spec);
  check_basis(spec, basis);
  const int last = spec.bc == Boundary::periodic ? spec.L - 1 : spec.L - 2;
  if (first_site < 0 || first_site > last)
    throw ParameterError("no bond starts at site index " + std::to_string(first_site));

  const int a_site = first_site;
  const int b_site = (first_site + 1) % spec.L;
  const auto pos = index_table(basis);
  const int dim = basis.dim();

  CorrelatorBlocks blocks{{basis.n_up, Eigen::MatrixXd::Zero(dim, dim)},
                          {basis.n_up, Eigen::MatrixXd::Zero(dim, dim)}};
  for (int a = 0; a < dim; ++a) {
    const std::uint32_t s = basis.states[a];
    const int sa = spin_at(s, a_site);
    const int sb = spin_at(s, b_site);
    blocks.zz.matrix(a, a) = sa * sb;
    if (sa != sb) {
      const std::uint32_t t = s ^ ((1u << a_site) | (1u << b_site));
      blocks.xx.matrix(a, pos[t]) = 1.0;
    }
  }
  return blocks;
}

}  // namespace xxz
