#pragma once

#include <Eigen/Dense>

#include "xxz/basis.hpp"
#include "xxz/chain_spec.hpp"

namespace xxz {

// Dense matrix of an operator restricted to one magnetization sector.
// All operators used here commute with total Sz, so blocks never mix sectors.
struct OperatorBlock {
  int n_up = 0;
  Eigen::MatrixXd matrix;
};

// H restricted to `basis`:
//   diagonal      J * delta * sum_bonds s_j s_k          (s = +/-1 from bits)
//   off-diagonal  2 * J between configurations that differ by exchanging an
//                 up/down pair across one bond (the sx sx + sy sy flip-flop).
// The result is exactly symmetric.
OperatorBlock build_hamiltonian_block(const ChainSpec& spec, const SectorBasis& basis);

struct CorrelatorBlocks {
  OperatorBlock zz;  // sz_a sz_b: diagonal, entries s_a * s_b
  OperatorBlock xx;  // sx_a sx_b restricted to the sector: the pair-exchange
                     // part only, entry 1; the Sz-changing part of sx sx has
                     // no matrix elements inside a fixed-Sz sector.
};

// Correlator blocks for the bond starting at 0-based site `first_site`
// (default: the (1,2) bond).  The partner is first_site+1, wrapping around
// only for periodic chains.
CorrelatorBlocks build_correlator_blocks(const ChainSpec& spec, const SectorBasis& basis,
                                         int first_site = 0);

}  // namespace xxz
