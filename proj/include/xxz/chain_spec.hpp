#pragma once

#include <string>
#include <utility>
#include <vector>

#include "xxz/errors.hpp"

namespace xxz {

enum class Boundary { periodic, open };

const char* boundary_name(Boundary bc);
Boundary boundary_from_name(const std::string& name);

// Finite spin-1/2 XXZ chain,
//   H = J * sum_bonds [ sx_j sx_k + sy_j sy_k + delta * sz_j sz_k ]
// with sx/sy/sz the Pauli matrices and the bond list fixed by `bc`.
// Sites are numbered 1..L; site j lives on bit j-1 of a basis configuration.
struct ChainSpec {
  int L = 0;
  double J = 1.0;
  double delta = 1.0;
  Boundary bc = Boundary::periodic;
};

// Throws ParameterError (naming the offending field) unless:
//   2 <= L <= 14, J finite and nonzero, delta finite,
//   and not (L == 2 with periodic bc) -- the two "distinct" bonds of a
//   periodic 2-site ring coincide, which would double-count the coupling.
void validate_chain_spec(const ChainSpec& spec);

// 0-based site pairs (j, k) coupled by H.  Periodic: (0,1)..(L-2,L-1),(L-1,0).
// Open: the wrap-around bond is dropped.
std::vector<std::pair<int, int>> bonds_of(const ChainSpec& spec);

}  // namespace xxz
