#pragma once

#include <cstdint>
#include <vector>

#include "xxz/errors.hpp"

namespace xxz {

// Basis of one magnetization sector: all L-bit configurations with exactly
// n_up set bits, sorted ascending as integers.  Bit j-1 holds site j
// (1 = up, sz eigenvalue +1; 0 = down, -1).
struct SectorBasis {
  int L = 0;
  int n_up = 0;
  std::vector<std::uint32_t> states;

  int dim() const { return static_cast<int>(states.size()); }
};

// Throws ParameterError unless 1 <= L <= 14 and 0 <= n_up <= L.
SectorBasis enumerate_sector_basis(int L, int n_up);

// C(n, k) for the small arguments used here (exact in 64 bits).
std::uint64_t binomial(int n, int k);

}  // namespace xxz
