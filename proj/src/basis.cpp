#include "xxz/basis.hpp"

#include <bit>
#include <string>

namespace xxz {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

SectorBasis enumerate_sector_basis(int L, int n_up) {
  if (L < 1 || L > 14)
    throw ParameterError("L must be in [1, 14], got " + std::to_string(L));
  if (n_up < 0 || n_up > L)
    throw ParameterError("n_up must be in [0, L], got " + std::to_string(n_up));

  SectorBasis basis{L, n_up, {}};
  basis.states.reserve(binomial(L, n_up));
  // 2^14 = 16384 configurations at most; a filter scan is already sorted.
  const std::uint32_t top = 1u << L;
  for (std::uint32_t s = 0; s < top; ++s)
    if (std::popcount(s) == n_up) basis.states.push_back(s);
  return basis;
}

}  // namespace xxz
