#include <doctest.h>

#include <bit>

#include "xxz/basis.hpp"

using namespace xxz;

TEST_CASE("sector dimensions are binomial coefficients") {
  CHECK(enumerate_sector_basis(2, 1).dim() == 2);
  CHECK(enumerate_sector_basis(4, 2).dim() == 6);
  CHECK(enumerate_sector_basis(10, 5).dim() == 252);
  CHECK(enumerate_sector_basis(14, 7).dim() == 3432);
  CHECK(enumerate_sector_basis(5, 0).dim() == 1);
  CHECK(enumerate_sector_basis(5, 5).dim() == 1);
}

TEST_CASE("sectors partition the full configuration space") {
  const int L = 6;
  std::size_t total = 0;
  for (int n_up = 0; n_up <= L; ++n_up) {
    const SectorBasis basis = enumerate_sector_basis(L, n_up);
    CHECK(basis.dim() == static_cast<int>(binomial(L, n_up)));
    total += basis.states.size();
  }
  CHECK(total == std::size_t{1} << L);
}

TEST_CASE("states are sorted and carry the right bit count") {
  const SectorBasis basis = enumerate_sector_basis(7, 3);
  for (std::size_t i = 0; i < basis.states.size(); ++i) {
    CHECK(std::popcount(basis.states[i]) == 3);
    CHECK(basis.states[i] < (1u << 7));
    if (i > 0) CHECK(basis.states[i - 1] < basis.states[i]);
  }
}

TEST_CASE("binomial values") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(14, 7) == 3432);
  CHECK(binomial(28, 14) == 40116600);  // sum of squared sector dims at L=14
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
}

TEST_CASE("basis rejects out-of-range arguments") {
  CHECK_THROWS_AS(enumerate_sector_basis(0, 0), ParameterError);
  CHECK_THROWS_AS(enumerate_sector_basis(15, 3), ParameterError);
  CHECK_THROWS_AS(enumerate_sector_basis(6, -1), ParameterError);
  CHECK_THROWS_AS(enumerate_sector_basis(6, 7), ParameterError);
}
