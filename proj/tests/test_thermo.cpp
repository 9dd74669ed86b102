#include <doctest.h>

#include <cmath>
#include <vector>

#include "analytic_two_spin.hpp"
#include "xxz/thermo.hpp"

using namespace xxz;

TEST_CASE("two-spin thermodynamics against the closed form") {
  const double j = 1.0, delta = 1.0, t = 1.0;
  const SpectrumSet spectrum = diagonalize({2, j, delta, Boundary::open});
  const ThermoRecord r = thermo_record(spectrum, t);
  const two_spin::Analytic exact = two_spin::evaluate(j, delta, t);

  CHECK(std::abs(r.f - exact.f) < 1e-10);
  CHECK(std::abs(r.u - exact.u) < 1e-10);
  CHECK(std::abs(r.s - exact.s) < 1e-10);
  CHECK(std::abs(r.c - exact.c) < 1e-10);
  CHECK(std::abs(r.chi - exact.chi) < 1e-10);
  CHECK(std::abs(r.m - exact.m) < 1e-10);
}

TEST_CASE("entropy saturates at ln 2 per site") {
  const SpectrumSet spectrum = diagonalize({8, 1.0, 1.0, Boundary::periodic});
  const ThermoRecord r = thermo_record(spectrum, 100.0);
  CHECK(std::abs(r.s - std::log(2.0)) < 1e-3);
  CHECK(r.c < 1e-2);
}

TEST_CASE("specific heat vanishes in both temperature extremes") {
  const SpectrumSet spectrum = diagonalize({8, 1.0, 2.0, Boundary::periodic});
  CHECK(thermo_record(spectrum, 100.0).c < 1e-2);
  CHECK(thermo_record(spectrum, 0.01).c < 1e-2);  // gapped: frozen out
}

TEST_CASE("entropy is non-decreasing in temperature") {
  const SpectrumSet spectrum = diagonalize({6, 1.0, -0.5, Boundary::periodic});
  double prev = -1.0;
  for (int i = 0; i < 50; ++i) {
    // Log-spaced grid from 0.01 to 100.
    const double t = std::pow(10.0, -2.0 + 4.0 * i / 49.0);
    const double s = thermo_record(spectrum, t).s;
    CHECK(s - prev >= -1e-9);
    prev = s;
  }
}

TEST_CASE("fluctuation quantities are nonnegative, magnetization zero") {
  const SpectrumSet spectrum = diagonalize({6, 1.0, 0.3, Boundary::periodic});
  for (double t : {0.05, 0.5, 5.0}) {
    const ThermoRecord r = thermo_record(spectrum, t);
    CHECK(r.s >= 0.0);
    CHECK(r.c >= 0.0);
    CHECK(r.chi >= 0.0);
    CHECK(std::abs(r.m) < 1e-12);
  }
}

TEST_CASE("fluctuation formulas agree with temperature derivatives") {
  const SpectrumSet spectrum = diagonalize({4, 1.0, 0.7, Boundary::periodic});
  for (double t : {0.3, 1.0, 4.0}) {
    const ThermoResiduals res = thermo_consistency(spectrum, t);
    CHECK(res.c_residual < 1e-5);
    CHECK(res.s_residual < 1e-5);
  }

  const SpectrumSet pair = diagonalize({2, 1.0, 0.5, Boundary::open});
  const ThermoResiduals res = thermo_consistency(pair, 1.0);
  CHECK(res.c_residual < 1e-6);
  CHECK(res.s_residual < 1e-6);
}

TEST_CASE("thermo rejects degenerate arguments") {
  const SpectrumSet spectrum = diagonalize({4, 1.0, 0.7, Boundary::periodic});
  CHECK_THROWS_AS(thermo_record(spectrum, 0.0), ParameterError);
  CHECK_THROWS_AS(thermo_record(spectrum, -1.0), ParameterError);
  CHECK_THROWS_AS(thermo_consistency(spectrum, 1.0, 0.0), ParameterError);
  CHECK_THROWS_AS(thermo_consistency(spectrum, 1.0, 1.5), ParameterError);
}
