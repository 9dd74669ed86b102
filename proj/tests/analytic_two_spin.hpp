#pragma once

// Closed forms for the open two-spin chain, worked out by hand from its four
// eigenstates: the polarized pair at energy J*delta, the triplet-0 state at
// (2 - delta)*J and the singlet at -(2 + delta)*J.

#include <array>
#include <cmath>

namespace two_spin {

inline std::array<double, 4> spectrum(double j, double delta) {
  return {j * delta, j * delta, (2.0 - delta) * j, -(2.0 + delta) * j};
}

struct Analytic {
  double z;       // partition function
  double zz, xx;  // bond correlators
  double f, u, s, c, chi, m;
};

inline Analytic evaluate(double j, double delta, double t) {
  const double beta = 1.0 / t;
  const double e_pol = j * delta;
  const double e_t0 = (2.0 - delta) * j;
  const double e_s = -(2.0 + delta) * j;

  const double b_pol = std::exp(-beta * e_pol);
  const double b_t0 = std::exp(-beta * e_t0);
  const double b_s = std::exp(-beta * e_s);

  Analytic a;
  a.z = 2.0 * b_pol + b_t0 + b_s;
  // Polarized states: sz sz = +1, sx sx = 0.  Triplet-0 / singlet:
  // sz sz = -1, sx sx = +1 / -1.
  a.zz = (2.0 * b_pol - b_t0 - b_s) / a.z;
  a.xx = (b_t0 - b_s) / a.z;

  const double e_mean = (2.0 * e_pol * b_pol + e_t0 * b_t0 + e_s * b_s) / a.z;
  const double e2_mean =
      (2.0 * e_pol * e_pol * b_pol + e_t0 * e_t0 * b_t0 + e_s * e_s * b_s) / a.z;

  a.f = -t * std::log(a.z) / 2.0;
  a.u = e_mean / 2.0;
  a.s = (a.u - a.f) / t;
  a.c = beta * beta * (e2_mean - e_mean * e_mean) / 2.0;
  // M = sum sz is +/-2 on the polarized states, 0 otherwise; <M> = 0.
  a.chi = beta * (8.0 * b_pol / a.z) / 2.0;
  a.m = 0.0;
  return a;
}

}  // namespace two_spin
