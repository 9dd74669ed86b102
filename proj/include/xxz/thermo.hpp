#pragma once

#include "xxz/spectrum.hpp"

namespace xxz {

// Bulk thermodynamics per site at temperature T > 0.  Entropy is in nats
// (ln 2 per site at infinite temperature); energies in units of J.
//   f   free energy            -T ln(Z) / L
//   u   internal energy        <H> / L
//   s   entropy                (u - f) / T
//   c   specific heat          beta^2 Var(H) / L
//   chi magnetic susceptibility beta Var(M) / L,  M = sum_j sz_j = 2 n_up - L
//   m   magnetization          <M> / L  (identically 0 at zero field)
struct ThermoRecord {
  double f = 0.0;
  double u = 0.0;
  double s = 0.0;
  double c = 0.0;
  double chi = 0.0;
  double m = 0.0;
};

ThermoRecord thermo_record(const SpectrumSet& spectrum, double T);

// Consistency of the fluctuation formulas against temperature derivatives:
//   c_residual = |c - du/dT|,  s_residual = |s + df/dT|
// with central differences of relative step h_rel (absolute step h_rel * T).
struct ThermoResiduals {
  double c_residual = 0.0;
  double s_residual = 0.0;
};

ThermoResiduals thermo_consistency(const SpectrumSet& spectrum, double T,
                                   double h_rel = 1e-3);

}  // namespace xxz
