#pragma once

#include <Eigen/Dense>
#include <vector>

#include "xxz/spectrum.hpp"

namespace xxz {

// Temperatures below this are treated as exactly T = 0: equal weight on the
// global ground manifold, everything else zero.
inline constexpr double kZeroTemperature = 1e-8;

// Degeneracy tolerance for the T = 0 ground manifold: states within
// 1e-10 * max(1, |e_min|) of the minimum count as ground states.
double ground_manifold_tolerance(double e_min);

// Gibbs weights for a flat list of energies.  All exponentials are taken
// against the shifted energies E - min(E), so the largest term is exactly 1
// and the sum never overflows.  T < 0 throws ParameterError.
Eigen::VectorXd boltzmann_weights(const Eigen::VectorXd& energies, double T);

// Gibbs weights per sector, normalized across the whole spectrum (the T = 0
// ground manifold may span several sectors, e.g. the two polarized product
// states of a ferromagnet).
struct ThermalWeights {
  double T = 0.0;
  std::vector<Eigen::VectorXd> w;  // aligned with SpectrumSet::sectors
};

ThermalWeights thermal_weights(const SpectrumSet& spectrum, double T);

// sum_i w_i <v_i| A |v_i> for a sector-blocked operator A.  The blocks must
// match the spectrum sector-by-sector (same n_up, same dimension).
double thermal_average(const SpectrumSet& spectrum, const ThermalWeights& weights,
                       const std::vector<OperatorBlock>& op);

// f = -T ln(Z) / L, evaluated in the overflow-safe shifted form
//   f = e_min/L - (T/L) ln sum_i exp(-(E_i - e_min)/T).
// At T below kZeroTemperature this limits to e_min/L and t0_limit is set.
struct FreeEnergyResult {
  double value = 0.0;
  bool t0_limit = false;
};

FreeEnergyResult free_energy_per_site(const SpectrumSet& spectrum, double T);

// u = <H>/L = sum_i w_i E_i / L (well-defined at T = 0 too).
double internal_energy_per_site(const SpectrumSet& spectrum, double T);

}  // namespace xxz
