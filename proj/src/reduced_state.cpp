#include "xxz/reduced_state.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "xxz/spectrum_cache.hpp"
#include "xxz/thermal.hpp"

namespace xxz {

void validate_two_site_state(const TwoSiteState& s) {
  constexpr double tol = 1e-12;
  if (!std::isfinite(s.dx) || !std::isfinite(s.dz))
    throw StateError("correlators must be finite");
  // Smallest eigenvalues of the state: (1+dz)/4 and ((1-dz) - 2|dx|)/4.
  if (1.0 + s.dz < -tol)
    throw StateError("state positivity violated: 1 + dz = " + std::to_string(1.0 + s.dz));
  if ((1.0 - s.dz) - 2.0 * std::abs(s.dx) < -tol)
    throw StateError("state positivity violated: (1 - dz) - 2|dx| = " +
                     std::to_string((1.0 - s.dz) - 2.0 * std::abs(s.dx)));
}

TwoSiteState nn_correlators(const ChainSpec& spec, double T) {
  validate_chain_spec(spec);
  if (T < 0.0) throw ParameterError("T must be >= 0");

  const SpectrumSet spectrum = diagonalize(spec);
  const ThermalWeights weights = thermal_weights(spectrum, T);

  std::vector<OperatorBlock> zz, xx;
  zz.reserve(spec.L + 1);
  xx.reserve(spec.L + 1);
  for (int n_up = 0; n_up <= spec.L; ++n_up) {
    const SectorBasis basis = enumerate_sector_basis(spec.L, n_up);
    CorrelatorBlocks blocks = build_correlator_blocks(spec, basis);
    zz.push_back(std::move(blocks.zz));
    xx.push_back(std::move(blocks.xx));
  }

  const TwoSiteState s{thermal_average(spectrum, weights, xx),
                       thermal_average(spectrum, weights, zz)};
  validate_two_site_state(s);
  return s;
}

Eigen::Matrix4d two_site_density_matrix(const TwoSiteState& s) {
  validate_two_site_state(s);
  // Product basis |00>,|01>,|10>,|11>.  dx fills the sx sx + sy sy part,
  // which couples only |01> and |10>; dz sets the diagonal.
  Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
  rho(0, 0) = rho(3, 3) = (1.0 + s.dz) / 4.0;
  rho(1, 1) = rho(2, 2) = (1.0 - s.dz) / 4.0;
  rho(1, 2) = rho(2, 1) = s.dx / 2.0;
  return rho;
}

IdentityResiduals verify_correlator_identities(const ChainSpec& spec, double T, double h) {
  validate_chain_spec(spec);
  if (T < kZeroTemperature)
    throw ParameterError("identity check needs T > 0 (free energy derivative)");
  if (!(h > 0.0)) throw ParameterError("step h must be > 0");

  // All three spectra at J = 1; energies scale linearly in J, so the finite
  // difference in delta can be taken there and rescaled.
  ChainSpec base = spec;
  base.J = 1.0;
  ChainSpec plus = base, minus = base;
  plus.delta += h;
  minus.delta -= h;

  const CondensedSpectrum cs0 = condense(base);
  const CondensedSpectrum csp = condense(plus);
  const CondensedSpectrum csm = condense(minus);

  const PointObservables at = evaluate_point(cs0, spec.J, T);
  const double f_p = evaluate_point(csp, spec.J, T).thermo.f;
  const double f_m = evaluate_point(csm, spec.J, T).thermo.f;
  const double dfdD = (f_p - f_m) / (2.0 * h);

  // Bonds per site: the free energy density counts every bond once, the
  // correlators refer to a single bond.
  const double per_bond = static_cast<double>(spec.L) / bonds_of(spec).size();
  const double dz_pred = per_bond * dfdD / spec.J;
  const double dx_pred = per_bond * (at.thermo.u - spec.delta * dfdD) / (2.0 * spec.J);

  return {std::abs(at.state.dz - dz_pred), std::abs(at.state.dx - dx_pred)};
}

}  // namespace xxz
