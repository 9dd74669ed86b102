#pragma once

#include <Eigen/Dense>

#include "xxz/chain_spec.hpp"

namespace xxz {

// Thermal two-site reduced density matrix of a nearest-neighbor bond,
// parameterized by the only two independent correlators the chain symmetries
// leave: dx = <sx sx> (= <sy sy>) and dz = <sz sz>.  Single-site
// magnetizations vanish, so the state is Bell-diagonal ("X-shaped"):
//   rho = (1/4) [ I + dx (sx sx + sy sy) + dz (sz sz) ].
struct TwoSiteState {
  double dx = 0.0;
  double dz = 0.0;
};

// Eigenvalues of the state above: (1+dz)/4 twice, (1-dz)/4 +/- dx/2.
// Physical states satisfy 1 + dz >= 0 and (1 - dz) >= 2|dx|.
// Throws StateError if either is violated by more than 1e-12.
void validate_two_site_state(const TwoSiteState& s);

// dx and dz of the (1,2) bond at temperature T, from the sector-resolved
// thermal average.  T = 0 is allowed (ground-manifold average).
TwoSiteState nn_correlators(const ChainSpec& spec, double T);

// The 4x4 matrix of the state in the product basis |00>,|01>,|10>,|11>
// (first site = leftmost factor, 0 = up).  Validates first.
Eigen::Matrix4d two_site_density_matrix(const TwoSiteState& s);

// Cross-checks the correlators against thermodynamic derivatives of the
// free energy per site.  With b = (number of bonds)/L (1 for periodic,
// 1/2 for the open two-site chain ... generally (L-1)/L open),
//   b * J * dz  = df/d(delta)            at fixed J, T
//   b * 2 J dx  = u - delta * df/d(delta)
// The derivative is a central difference with step h in delta.
struct IdentityResiduals {
  double residual_z = 0.0;
  double residual_x = 0.0;
};

IdentityResiduals verify_correlator_identities(const ChainSpec& spec, double T,
                                               double h = 1e-4);

}  // namespace xxz
