#pragma once

#include <Eigen/Dense>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "xxz/chain_spec.hpp"
#include "xxz/reduced_state.hpp"
#include "xxz/thermo.hpp"

namespace xxz {

// H is linear in J, so one diagonalization at J = 1 serves every J: energies
// rescale as J * E, eigenvectors do not move.  What thermal averages actually
// consume are the energies plus, per eigenstate, the diagonal expectation
// values of the bond correlators and the (sharp) magnetization.  Keeping only
// those collapses a ~100 MB set of eigenvector blocks to a few vectors of
// length 2^L.
struct CondensedSpectrum {
  int L = 0;
  double delta = 0.0;
  Boundary bc = Boundary::periodic;
  Eigen::VectorXd energies;  // at J = 1, flattened over sectors
  Eigen::VectorXd zz_diag;   // <v_i| sz_1 sz_2 |v_i>
  Eigen::VectorXd xx_diag;   // <v_i| sx_1 sx_2 |v_i>
  Eigen::VectorXd m_diag;    // 2 n_up - L of the sector of v_i
};

// Diagonalizes all sectors at J = 1 and condenses.  spec.J is ignored.
CondensedSpectrum condense(const ChainSpec& spec);

// Everything a sweep point reports, before the discord/entanglement layer.
struct PointObservables {
  TwoSiteState state;
  ThermoRecord thermo;
};

// Thermal observables at coupling J and temperature T (T > 0 required, since
// the thermodynamic fields diverge or degenerate at T = 0).  J may be
// anything finite, including 0: that is the free-spin limit where the state
// is maximally mixed.
PointObservables evaluate_point(const CondensedSpectrum& cs, double J, double T);

// Process-wide memo of condensed spectra keyed by (L, delta, bc).  A sweep
// over T or J at fixed delta touches a single entry; a delta sweep fills one
// entry per grid point and later sweeps on the same grid reuse them all.
class SpectrumCache {
 public:
  static SpectrumCache& global();

  std::shared_ptr<const CondensedSpectrum> get(int L, double delta, Boundary bc);

  void clear();
  std::size_t size() const;

 private:
  using Key = std::tuple<int, double, int>;
  mutable std::mutex mu_;
  std::map<Key, std::shared_ptr<const CondensedSpectrum>> entries_;
};

}  // namespace xxz
