#include "xxz/thermo.hpp"

#include <cmath>

#include "xxz/thermal.hpp"

namespace xxz {

namespace {

// One pass over the flattened spectrum: shifted partition sum, energy moments
// and magnetization moments under the Gibbs weights.
struct Moments {
  double ln_z = 0.0;
  double e_shift_mean = 0.0;  // <E - e_min>
  double e_var = 0.0;         // Var(E)
  double m_mean = 0.0;
  double m_var = 0.0;
};

Moments gibbs_moments(const SpectrumSet& spectrum, double T) {
  double z = 0.0, e_sum = 0.0;
  for (const auto& sec : spectrum.sectors) {
    const Eigen::ArrayXd sh = sec.eigenvalues.array() - spectrum.e_min;
    const Eigen::ArrayXd b = (-sh / T).exp();
    z += b.sum();
    e_sum += (b * sh).sum();
  }

  Moments mo;
  mo.ln_z = std::log(z);
  mo.e_shift_mean = e_sum / z;

  // Second pass with the means in hand: centered moments stay non-negative,
  // where the naive <X^2> - <X>^2 can go fractionally below zero.
  double e_var = 0.0, m_sum = 0.0;
  for (const auto& sec : spectrum.sectors) {
    const Eigen::ArrayXd sh = sec.eigenvalues.array() - spectrum.e_min;
    const Eigen::ArrayXd b = (-sh / T).exp();
    e_var += (b * (sh - mo.e_shift_mean).square()).sum();
    m_sum += b.sum() * (2.0 * sec.n_up - spectrum.spec.L);
  }
  mo.e_var = e_var / z;
  mo.m_mean = m_sum / z;

  double m_var = 0.0;
  for (const auto& sec : spectrum.sectors) {
    const Eigen::ArrayXd sh = sec.eigenvalues.array() - spectrum.e_min;
    const Eigen::ArrayXd b = (-sh / T).exp();
    const double dm = (2.0 * sec.n_up - spectrum.spec.L) - mo.m_mean;
    m_var += b.sum() * dm * dm;
  }
  mo.m_var = m_var / z;
  return mo;
}

}  // namespace

ThermoRecord thermo_record(const SpectrumSet& spectrum, double T) {
  if (T < kZeroTemperature)
    throw ParameterError("thermodynamic record needs T > 0");

  const Moments mo = gibbs_moments(spectrum, T);
  const double L = spectrum.spec.L;
  const double beta = 1.0 / T;

  ThermoRecord r;
  r.f = (spectrum.e_min - T * mo.ln_z) / L;
  r.u = (spectrum.e_min + mo.e_shift_mean) / L;
  // (u - f)/T assembled from the shifted pieces directly: both are >= 0, so
  // the entropy cannot round below zero.
  r.s = (beta * mo.e_shift_mean + mo.ln_z) / L;
  r.c = beta * beta * mo.e_var / L;
  r.chi = beta * mo.m_var / L;
  r.m = mo.m_mean / L;
  return r;
}

ThermoResiduals thermo_consistency(const SpectrumSet& spectrum, double T, double h_rel) {
  if (T < kZeroTemperature) throw ParameterError("consistency check needs T > 0");
  if (!(h_rel > 0.0) || !(h_rel < 1.0))
    throw ParameterError("relative step must be in (0, 1)");

  const double h = h_rel * T;
  const ThermoRecord at = thermo_record(spectrum, T);
  const ThermoRecord lo = thermo_record(spectrum, T - h);
  const ThermoRecord hi = thermo_record(spectrum, T + h);

  const double du_dt = (hi.u - lo.u) / (2.0 * h);
  const double df_dt = (hi.f - lo.f) / (2.0 * h);
  return {std::abs(at.c - du_dt), std::abs(at.s + df_dt)};
}

}  // namespace xxz
