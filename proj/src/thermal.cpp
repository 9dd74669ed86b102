#include "xxz/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace xxz {

double ground_manifold_tolerance(double e_min) {
  return 1e-10 * std::max(1.0, std::abs(e_min));
}

Eigen::VectorXd boltzmann_weights(const Eigen::VectorXd& energies, double T) {
  if (T < 0.0) throw ParameterError("T must be >= 0");
  if (energies.size() == 0) throw ParameterError("empty energy list");

  const double e_min = energies.minCoeff();
  Eigen::VectorXd w(energies.size());
  if (T < kZeroTemperature) {
    const double tol = ground_manifold_tolerance(e_min);
    for (Eigen::Index i = 0; i < energies.size(); ++i)
      w(i) = (energies(i) - e_min <= tol) ? 1.0 : 0.0;
  } else {
    w = (-(energies.array() - e_min) / T).exp();
  }
  w /= w.sum();
  return w;
}

ThermalWeights thermal_weights(const SpectrumSet& spectrum, double T) {
  if (T < 0.0) throw ParameterError("T must be >= 0");

  // Normalization must run over the whole spectrum: at T = 0 the ground
  // manifold may straddle sector boundaries (ferromagnetic side), and at
  // T > 0 every sector contributes to Z anyway.
  ThermalWeights out;
  out.T = T;
  out.w.reserve(spectrum.sectors.size());

  double total = 0.0;
  const double tol = ground_manifold_tolerance(spectrum.e_min);
  for (const auto& sec : spectrum.sectors) {
    Eigen::VectorXd w(sec.eigenvalues.size());
    if (T < kZeroTemperature) {
      for (Eigen::Index i = 0; i < w.size(); ++i)
        w(i) = (sec.eigenvalues(i) - spectrum.e_min <= tol) ? 1.0 : 0.0;
    } else {
      w = (-(sec.eigenvalues.array() - spectrum.e_min) / T).exp();
    }
    total += w.sum();
    out.w.push_back(std::move(w));
  }
  for (auto& w : out.w) w /= total;
  return out;
}

double thermal_average(const SpectrumSet& spectrum, const ThermalWeights& weights,
                       const std::vector<OperatorBlock>& op) {
  if (weights.w.size() != spectrum.sectors.size())
    throw ParameterError("weights do not match the spectrum's sector count");
  if (op.size() != spectrum.sectors.size())
    throw ParameterError("operator has " + std::to_string(op.size()) +
                         " blocks, spectrum has " +
                         std::to_string(spectrum.sectors.size()) + " sectors");

  double acc = 0.0;
  for (std::size_t k = 0; k < op.size(); ++k) {
    const auto& sec = spectrum.sectors[k];
    const auto& block = op[k];
    const Eigen::Index dim = sec.eigenvalues.size();
    if (block.n_up != sec.n_up || block.matrix.rows() != dim || block.matrix.cols() != dim)
      throw ParameterError("operator block " + std::to_string(k) +
                           " does not conform to its sector");
    if (weights.w[k].size() != dim)
      throw ParameterError("weight block " + std::to_string(k) +
                           " does not conform to its sector");

    // sum_i w_i v_i^T A v_i, all eigenvectors of the sector at once.
    const Eigen::MatrixXd av = block.matrix * sec.eigenvectors;
    acc += weights.w[k].dot((av.cwiseProduct(sec.eigenvectors)).colwise().sum());
  }
  return acc;
}

namespace {

// Shared shifted-sum pieces: ln Z_shifted and sum_i w_i (E_i - e_min).
struct ShiftedSums {
  double ln_z = 0.0;
  double mean_shifted = 0.0;
};

ShiftedSums shifted_sums(const SpectrumSet& spectrum, double T) {
  double z = 0.0;
  double e_sum = 0.0;
  for (const auto& sec : spectrum.sectors) {
    const Eigen::ArrayXd sh = sec.eigenvalues.array() - spectrum.e_min;
    const Eigen::ArrayXd b = (-sh / T).exp();
    z += b.sum();
    e_sum += (b * sh).sum();
  }
  return {std::log(z), e_sum / z};
}

}  // namespace

FreeEnergyResult free_energy_per_site(const SpectrumSet& spectrum, double T) {
  if (T < 0.0) throw ParameterError("T must be >= 0");
  const double per_site = spectrum.e_min / spectrum.spec.L;
  if (T < kZeroTemperature) return {per_site, true};
  const ShiftedSums s = shifted_sums(spectrum, T);
  return {per_site - T * s.ln_z / spectrum.spec.L, false};
}

double internal_energy_per_site(const SpectrumSet& spectrum, double T) {
  if (T < 0.0) throw ParameterError("T must be >= 0");
  if (T < kZeroTemperature) {
    // Ground-manifold average; all members sit within the degeneracy window.
    const ThermalWeights w = thermal_weights(spectrum, T);
    double u = 0.0;
    for (std::size_t k = 0; k < w.w.size(); ++k)
      u += w.w[k].dot(spectrum.sectors[k].eigenvalues);
    return u / spectrum.spec.L;
  }
  const ShiftedSums s = shifted_sums(spectrum, T);
  return (spectrum.e_min + s.mean_shifted) / spectrum.spec.L;
}

}  // namespace xxz
