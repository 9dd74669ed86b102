#include "xxz/qcorr.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include <Eigen/Dense>

namespace xxz {

namespace {

constexpr double kBranchTie = 1e-12;

// x log2 x, continued by 0 at and below x = 0 (captures the x -> 0+ limit and
// absorbs round-off that pushes an eigenvalue marginally negative).
double g(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// Binary entropy in bits from probabilities (p, 1-p).
double h2(double p) { return -g(p) - g(1.0 - p); }

// Uniform double in [0, 1) built from the top 53 bits, so the stream is
// identical on every platform (std::uniform_real_distribution is not).
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::X: return "X";
    case Branch::Z: return "Z";
    default: return "TIE";
  }
}

double concurrence(const TwoSiteState& s) {
  validate_two_site_state(s);
  const double c = std::abs(s.dx) - std::abs(1.0 + s.dz) / 2.0;
  return std::clamp(c, 0.0, 1.0);
}

double eof(const TwoSiteState& s) {
  const double c = concurrence(s);
  if (c == 0.0) return 0.0;
  const double fc = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
  return h2(fc);
}

DiscordClosed discord_closed(const TwoSiteState& s) {
  validate_two_site_state(s);
  const double ax = std::abs(s.dx);
  const double az = std::abs(s.dz);

  Branch branch = Branch::TIE;
  if (ax - az > kBranchTie) branch = Branch::X;
  else if (az - ax > kBranchTie) branch = Branch::Z;
  const double d = std::max(ax, az);

  // Mutual information minus the classical correlation of the optimal
  // measurement; both marginals are maximally mixed, so S_A = S_B = 1.
  const double mutual =
      (2.0 * g(1.0 + s.dz) + g(1.0 - s.dz + 2.0 * s.dx) + g(1.0 - s.dz - 2.0 * s.dx)) / 4.0;
  const double classical = (g(1.0 + d) + g(1.0 - d)) / 2.0;

  // The difference is >= 0 in exact arithmetic; cancellation can leave a
  // stray -1e-17 when dx ~ 0, which is a clean zero.
  const double qd = mutual - classical;
  return {qd < 0.0 ? 0.0 : qd, branch};
}

namespace {

using Matrix4cd = Eigen::Matrix4cd;
using Matrix2cd = Eigen::Matrix2cd;

double entropy2(const Matrix2cd& rho) {
  // Analytic eigenvalues of a 2x2 Hermitian matrix.
  const double a = rho(0, 0).real();
  const double d = rho(1, 1).real();
  const double r = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(rho(0, 1)));
  const double mean = 0.5 * (a + d);
  return -g(mean + r) - g(mean - r);
}

// Average conditional entropy of site 1 after projecting site 2 onto the
// +/- states of the Bloch axis (theta, phi).
double conditional_entropy(const Matrix4cd& rho, double theta, double phi) {
  const std::complex<double> e(std::cos(phi), std::sin(phi));
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  Eigen::Vector2cd up, down;
  up << c, e * s;       // |+n>
  down << -std::conj(e) * s, c;  // |-n>, orthogonal

  double acc = 0.0;
  for (const auto& v : {up, down}) {
    const Matrix2cd proj = v * v.adjoint();
    Matrix2cd cond = Matrix2cd::Zero();
    // Tr_B[(I (x) P) rho (I (x) P)] with composite index i*2 + b.
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        std::complex<double> sum = 0.0;
        for (int b = 0; b < 2; ++b)
          for (int bp = 0; bp < 2; ++bp)
            sum += proj(b, bp) * rho(i * 2 + bp, j * 2 + b);
        cond(i, j) = sum;
      }
    const double p = cond.trace().real();
    if (p < 1e-14) continue;  // branch never realized
    acc += p * entropy2(cond / p);
  }
  return acc;
}

}  // namespace

BruteForceDiscord discord_bruteforce(const TwoSiteState& s, int coarse_grid,
                                     int refine_iters) {
  if (coarse_grid < 2) throw ParameterError("coarse_grid must be >= 2");
  if (refine_iters < 0) throw ParameterError("refine_iters must be >= 0");
  const Matrix4cd rho = two_site_density_matrix(s).cast<std::complex<double>>();

  // Total-state entropy from the numerical spectrum, not the closed form.
  Eigen::SelfAdjointEigenSolver<Matrix4cd> solver(rho);
  if (solver.info() != Eigen::Success) throw NumericalError("4x4 eigensolver failed");
  double s_ab = 0.0;
  for (int i = 0; i < 4; ++i) s_ab -= g(solver.eigenvalues()(i));
  const double mutual = 2.0 - s_ab;

  // The state is invariant under z-rotations combined with dx -> dx sign
  // flips and under theta -> pi - theta, so one octant covers everything.
  constexpr double half_pi = 1.5707963267948966;
  double best = std::numeric_limits<double>::infinity();
  double best_theta = 0.0, best_phi = 0.0;
  auto consider = [&](double theta, double phi) {
    const double value = conditional_entropy(rho, theta, phi);
    if (value < best) {
      best = value;
      best_theta = theta;
      best_phi = phi;
    }
  };

  for (int i = 0; i < coarse_grid; ++i)
    for (int j = 0; j < coarse_grid; ++j)
      consider(half_pi * i / (coarse_grid - 1), half_pi * j / (coarse_grid - 1));

  double half_width = half_pi / (coarse_grid - 1);
  for (int it = 0; it < refine_iters; ++it) {
    const double t0 = best_theta, p0 = best_phi;
    for (int i = -4; i <= 4; ++i)
      for (int j = -4; j <= 4; ++j) {
        const double theta = std::clamp(t0 + half_width * i / 4.0, 0.0, half_pi);
        const double phi = std::clamp(p0 + half_width * j / 4.0, 0.0, half_pi);
        consider(theta, phi);
      }
    half_width *= 0.6;
  }

  return {mutual - 1.0 + best, best_theta, best_phi};
}

QCorrRecord qcorr_record(const TwoSiteState& s) {
  const DiscordClosed d = discord_closed(s);
  return {concurrence(s), eof(s), d.qd, d.branch};
}

TwoSiteState sample_valid_state(std::mt19937_64& rng) {
  const double dz = 2.0 * uniform01(rng) - 1.0;
  const double half_band = (1.0 - dz) / 2.0;
  const double dx = (2.0 * uniform01(rng) - 1.0) * half_band;
  return {dx, dz};
}

}  // namespace xxz
