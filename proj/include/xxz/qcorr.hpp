#pragma once

#include <random>

#include "xxz/reduced_state.hpp"

namespace xxz {

// Which correlator dominates the measurement entropy in the closed-form
// discord: D = max{|dx|, |dz|}.  TIE marks |dx| = |dz| within 1e-12 --
// exactly what happens at the isotropic points, where symmetry pins the two
// magnitudes to each other.
enum class Branch { X, Z, TIE };

const char* branch_name(Branch b);

// Concurrence of the Bell-diagonal state: max{0, |dx| - |1 + dz|/2}.
double concurrence(const TwoSiteState& s);

// Entanglement of formation in bits, the usual convex-roof function of the
// concurrence: E(C) = H2((1 + sqrt(1 - C^2))/2).
double eof(const TwoSiteState& s);

// Quantum discord in bits, closed form for Bell-diagonal states.  The
// optimal projective measurement on one site is along x when |dx| > |dz|,
// along z otherwise; at a tie both axes are optimal and the value is
// branch-independent.
struct DiscordClosed {
  double qd = 0.0;
  Branch branch = Branch::TIE;
};

DiscordClosed discord_closed(const TwoSiteState& s);

// Discord by direct numerical minimization over all projective measurements
// on the second site, parameterized by a Bloch axis (theta, phi).  A coarse
// grid over [0, pi/2]^2 (symmetry makes one octant enough) is followed by
// iterative window-shrinking refinement around the best point.  Slow; meant
// as an oracle for discord_closed, not for sweeps.
struct BruteForceDiscord {
  double qd = 0.0;
  double theta = 0.0;  // optimal measurement axis found
  double phi = 0.0;
};

BruteForceDiscord discord_bruteforce(const TwoSiteState& s, int coarse_grid = 64,
                                     int refine_iters = 40);

// Everything the sweep records need about one state.
struct QCorrRecord {
  double concurrence = 0.0;
  double eof = 0.0;
  double qd = 0.0;
  Branch d_branch = Branch::TIE;
};

QCorrRecord qcorr_record(const TwoSiteState& s);

// Uniform sample from the physical (dx, dz) triangle, used by the oracle
// command and the closed-form-vs-brute-force comparisons.  Draws dz uniform
// on [-1, 1] and dx uniform on the allowed interval |dx| <= (1 - dz)/2.
TwoSiteState sample_valid_state(std::mt19937_64& rng);

}  // namespace xxz
