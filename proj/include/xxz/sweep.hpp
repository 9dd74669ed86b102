#pragma once

#include <string>
#include <vector>

#include "xxz/qcorr.hpp"
#include "xxz/spectrum_cache.hpp"

namespace xxz {

enum class SweepParam { delta, J, T };

const char* sweep_param_name(SweepParam p);
SweepParam sweep_param_from_name(const std::string& name);

// Uniform grid over one parameter, everything else held fixed.  Grid point i
// is  from + (i * (to - from)) / (steps - 1),  which lands exactly on both
// endpoints and on any value the endpoints bracket symmetrically (a grid
// [-1, 1] contains 0.0 exactly, not 1e-17).
struct SweepGrid {
  SweepParam param = SweepParam::delta;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
  ChainSpec fixed;     // swept field ignored
  double fixed_T = 0;  // ignored when param == T
};

double grid_value(const SweepGrid& grid, int i);

// One row of sweep output: the full parameter echo plus every observable.
struct SweepRecord {
  std::string param;  // "delta" | "J" | "T"
  double value = 0.0;
  int L = 0;
  double J = 0.0;
  double delta = 0.0;
  double T = 0.0;
  double dx = 0.0;
  double dz = 0.0;
  double concurrence = 0.0;
  double eof = 0.0;
  double qd = 0.0;
  Branch d_branch = Branch::TIE;
  double f = 0.0;
  double u = 0.0;
  double s = 0.0;
  double c = 0.0;
  double chi = 0.0;
  double m = 0.0;
};

// Evaluates the grid through the global spectrum cache.  A failure at any
// point aborts the sweep with the offending parameter value in the message.
std::vector<SweepRecord> run_sweep(const SweepGrid& grid);

// Fields a detector can scan.
enum class SweepField { dx, dz, concurrence, eof_field, qd, f, u, s, c, chi, m };

const char* sweep_field_name(SweepField f);
SweepField sweep_field_from_name(const std::string& name);
double field_value(const SweepRecord& r, SweepField f);

// Central-difference slope at interior grid points; one-sided at the ends.
struct DerivativePoint {
  double param = 0.0;
  double slope = 0.0;
};

std::vector<DerivativePoint> estimate_derivative(const std::vector<SweepRecord>& records,
                                                 SweepField field);

// A candidate left by either detector.  `jump` is the raw discontinuity
// estimate, `score` its ratio to the sweep's own background level, so the
// detection threshold kappa is scale-free.
struct CuspCandidate {
  double location = 0.0;
  double jump = 0.0;
  double score = 0.0;
  std::string kind;  // "cusp" | "branch_switch"
};

struct CuspReport {
  std::string field;
  double kappa = 0.0;
  std::vector<CuspCandidate> candidates;  // sorted by descending score
  std::string caveat;
};

// Every report carries the same reminder about finite chains.
const std::string& finite_size_caveat();

// Slope-jump cusp detector.  At each interior point the forward and backward
// difference slopes are compared; the absolute slope jump is scored against
// the median interior jump (floored at 1e-12), and runs of consecutive
// points at or above kappa collapse to the best-scoring point of the run.
// Needs at least 5 records on a uniform grid.
CuspReport detect_cusps(const std::vector<SweepRecord>& records, SweepField field,
                        double kappa = 10.0);

// Detector for the measurement-branch switch of the closed-form discord:
// scans q = |dx| - |dz| for sign changes.  Grid points can sit exactly on a
// tie (the isotropic points do), so a run of ties flanked by opposite signs
// counts as one crossing at the run's midpoint; a plain sign flip is located
// by linear interpolation.  An all-tie sweep has no switches.
CuspReport detect_branch_switch(const std::vector<SweepRecord>& records);

}  // namespace xxz
