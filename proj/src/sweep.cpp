#include "xxz/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace xxz {

const char* sweep_param_name(SweepParam p) {
  switch (p) {
    case SweepParam::delta: return "delta";
    case SweepParam::J: return "J";
    default: return "T";
  }
}

SweepParam sweep_param_from_name(const std::string& name) {
  if (name == "delta") return SweepParam::delta;
  if (name == "J") return SweepParam::J;
  if (name == "T") return SweepParam::T;
  throw ParameterError("param must be 'delta', 'J' or 'T', got '" + name + "'");
}

double grid_value(const SweepGrid& grid, int i) {
  return grid.from + (i * (grid.to - grid.from)) / (grid.steps - 1);
}

namespace {

void validate_grid(const SweepGrid& grid) {
  if (grid.steps < 3) throw ParameterError("steps must be >= 3");
  if (!std::isfinite(grid.from) || !std::isfinite(grid.to))
    throw ParameterError("grid endpoints must be finite");
  if (!(grid.from < grid.to)) throw ParameterError("from must be < to");

  // Validate the held-fixed chain parameters; the swept field is replaced by
  // a harmless probe value so e.g. a J sweep through 0 is not rejected.
  ChainSpec probe = grid.fixed;
  if (grid.param == SweepParam::J) probe.J = 1.0;
  if (grid.param == SweepParam::delta) probe.delta = 0.0;
  validate_chain_spec(probe);

  if (grid.param == SweepParam::T) {
    if (!(grid.from > 0.0)) throw ParameterError("temperature sweep needs from > 0");
  } else if (!(grid.fixed_T > 0.0)) {
    throw ParameterError("fixed T must be > 0");
  }
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepGrid& grid) {
  validate_grid(grid);

  std::vector<SweepRecord> records;
  records.reserve(grid.steps);
  auto& cache = SpectrumCache::global();

  for (int i = 0; i < grid.steps; ++i) {
    const double v = grid_value(grid, i);

    SweepRecord r;
    r.param = sweep_param_name(grid.param);
    r.value = v;
    r.L = grid.fixed.L;
    r.J = grid.param == SweepParam::J ? v : grid.fixed.J;
    r.delta = grid.param == SweepParam::delta ? v : grid.fixed.delta;
    r.T = grid.param == SweepParam::T ? v : grid.fixed_T;

    try {
      const auto cs = cache.get(r.L, r.delta, grid.fixed.bc);
      const PointObservables obs = evaluate_point(*cs, r.J, r.T);
      const QCorrRecord q = qcorr_record(obs.state);
      r.dx = obs.state.dx;
      r.dz = obs.state.dz;
      r.concurrence = q.concurrence;
      r.eof = q.eof;
      r.qd = q.qd;
      r.d_branch = q.d_branch;
      r.f = obs.thermo.f;
      r.u = obs.thermo.u;
      r.s = obs.thermo.s;
      r.c = obs.thermo.c;
      r.chi = obs.thermo.chi;
      r.m = obs.thermo.m;
    } catch (const std::exception& e) {
      throw NumericalError("sweep aborted at " + r.param + "=" +
                           std::to_string(v) + ": " + e.what());
    }
    records.push_back(std::move(r));
  }
  return records;
}

const char* sweep_field_name(SweepField f) {
  switch (f) {
    case SweepField::dx: return "dx";
    case SweepField::dz: return "dz";
    case SweepField::concurrence: return "concurrence";
    case SweepField::eof_field: return "eof";
    case SweepField::qd: return "qd";
    case SweepField::f: return "f";
    case SweepField::u: return "u";
    case SweepField::s: return "s";
    case SweepField::c: return "c";
    case SweepField::chi: return "chi";
    default: return "m";
  }
}

SweepField sweep_field_from_name(const std::string& name) {
  for (SweepField f : {SweepField::dx, SweepField::dz, SweepField::concurrence,
                       SweepField::eof_field, SweepField::qd, SweepField::f,
                       SweepField::u, SweepField::s, SweepField::c, SweepField::chi,
                       SweepField::m})
    if (name == sweep_field_name(f)) return f;
  throw ParameterError("unknown sweep field '" + name + "'");
}

double field_value(const SweepRecord& r, SweepField f) {
  switch (f) {
    case SweepField::dx: return r.dx;
    case SweepField::dz: return r.dz;
    case SweepField::concurrence: return r.concurrence;
    case SweepField::eof_field: return r.eof;
    case SweepField::qd: return r.qd;
    case SweepField::f: return r.f;
    case SweepField::u: return r.u;
    case SweepField::s: return r.s;
    case SweepField::c: return r.c;
    case SweepField::chi: return r.chi;
    default: return r.m;
  }
}

namespace {

// Grid abscissae, checked ascending and uniform.
std::vector<double> uniform_grid_of(const std::vector<SweepRecord>& records,
                                    std::size_t min_size) {
  if (records.size() < min_size)
    throw ParameterError("need at least " + std::to_string(min_size) + " records");
  std::vector<double> x(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) x[i] = records[i].value;

  const double h = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
  if (!(h > 0.0)) throw ParameterError("records are not on an ascending grid");
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (std::abs((x[i + 1] - x[i]) - h) > std::max(1e-9 * h, 1e-12))
      throw ParameterError("records are not on a uniform ascending grid");
  return x;
}

double median_floored(std::vector<double> v) {
  // Detector scores are ratios against this background level; the floor
  // keeps piecewise-exact data (background jump 0) from dividing by zero.
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  const double med = n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
  return std::max(med, 1e-12);
}

}  // namespace

std::vector<DerivativePoint> estimate_derivative(const std::vector<SweepRecord>& records,
                                                 SweepField field) {
  const std::vector<double> x = uniform_grid_of(records, 3);
  const std::size_t n = x.size();
  const double h = (x.back() - x.front()) / static_cast<double>(n - 1);

  std::vector<DerivativePoint> out(n);
  auto y = [&](std::size_t i) { return field_value(records[i], field); };
  out[0] = {x[0], (y(1) - y(0)) / h};
  for (std::size_t i = 1; i + 1 < n; ++i)
    out[i] = {x[i], (y(i + 1) - y(i - 1)) / (2.0 * h)};
  out[n - 1] = {x[n - 1], (y(n - 1) - y(n - 2)) / h};
  return out;
}

const std::string& finite_size_caveat() {
  static const std::string caveat =
      "Finite chains have no true non-analyticity: detected features are "
      "sharp finite-size crossovers whose scores rank candidate transition "
      "points, they do not certify a phase transition.";
  return caveat;
}

CuspReport detect_cusps(const std::vector<SweepRecord>& records, SweepField field,
                        double kappa) {
  if (!(kappa > 0.0)) throw ParameterError("kappa must be > 0");
  const std::vector<double> x = uniform_grid_of(records, 5);
  const std::size_t n = x.size();
  const double h = (x.back() - x.front()) / static_cast<double>(n - 1);

  // Jump of the one-sided slopes at each interior point; a kink of slope
  // mismatch a shows up as |a|, smooth curvature as O(h).
  std::vector<double> jump(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double y0 = field_value(records[i - 1], field);
    const double y1 = field_value(records[i], field);
    const double y2 = field_value(records[i + 1], field);
    jump[i] = std::abs(y2 - 2.0 * y1 + y0) / h;
  }

  const double scale = median_floored(std::vector<double>(jump.begin() + 1, jump.end() - 1));

  CuspReport report;
  report.field = sweep_field_name(field);
  report.kappa = kappa;
  report.caveat = finite_size_caveat();

  // A single kink raises the score on a few neighboring points; collapse
  // each contiguous above-threshold run to its best-scoring point.
  std::size_t i = 1;
  while (i + 1 < n) {
    if (jump[i] / scale < kappa) {
      ++i;
      continue;
    }
    std::size_t best = i;
    std::size_t j = i;
    while (j + 1 < n && jump[j] / scale >= kappa) {
      if (jump[j] > jump[best]) best = j;
      ++j;
    }
    report.candidates.push_back({x[best], jump[best], jump[best] / scale, "cusp"});
    i = j;
  }

  std::stable_sort(report.candidates.begin(), report.candidates.end(),
                   [](const CuspCandidate& a, const CuspCandidate& b) {
                     return a.score > b.score;
                   });
  return report;
}

CuspReport detect_branch_switch(const std::vector<SweepRecord>& records) {
  if (records.size() < 2) throw ParameterError("need at least 2 records");
  const std::size_t n = records.size();

  // q changes sign where the closed-form discord switches measurement
  // branch.  Grid points can land exactly on a tie (symmetry points do),
  // so ties are a third class, not a sign.
  constexpr double tie_tol = 1e-12;
  std::vector<double> x(n), q(n);
  std::vector<int> cls(n);  // -1, 0 (tie), +1
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = records[i].value;
    q[i] = std::abs(records[i].dx) - std::abs(records[i].dz);
    cls[i] = std::abs(q[i]) <= tie_tol ? 0 : (q[i] > 0.0 ? 1 : -1);
  }

  std::vector<double> steps;
  steps.reserve(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) steps.push_back(std::abs(q[i + 1] - q[i]));
  const double scale = median_floored(steps);

  CuspReport report;
  report.field = "d_branch";
  report.kappa = 0.0;
  report.caveat = finite_size_caveat();

  auto add = [&](double location, double jump) {
    report.candidates.push_back({location, jump, jump / scale, "branch_switch"});
  };

  std::size_t i = 0;
  while (i < n) {
    if (cls[i] == 0) {
      // Maximal tie run [i, j]; it marks a crossing when the flanks disagree.
      std::size_t j = i;
      while (j + 1 < n && cls[j + 1] == 0) ++j;
      if (i > 0 && j + 1 < n && cls[i - 1] * cls[j + 1] < 0)
        add(0.5 * (x[i] + x[j]), std::abs(q[j + 1] - q[i - 1]));
      i = j + 1;
      continue;
    }
    if (i + 1 < n && cls[i + 1] != 0 && cls[i] * cls[i + 1] < 0) {
      // Plain sign flip: locate the zero of the chord.
      const double t = q[i] / (q[i] - q[i + 1]);
      add(x[i] + t * (x[i + 1] - x[i]), std::abs(q[i + 1] - q[i]));
    }
    ++i;
  }

  std::stable_sort(report.candidates.begin(), report.candidates.end(),
                   [](const CuspCandidate& a, const CuspCandidate& b) {
                     return a.score > b.score;
                   });
  return report;
}

}  // namespace xxz
