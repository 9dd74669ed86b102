#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xxz/csv_io.hpp"
#include "xxz/qcorr.hpp"
#include "xxz/sweep.hpp"

namespace {

using namespace xxz;

// Text goes to stdout unless an output path was given.
void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw ParameterError("cannot open output file '" + output_path + "'");
  out << text;
  if (!out) throw ParameterError("failed writing output file '" + output_path + "'");
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

struct PointArgs {
  int L = 0;
  double J = 0.0, delta = 0.0, T = 0.0;
  std::string bc = "periodic";
  std::string format = "json";
  std::string output;
};

SweepRecord evaluate_single(const ChainSpec& spec, double T) {
  validate_chain_spec(spec);
  const auto cs = SpectrumCache::global().get(spec.L, spec.delta, spec.bc);
  const PointObservables obs = evaluate_point(*cs, spec.J, T);
  const QCorrRecord q = qcorr_record(obs.state);

  SweepRecord r;
  // A point is a degenerate delta-sweep sample; that keeps the CSV shape.
  r.param = "delta";
  r.value = spec.delta;
  r.L = spec.L;
  r.J = spec.J;
  r.delta = spec.delta;
  r.T = T;
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
  return r;
}

void run_point(const PointArgs& a) {
  const ChainSpec spec{a.L, a.J, a.delta, boundary_from_name(a.bc)};
  const SweepRecord r = evaluate_single(spec, a.T);
  if (a.format == "csv") {
    std::ostringstream out;
    write_csv(out, {r});
    emit(out.str(), a.output);
  } else {
    emit(dump(record_to_json(r, /*with_param=*/false)), a.output);
  }
}

struct SweepArgs {
  int L = 8;
  double J = 1.0, delta = 1.0, T = 1.0;
  std::string bc = "periodic";
  std::string param = "delta";
  double from = 0.0, to = 0.0;
  int steps = 201;
  std::string format = "csv";
  std::string output;
};

SweepGrid grid_from_args(const SweepArgs& a) {
  SweepGrid grid;
  grid.param = sweep_param_from_name(a.param);
  grid.from = a.from;
  grid.to = a.to;
  grid.steps = a.steps;
  grid.fixed = ChainSpec{a.L, a.J, a.delta, boundary_from_name(a.bc)};
  grid.fixed_T = a.T;
  return grid;
}

void run_sweep_cmd(const SweepArgs& a) {
  const std::vector<SweepRecord> records = run_sweep(grid_from_args(a));
  if (a.format == "json") {
    emit(dump(records_to_json(records)), a.output);
  } else {
    std::ostringstream out;
    write_csv(out, records);
    emit(out.str(), a.output);
  }
}

struct DetectArgs {
  SweepArgs sweep;
  std::string input;
  std::string field = "qd";
  double kappa = 10.0;
  bool have_bounds = false;
};

void run_detect_cp(const DetectArgs& a) {
  std::vector<SweepRecord> records;
  if (!a.input.empty()) {
    std::ifstream in(a.input);
    if (!in) throw ParameterError("cannot open input file '" + a.input + "'");
    records = read_csv(in);
  } else if (a.have_bounds) {
    records = run_sweep(grid_from_args(a.sweep));
  } else {
    throw ParameterError("detect-cp needs either --input or --from/--to sweep bounds");
  }

  const SweepField field = sweep_field_from_name(a.field);
  CuspReport report = detect_cusps(records, field, a.kappa);
  if (field == SweepField::qd) {
    // The discord report carries both detectors; candidates keep their kind.
    const CuspReport switches = detect_branch_switch(records);
    report.candidates.insert(report.candidates.end(), switches.candidates.begin(),
                             switches.candidates.end());
    std::stable_sort(report.candidates.begin(), report.candidates.end(),
                     [](const CuspCandidate& x, const CuspCandidate& y) {
                       return x.score > y.score;
                     });
  }
  emit(dump(report_to_json(report)), a.sweep.output);
}

struct OracleArgs {
  int samples = 200;
  std::uint64_t seed = 0;
  double dx = 0.0, dz = 0.0;
  bool forced = false;
  std::string output;
};

void run_oracle(const OracleArgs& a) {
  constexpr double tolerance = 1e-5;
  if (a.samples < 1) throw ParameterError("samples must be >= 1");

  std::vector<TwoSiteState> states;
  if (a.forced) {
    const TwoSiteState s{a.dx, a.dz};
    try {
      validate_two_site_state(s);
    } catch (const StateError& e) {
      throw ParameterError(std::string("forced state is unphysical: ") + e.what());
    }
    states.push_back(s);
  } else {
    std::mt19937_64 rng(a.seed);
    states.reserve(a.samples);
    for (int i = 0; i < a.samples; ++i) states.push_back(sample_valid_state(rng));
  }

  nlohmann::json entries = nlohmann::json::array();
  double max_dev = 0.0;
  for (const auto& s : states) {
    const double closed = discord_closed(s).qd;
    const double brute = discord_bruteforce(s).qd;
    const double dev = std::abs(closed - brute);
    if (dev > max_dev) max_dev = dev;
    entries.push_back({{"dx", s.dx},
                       {"dz", s.dz},
                       {"closed", closed},
                       {"brute_force", brute},
                       {"deviation", dev}});
  }

  nlohmann::json j;
  j["samples"] = static_cast<int>(states.size());
  j["seed"] = a.seed;
  j["tolerance"] = tolerance;
  j["max_deviation"] = max_dev;
  j["entries"] = entries;
  emit(dump(j), a.output);

  if (max_dev > tolerance)
    throw NumericalError("closed form deviates from brute force by " +
                         format_double(max_dev));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal quantum correlations in finite XXZ spin-1/2 chains"};
  app.require_subcommand(1);

  PointArgs pa;
  CLI::App* point = app.add_subcommand("point", "Observables at a single parameter point");
  point->add_option("--L", pa.L, "chain length (2..14)")->required();
  point->add_option("--J", pa.J, "exchange coupling (nonzero)")->required();
  point->add_option("--delta", pa.delta, "anisotropy")->required();
  point->add_option("--T", pa.T, "temperature (> 0)")->required();
  point->add_option("--bc", pa.bc, "boundary conditions: periodic|open");
  point->add_option("--format", pa.format, "output format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  point->add_option("--output", pa.output, "write to file instead of stdout");

  SweepArgs sa;
  CLI::App* sweep = app.add_subcommand("sweep", "Observables along one parameter grid");
  sweep->add_option("--param", sa.param, "swept parameter: delta|J|T");
  sweep->add_option("--from", sa.from, "grid start")->required();
  sweep->add_option("--to", sa.to, "grid end")->required();
  sweep->add_option("--steps", sa.steps, "number of grid points (>= 3)");
  sweep->add_option("--L", sa.L, "chain length (2..14)");
  sweep->add_option("--J", sa.J, "fixed coupling (ignored when --param J)");
  sweep->add_option("--delta", sa.delta, "fixed anisotropy (ignored when --param delta)");
  sweep->add_option("--T", sa.T, "fixed temperature (ignored when --param T)");
  sweep->add_option("--bc", sa.bc, "boundary conditions: periodic|open");
  sweep->add_option("--format", sa.format, "output format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--output", sa.output, "write to file instead of stdout");

  DetectArgs da;
  CLI::App* detect = app.add_subcommand(
      "detect-cp", "Scan a sweep for cusp and branch-switch candidates");
  detect->add_option("--input", da.input, "read a previously written sweep CSV");
  CLI::Option* d_from = detect->add_option("--from", da.sweep.from, "grid start");
  CLI::Option* d_to = detect->add_option("--to", da.sweep.to, "grid end");
  detect->add_option("--param", da.sweep.param, "swept parameter: delta|J|T");
  detect->add_option("--steps", da.sweep.steps, "number of grid points (>= 3)");
  detect->add_option("--L", da.sweep.L, "chain length (2..14)");
  detect->add_option("--J", da.sweep.J, "fixed coupling");
  detect->add_option("--delta", da.sweep.delta, "fixed anisotropy");
  detect->add_option("--T", da.sweep.T, "fixed temperature");
  detect->add_option("--bc", da.sweep.bc, "boundary conditions: periodic|open");
  detect->add_option("--field", da.field, "scanned field (default qd)");
  detect->add_option("--kappa", da.kappa, "detection threshold (> 0)");
  detect->add_option("--output", da.sweep.output, "write to file instead of stdout");

  OracleArgs oa;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Compare closed-form discord against brute-force minimization");
  oracle->add_option("--samples", oa.samples, "number of random states");
  oracle->add_option("--seed", oa.seed, "RNG seed");
  CLI::Option* o_dx = oracle->add_option("--dx", oa.dx, "force a single state: its dx");
  CLI::Option* o_dz = oracle->add_option("--dz", oa.dz, "force a single state: its dz");
  o_dx->needs(o_dz);
  o_dz->needs(o_dx);
  oracle->add_option("--output", oa.output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (point->parsed()) run_point(pa);
    if (sweep->parsed()) run_sweep_cmd(sa);
    if (detect->parsed()) {
      da.have_bounds = d_from->count() > 0 && d_to->count() > 0;
      run_detect_cp(da);
    }
    if (oracle->parsed()) {
      oa.forced = o_dx->count() > 0;
      run_oracle(oa);
    }
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
