#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "xxz/csv_io.hpp"

// Black-box tests against the installed binary; XXZ_CLI_PATH is injected by
// the build so the tests exercise exactly what a user runs.

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(XXZ_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);

  CliResult result;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) result.out.append(buf, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/xxz_cli_test_") + name;
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char ch : text)
    if (ch == '\n') ++lines;
  return lines;
}

}  // namespace

TEST_CASE("point emits a populated JSON record") {
  const CliResult r = run_cli("point --L 4 --J 1 --delta 1 --T 0.5");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["qd"].get<double>() > 0.0);
  CHECK(j["eof"].get<double>() >= 0.0);
  // Isotropic point: the two correlators coincide and the branch ties.
  CHECK(std::abs(j["dx"].get<double>() - j["dz"].get<double>()) < 1e-10);
  CHECK(j["d_branch"] == "TIE");
  CHECK(!j.contains("param"));
}

TEST_CASE("point in CSV form uses the sweep schema") {
  const CliResult r = run_cli("point --L 4 --J 1 --delta 0.5 --T 1 --format csv");
  REQUIRE(r.exit_code == 0);
  std::istringstream in(r.out);
  const std::vector<xxz::SweepRecord> records = xxz::read_csv(in);
  REQUIRE(records.size() == 1);
  CHECK(records[0].delta == 0.5);
  CHECK(records[0].T == 1.0);
}

TEST_CASE("point at effectively infinite temperature") {
  const CliResult r = run_cli("point --L 4 --J 1 --delta 1 --T 1e6");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["qd"].get<double>()) < 1e-5);
  CHECK(j["eof"].get<double>() == 0.0);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("point --L 2 --J 1 --delta 1 --T 0.5 --bc periodic").exit_code == 2);
  CHECK(run_cli("point --L 4 --J 1 --delta 1").exit_code == 2);  // missing --T
  CHECK(run_cli("point --L 4 --J 0 --delta 1 --T 1").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);                 // no subcommand
  CHECK(run_cli("frobnicate").exit_code == 2);       // unknown subcommand
  CHECK(run_cli("sweep --from 0").exit_code == 2);   // missing --to
  CHECK(run_cli("detect-cp --L 4").exit_code == 2);  // neither --input nor bounds
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("sweep emits one row per grid point") {
  const CliResult r = run_cli(
      "sweep --param delta --from -1 --to 1 --steps 11 --L 4 --J 1 --T 0.5");
  REQUIRE(r.exit_code == 0);
  CHECK(count_lines(r.out) == 12);

  std::istringstream in(r.out);
  const std::vector<xxz::SweepRecord> records = xxz::read_csv(in);
  REQUIRE(records.size() == 11);
  CHECK(records.front().value == -1.0);
  CHECK(records.back().value == 1.0);
  CHECK(records[5].value == 0.0);
}

TEST_CASE("isotropic coupling sweep ties the branch everywhere") {
  const CliResult r = run_cli(
      "sweep --param J --from -0.5 --to 0.5 --steps 11 --L 4 --delta 1 --T 0.5");
  REQUIRE(r.exit_code == 0);
  std::istringstream in(r.out);
  for (const auto& rec : xxz::read_csv(in)) CHECK(rec.d_branch == xxz::Branch::TIE);
}

TEST_CASE("sweep in JSON form is an array of records") {
  const CliResult r = run_cli(
      "sweep --param T --from 0.2 --to 2 --steps 5 --L 4 --delta 2 --format json");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 5);
  CHECK(j[0]["param"] == "T");
  CHECK(j[0]["value"].get<double>() == 0.2);
}

TEST_CASE("detect-cp from a file reproduces the inline report") {
  const std::string csv_path = temp_path("roundtrip.csv");
  const std::string sweep_args =
      "--param delta --from -1.5 --to 1.5 --steps 31 --L 4 --J 1 --T 0.5";

  REQUIRE(run_cli("sweep " + sweep_args + " --output " + csv_path).exit_code == 0);
  const CliResult from_file = run_cli("detect-cp --input " + csv_path);
  const CliResult inline_run = run_cli("detect-cp " + sweep_args);

  REQUIRE(from_file.exit_code == 0);
  REQUIRE(inline_run.exit_code == 0);
  CHECK(from_file.out == inline_run.out);

  const nlohmann::json j = nlohmann::json::parse(from_file.out);
  CHECK(j["field"] == "qd");
  CHECK(j["kappa"] == 10.0);
  CHECK(j.contains("candidates"));
  CHECK(!j["caveat"].get<std::string>().empty());
  std::remove(csv_path.c_str());
}

TEST_CASE("detect-cp rejects shuffled and malformed input") {
  const std::string csv_path = temp_path("shuffled.csv");
  REQUIRE(run_cli("sweep --param delta --from -1 --to 1 --steps 11 --L 4 --J 1 "
                  "--T 0.5 --output " +
                  csv_path)
              .exit_code == 0);

  std::vector<std::string> lines;
  {
    std::ifstream in(csv_path);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }
  REQUIRE(lines.size() == 12);
  std::swap(lines[3], lines[8]);
  {
    std::ofstream out(csv_path);
    for (const auto& line : lines) out << line << '\n';
  }
  CHECK(run_cli("detect-cp --input " + csv_path).exit_code == 2);

  // Corrupt a number: the error names the line.
  lines[5].replace(lines[5].find(','), 3, ",ab");
  {
    std::ofstream out(csv_path);
    for (const auto& line : lines) out << line << '\n';
  }
  const CliResult r = run_cli("detect-cp --input " + csv_path, /*merge_stderr=*/true);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("line 6") != std::string::npos);
  std::remove(csv_path.c_str());
}

TEST_CASE("oracle runs are deterministic and pass their own check") {
  const CliResult a = run_cli("oracle --samples 5 --seed 7");
  const CliResult b = run_cli("oracle --samples 5 --seed 7");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);

  const nlohmann::json j = nlohmann::json::parse(a.out);
  CHECK(j["samples"] == 5);
  CHECK(j["max_deviation"].get<double>() < 1e-5);
  REQUIRE(j["entries"].size() == 5);
  CHECK(j["entries"][0].contains("closed"));
  CHECK(j["entries"][0].contains("brute_force"));

  const CliResult c = run_cli("oracle --samples 3 --seed 8");
  CHECK(c.out != a.out);
}

TEST_CASE("oracle accepts a forced state") {
  const CliResult mixed = run_cli("oracle --dx 0 --dz 0");
  REQUIRE(mixed.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(mixed.out);
  REQUIRE(j["entries"].size() == 1);
  CHECK(j["entries"][0]["deviation"].get<double>() < 1e-9);

  const CliResult singlet = run_cli("oracle --dx -1 --dz -1");
  REQUIRE(singlet.exit_code == 0);
  const nlohmann::json js = nlohmann::json::parse(singlet.out);
  CHECK(js["entries"][0]["closed"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(js["entries"][0]["brute_force"].get<double>() ==
        doctest::Approx(1.0).epsilon(1e-6));

  CHECK(run_cli("oracle --dx 0.9 --dz 0.9").exit_code == 2);  // unphysical
  CHECK(run_cli("oracle --dx 0.5").exit_code == 2);           // --dx needs --dz
}
