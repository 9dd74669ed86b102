#include "xxz/csv_io.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>

namespace xxz {

namespace {

constexpr std::array<const char*, 18> kColumns = {
    "param", "value", "L",  "J",  "delta", "T", "dx", "dz", "concurrence",
    "eof",   "qd",    "d_branch", "f", "u", "s", "c", "chi", "m"};

Branch branch_from_name(const std::string& name, std::size_t line) {
  if (name == "X") return Branch::X;
  if (name == "Z") return Branch::Z;
  if (name == "TIE") return Branch::TIE;
  throw ParameterError("line " + std::to_string(line) + ": unknown d_branch '" + name + "'");
}

double parse_double(const std::string& text, const char* column, std::size_t line) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw ParameterError("line " + std::to_string(line) + ": bad number '" + text +
                         "' in column '" + column + "'");
  return v;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string csv_line(const SweepRecord& r) {
  std::string out = r.param;
  auto add = [&out](const std::string& field) {
    out += ',';
    out += field;
  };
  add(format_double(r.value));
  add(std::to_string(r.L));
  add(format_double(r.J));
  add(format_double(r.delta));
  add(format_double(r.T));
  add(format_double(r.dx));
  add(format_double(r.dz));
  add(format_double(r.concurrence));
  add(format_double(r.eof));
  add(format_double(r.qd));
  add(branch_name(r.d_branch));
  add(format_double(r.f));
  add(format_double(r.u));
  add(format_double(r.s));
  add(format_double(r.c));
  add(format_double(r.chi));
  add(format_double(r.m));
  return out;
}

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) out << csv_line(r) << '\n';
}

std::vector<SweepRecord> read_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw ParameterError("line 1: missing CSV header");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader)
    throw ParameterError("line 1: header does not match the sweep CSV schema");

  std::vector<SweepRecord> records;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    const std::vector<std::string> f = split_fields(line);
    if (f.size() != kColumns.size())
      throw ParameterError("line " + std::to_string(line_no) + ": expected " +
                           std::to_string(kColumns.size()) + " fields, got " +
                           std::to_string(f.size()));

    SweepRecord r;
    // Validates the tag, and pins every file to a single swept parameter.
    sweep_param_from_name(f[0]);
    r.param = f[0];
    if (!records.empty() && r.param != records.front().param)
      throw ParameterError("line " + std::to_string(line_no) +
                           ": param changes mid-file ('" + records.front().param +
                           "' then '" + r.param + "')");
    r.value = parse_double(f[1], "value", line_no);
    const double l_val = parse_double(f[2], "L", line_no);
    r.L = static_cast<int>(l_val);
    if (r.L != l_val)
      throw ParameterError("line " + std::to_string(line_no) + ": L must be an integer");
    r.J = parse_double(f[3], "J", line_no);
    r.delta = parse_double(f[4], "delta", line_no);
    r.T = parse_double(f[5], "T", line_no);
    r.dx = parse_double(f[6], "dx", line_no);
    r.dz = parse_double(f[7], "dz", line_no);
    r.concurrence = parse_double(f[8], "concurrence", line_no);
    r.eof = parse_double(f[9], "eof", line_no);
    r.qd = parse_double(f[10], "qd", line_no);
    r.d_branch = branch_from_name(f[11], line_no);
    r.f = parse_double(f[12], "f", line_no);
    r.u = parse_double(f[13], "u", line_no);
    r.s = parse_double(f[14], "s", line_no);
    r.c = parse_double(f[15], "c", line_no);
    r.chi = parse_double(f[16], "chi", line_no);
    r.m = parse_double(f[17], "m", line_no);
    records.push_back(std::move(r));
  }
  return records;
}

namespace {

void fill_common(nlohmann::json& j, const SweepRecord& r) {
  j["L"] = r.L;
  j["J"] = r.J;
  j["delta"] = r.delta;
  j["T"] = r.T;
  j["dx"] = r.dx;
  j["dz"] = r.dz;
  j["concurrence"] = r.concurrence;
  j["eof"] = r.eof;
  j["qd"] = r.qd;
  j["d_branch"] = branch_name(r.d_branch);
  j["f"] = r.f;
  j["u"] = r.u;
  j["s"] = r.s;
  j["c"] = r.c;
  j["chi"] = r.chi;
  j["m"] = r.m;
}

}  // namespace

nlohmann::json record_to_json(const SweepRecord& r, bool with_param) {
  nlohmann::json j = nlohmann::json::object();
  if (with_param) {
    j["param"] = r.param;
    j["value"] = r.value;
  }
  fill_common(j, r);
  return j;
}

nlohmann::json records_to_json(const std::vector<SweepRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) arr.push_back(record_to_json(r));
  return arr;
}

nlohmann::json report_to_json(const CuspReport& report) {
  nlohmann::json j;
  j["field"] = report.field;
  j["kappa"] = report.kappa;
  j["candidates"] = nlohmann::json::array();
  for (const auto& c : report.candidates) {
    j["candidates"].push_back({{"location", c.location},
                               {"jump", c.jump},
                               {"score", c.score},
                               {"kind", c.kind}});
  }
  j["caveat"] = report.caveat;
  return j;
}

}  // namespace xxz
