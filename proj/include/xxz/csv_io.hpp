#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "xxz/sweep.hpp"

namespace xxz {

// The one and only CSV schema for sweep output.
inline constexpr std::string_view kCsvHeader =
    "param,value,L,J,delta,T,dx,dz,concurrence,eof,qd,d_branch,f,u,s,c,chi,m";

// Shortest-exact decimal is overkill to hand-roll; 17 significant digits
// round-trip any double bit-for-bit.
std::string format_double(double x);

std::string csv_line(const SweepRecord& r);
void write_csv(std::ostream& out, const std::vector<SweepRecord>& records);

// Strict reader for the schema above: exact header, 18 fields per row, fully
// parsed numbers, known d_branch and param tags, one param per file.  Errors
// are ParameterError carrying the 1-based line number.
std::vector<SweepRecord> read_csv(std::istream& in);

// JSON mirrors of the CSV columns (same names, snake_case).  `with_param`
// false drops the param/value echo, for single-point output.
nlohmann::json record_to_json(const SweepRecord& r, bool with_param = true);
nlohmann::json records_to_json(const std::vector<SweepRecord>& records);
nlohmann::json report_to_json(const CuspReport& report);

}  // namespace xxz
