#include "pushsum/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "pushsum/error.hpp"

namespace pushsum {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::optional<double> parse_optional(const std::string& field, std::size_t line_no) {
  if (field.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (end == field.c_str() || *end != '\0') {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": bad number '" + field + "'");
  }
  return v;
}

void write_optional(std::ostream& os, const std::optional<double>& v, double divisor) {
  os << ',';
  if (v) os << format_value(*v / divisor);
}

}  // namespace

std::string format_value(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

void write_reports(std::ostream& os, const std::vector<RateReport>& rows, double rate_divisor) {
  os << kReportHeader << '\n';
  for (const auto& r : rows) {
    os << r.graph << ',' << r.n << ',' << format_value(r.q);
    write_optional(os, r.emp_rate, rate_divisor);
    write_optional(os, r.emp_std, rate_divisor);
    write_optional(os, r.b_general, rate_divisor);
    write_optional(os, r.b_symmetric, rate_divisor);
    write_optional(os, r.b_transitive, rate_divisor);
    write_optional(os, r.b_eta, rate_divisor);
    os << ',';
    for (std::size_t i = 0; i < r.flags.size(); ++i) os << (i ? ";" : "") << r.flags[i];
    os << '\n';
  }
}

std::vector<RateReport> read_reports(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kReportHeader) {
    throw Error(ErrorKind::Parse, "missing or unexpected CSV header");
  }
  std::vector<RateReport> rows;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 10) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected 10 fields");
    }
    RateReport r;
    r.graph = f[0];
    char* end = nullptr;
    r.n = std::strtoull(f[1].c_str(), &end, 10);
    if (f[1].empty() || *end != '\0') throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": bad N");
    const auto q = parse_optional(f[2], line_no);
    if (!q) throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": missing q");
    r.q = *q;
    r.emp_rate = parse_optional(f[3], line_no);
    r.emp_std = parse_optional(f[4], line_no);
    r.b_general = parse_optional(f[5], line_no);
    r.b_symmetric = parse_optional(f[6], line_no);
    r.b_transitive = parse_optional(f[7], line_no);
    r.b_eta = parse_optional(f[8], line_no);
    if (!f[9].empty()) r.flags = split(f[9], ';');
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace pushsum
