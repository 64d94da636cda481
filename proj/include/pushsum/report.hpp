#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pushsum {

/// One CSV row: empirical rate and every populated bound at a single q.
/// Values are natural-log rates; empty optionals are written as empty fields.
struct RateReport {
  std::string graph;
  std::size_t n = 0;
  double q = 0.0;
  std::optional<double> emp_rate;
  std::optional<double> emp_std;
  std::optional<double> b_general;
  std::optional<double> b_symmetric;
  std::optional<double> b_transitive;
  std::optional<double> b_eta;
  std::vector<std::string> flags;  // joined with ';' in the flags column
};

inline constexpr std::string_view kReportHeader =
    "graph,N,q,emp_rate,emp_std,b_general,b_symmetric,b_transitive,b_eta,flags";

// 10 significant digits; infinities as "inf" / "-inf".
std::string format_value(double v);

// rate_divisor converts natural-log rates for display (log 2 for bits, log 10
// for decades). q and N are never rescaled.
void write_reports(std::ostream& os, const std::vector<RateReport>& rows, double rate_divisor = 1.0);
std::vector<RateReport> read_reports(std::istream& is);

}  // namespace pushsum
