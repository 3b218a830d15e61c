#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pintana {

inline constexpr const char* kCsvStamp = "# pintana-results v1";

struct ResultRow {
  std::string problem;
  std::string method;   // lfa | sama | ra | measured
  std::string variant;
  std::string relax;
  int levels = 2;
  std::string cycle;
  int m = 0;
  int m2 = 0;
  int nx = 0;
  int nt = 0;
  int k = 1;
  std::optional<double> value;  // empty only on error or exclusion marker rows
  std::optional<double> theta_x;
  std::optional<double> theta_y;
  std::optional<double> omega0;
  std::string extra;  // ';'-separated key=value annotations
};

// Column names, in order.
const std::vector<std::string>& csv_columns();

std::string format_real(double v);  // %.17g

// Stable sort by (method, variant, k), then stamp line, header and rows.
void write_csv(std::ostream& out, std::vector<ResultRow> rows);

std::vector<ResultRow> read_csv(std::istream& in);

}  // namespace pintana
