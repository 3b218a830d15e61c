#include "pintana/harness/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "pintana/errors.hpp"

namespace pintana {

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {"problem", "method", "variant", "relax",   "levels", "cycle",
                                                "m",       "m2",     "nx",      "nt",      "k",      "value",
                                                "theta_x", "theta_y", "omega0", "extra"};
  return cols;
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string opt(const std::optional<double>& v) { return v ? format_real(*v) : std::string(); }

// Text fields never contain commas by construction; quote defensively anyway.
std::string field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::optional<double> parse_opt(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stod(s);
}

}  // namespace

void write_csv(std::ostream& out, std::vector<ResultRow> rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    if (a.method != b.method) return a.method < b.method;
    if (a.variant != b.variant) return a.variant < b.variant;
    return a.k < b.k;
  });
  out << kCsvStamp << '\n';
  const auto& cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& r : rows) {
    out << field(r.problem) << ',' << field(r.method) << ',' << field(r.variant) << ',' << field(r.relax) << ','
        << r.levels << ',' << field(r.cycle) << ',' << r.m << ',' << r.m2 << ',' << r.nx << ',' << r.nt << ',' << r.k
        << ',' << opt(r.value) << ',' << opt(r.theta_x) << ',' << opt(r.theta_y) << ',' << opt(r.omega0) << ','
        << field(r.extra) << '\n';
  }
}

std::vector<ResultRow> read_csv(std::istream& in) {
  std::string line;
  std::vector<ResultRow> rows;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto f = split_line(line);
    if (!header) {
      if (f != csv_columns()) throw ConfigError("csv: unexpected header");
      header = true;
      continue;
    }
    if (f.size() != csv_columns().size()) throw ConfigError("csv: wrong number of fields");
    ResultRow r;
    r.problem = f[0];
    r.method = f[1];
    r.variant = f[2];
    r.relax = f[3];
    r.levels = std::stoi(f[4]);
    r.cycle = f[5];
    r.m = std::stoi(f[6]);
    r.m2 = std::stoi(f[7]);
    r.nx = std::stoi(f[8]);
    r.nt = std::stoi(f[9]);
    r.k = std::stoi(f[10]);
    r.value = parse_opt(f[11]);
    r.theta_x = parse_opt(f[12]);
    r.theta_y = parse_opt(f[13]);
    r.omega0 = parse_opt(f[14]);
    r.extra = f[15];
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace pintana
