#include "pintana/frequency.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "pintana/errors.hpp"

namespace pintana {

std::vector<double> symmetric_samples(double half_width, double h) {
  if (!(h > 0) || !(half_width > 0)) throw ConfigError("frequency spacing must be positive");
  const double ratio = 2.0 * half_width / h;
  const long n = std::lround(ratio);
  if (n < 1 || std::abs(ratio - static_cast<double>(n)) > 1e-9 * std::max(1.0, ratio))
    throw ConfigError("frequency spacing must divide the sampled interval");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (long j = 1; j <= n; ++j) out[static_cast<std::size_t>(j - 1)] = -half_width + static_cast<double>(j) * h;
  return out;
}

std::vector<Frequency> ThetaGrid::points() const {
  const auto s = symmetric_samples(std::numbers::pi, spacing);
  std::vector<Frequency> out;
  if (dim == 1) {
    out.reserve(s.size());
    for (double t : s) out.push_back({t, 0.0, 0.0});
  } else if (dim == 2) {
    out.reserve(s.size() * s.size());
    for (double tx : s)
      for (double ty : s) out.push_back({tx, ty, 0.0});
  } else {
    throw ConfigError("theta grid dimension must be 1 or 2");
  }
  return out;
}

std::size_t ThetaGrid::size() const {
  const std::size_t n = symmetric_samples(std::numbers::pi, spacing).size();
  return dim == 2 ? n * n : n;
}

double parse_angle(const std::string& raw) {
  std::string t;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t.empty()) throw ConfigError("empty angle");
  const auto pos = t.find("pi");
  try {
    if (pos == std::string::npos) {
      std::size_t used = 0;
      double v = std::stod(t, &used);
      if (used != t.size()) throw ConfigError("malformed angle '" + raw + "'");
      return v;
    }
    std::string pre = t.substr(0, pos);
    std::string post = t.substr(pos + 2);
    if (!pre.empty() && pre.back() == '*') pre.pop_back();
    double coef = 1.0;
    if (pre == "-") coef = -1.0;
    else if (pre == "+" || pre.empty()) coef = 1.0;
    else {
      std::size_t used = 0;
      coef = std::stod(pre, &used);
      if (used != pre.size()) throw ConfigError("malformed angle '" + raw + "'");
    }
    double den = 1.0;
    if (!post.empty()) {
      if (post[0] != '/') throw ConfigError("malformed angle '" + raw + "'");
      std::size_t used = 0;
      den = std::stod(post.substr(1), &used);
      if (used != post.size() - 1 || den == 0.0) throw ConfigError("malformed angle '" + raw + "'");
    }
    return coef * std::numbers::pi / den;
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ConfigError*>(&e)) throw;
    throw ConfigError("malformed angle '" + raw + "'");
  }
}

std::string format_angle(double v) {
  for (int den : {1, 2, 3, 4, 8, 16, 32, 64, 128, 256}) {
    const double num = v * den / std::numbers::pi;
    const long k = std::lround(num);
    if (k != 0 && std::abs(num - static_cast<double>(k)) < 1e-12) {
      std::string s = (k == 1 ? "" : k == -1 ? "-" : std::to_string(k)) + "pi";
      if (den != 1) s += "/" + std::to_string(den);
      return s;
    }
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace pintana
