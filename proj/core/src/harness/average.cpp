#include "pintana/harness/average.hpp"

#include <cmath>
#include <string>

#include "pintana/errors.hpp"

namespace pintana {

std::optional<double> average_reduction(const std::vector<double>& values, int k_lo, int k_hi) {
  if (k_lo < 1 || k_hi <= k_lo || static_cast<std::size_t>(k_hi) > values.size())
    throw ConfigError("average window " + std::to_string(k_lo) + ":" + std::to_string(k_hi) +
                      " does not fit a series of length " + std::to_string(values.size()));
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = k_hi - k_lo + 1;
  for (int k = k_lo; k <= k_hi; ++k) {
    const double v = values[static_cast<std::size_t>(k - 1)];
    if (!(v > 0) || !std::isfinite(v)) return std::nullopt;
    const double y = std::log10(v);
    sx += k;
    sy += y;
    sxx += static_cast<double>(k) * k;
    sxy += k * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return std::pow(10.0, slope);
}

}  // namespace pintana
