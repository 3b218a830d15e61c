#pragma once

#include <optional>
#include <vector>

namespace pintana {

// 10^slope of the least-squares line through (k, log10 value) for
// k = k_lo..k_hi, where values[k-1] is the value at iteration k.
// Returns nullopt when a value in the window is not positive (the
// iteration has converged exactly). Throws ConfigError for a bad window.
std::optional<double> average_reduction(const std::vector<double>& values, int k_lo, int k_hi);

}  // namespace pintana
