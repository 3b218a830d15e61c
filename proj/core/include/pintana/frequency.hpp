#pragma once

#include <string>
#include <vector>

namespace pintana {

// One Fourier sample. theta_y is unused for 1D problems, omega0 for
// methods that sample space only.
struct Frequency {
  double theta_x = 0.0;
  double theta_y = 0.0;
  double omega0 = 0.0;
};

// Uniform samples of (-w, w] with spacing h: -w + j*h, j = 1..2w/h.
// Throws ConfigError when 2w/h is not (numerically) an integer.
std::vector<double> symmetric_samples(double half_width, double h);

struct ThetaGrid {
  int dim = 1;         // 1 or 2 spatial dimensions
  double spacing = 0;  // h_theta

  // Row-major order, theta_x outer.
  std::vector<Frequency> points() const;
  std::size_t size() const;
};

// Accepts plain numbers and multiples of pi: "0.25", "pi/32", "15pi/16",
// "3*pi/4", "-pi/2".
double parse_angle(const std::string& text);

// Inverse of parse_angle for nice multiples of pi; falls back to %.17g.
std::string format_angle(double value);

}  // namespace pintana
