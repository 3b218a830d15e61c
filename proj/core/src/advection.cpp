#include "pintana/advection.hpp"

#include <cmath>

#include "pintana/errors.hpp"

namespace pintana {

void AdvectionParams::validate() const {
  if (!(dx > 0) || !std::isfinite(dx)) throw ConfigError("advection: dx must be positive");
  if (!(dt > 0) || !std::isfinite(dt)) throw ConfigError("advection: dt must be positive");
  if (!(c >= 0) || !std::isfinite(c)) throw ConfigError("advection: wave speed c must be non-negative");
}

cplx phi_symbol_advection(double theta, const AdvectionParams& p, int step_scale) {
  p.validate();
  if (step_scale < 1) throw ConfigError("advection: step scale must be positive");
  const double lambda = p.courant(step_scale);
  const cplx d = 1.0 + lambda * (1.0 - std::exp(cplx(0.0, -theta)));
  return 1.0 / d;
}

Eigen::MatrixXd assemble_propagator(int nx, const AdvectionParams& p, int step_scale) {
  p.validate();
  if (nx < 2) throw ConfigError("advection: nx must be at least 2");
  const double lambda = p.courant(step_scale);
  CMatrix a = CMatrix::Zero(nx, nx);
  for (int j = 0; j < nx; ++j) {
    a(j, j) = 1.0 + lambda;
    a(j, (j + nx - 1) % nx) = -lambda;
  }
  return inverse(a).real();
}

void advection_step(const Eigen::VectorXd& in, Eigen::VectorXd& out, double lambda) {
  const Eigen::Index n = in.size();
  out.resize(n);
  const double diag = 1.0 + lambda;
  const double a = lambda / diag;
  // Unroll the ring once to get the last entry, then sweep forward.
  double acc = 0.0, pw = 1.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    acc += pw * in(n - 1 - k) / diag;
    pw *= a;
  }
  double prev = acc / (1.0 - pw);
  for (Eigen::Index j = 0; j < n; ++j) {
    prev = in(j) / diag + a * prev;
    out(j) = prev;
  }
}

ProblemSymbols advection_symbols(const AdvectionParams& p) {
  p.validate();
  ProblemSymbols s;
  s.name = "advection";
  s.spatial_dim = 1;
  s.block_size = 1;
  s.phi = [p](const Frequency& f, int scale) {
    CMatrix r(1, 1);
    r(0, 0) = phi_symbol_advection(f.theta_x, p, scale);
    return r;
  };
  return s;
}

}  // namespace pintana
