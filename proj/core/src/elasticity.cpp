#include "pintana/elasticity.hpp"

#include <cmath>
#include <string>

#include "pintana/errors.hpp"

namespace pintana {

void ElasticityParams::validate() const {
  if (!(rho > 0) || !std::isfinite(rho)) throw ConfigError("elasticity: rho must be positive");
  if (!(mu > 0) || !std::isfinite(mu)) throw ConfigError("elasticity: mu must be positive");
  if (!(dx > 0) || !std::isfinite(dx)) throw ConfigError("elasticity: dx must be positive");
  if (!(dt > 0) || !std::isfinite(dt)) throw ConfigError("elasticity: dt must be positive");
}

CMatrix mass_symbol_1d(double theta, double dx) {
  const double c = std::cos(theta), ch = std::cos(theta / 2);
  CMatrix m(2, 2);
  m << 8.0 - 2.0 * c, 4.0 * ch, 4.0 * ch, 16.0;
  return m * (dx / 30.0);
}

CMatrix stiffness_symbol_1d(double theta, double dx) {
  const double c = std::cos(theta), ch = std::cos(theta / 2);
  CMatrix k(2, 2);
  k << 14.0 + 2.0 * c, -16.0 * ch, -16.0 * ch, 16.0;
  return k / (3.0 * dx);
}

namespace {

CMatrix block_diag2(const CMatrix& a) {
  const auto n = a.rows();
  CMatrix r = CMatrix::Zero(2 * n, 2 * n);
  r.topLeftCorner(n, n) = a;
  r.bottomRightCorner(n, n) = a;
  return r;
}

}  // namespace

CMatrix gradient_symbol(const Frequency& f, double dx) {
  const double t1 = f.theta_x, t2 = f.theta_y;
  const cplx g(0.0, -dx / 9.0);
  CMatrix b(8, 1);
  b(0, 0) = g * std::sin(t1);
  b(1, 0) = g * 4.0 * std::sin(t1 / 2);
  b(2, 0) = g * 2.0 * std::sin(t1) * std::cos(t2 / 2);
  b(3, 0) = g * 8.0 * std::sin(t1 / 2) * std::cos(t2 / 2);
  b(4, 0) = g * std::sin(t2);
  b(5, 0) = g * 2.0 * std::sin(t2) * std::cos(t1 / 2);
  b(6, 0) = g * 4.0 * std::sin(t2 / 2);
  b(7, 0) = g * 8.0 * std::sin(t2 / 2) * std::cos(t1 / 2);
  return b;
}

ElasticitySymbolSet elasticity_symbol_set(const Frequency& f, const ElasticityParams& p, int step_scale) {
  p.validate();
  if (step_scale < 1) throw ConfigError("elasticity: step scale must be positive");
  const double t1 = f.theta_x, t2 = f.theta_y, dx = p.dx;
  const double dt = p.dt * step_scale;

  const CMatrix m1 = mass_symbol_1d(t1, dx), m2 = mass_symbol_1d(t2, dx);
  const CMatrix k1 = stiffness_symbol_1d(t1, dx), k2 = stiffness_symbol_1d(t2, dx);

  ElasticitySymbolSet s;
  s.mass = kron(m2, m1);
  s.stiffness = kron(m2, k1) + kron(k2, m1);

  s.grad = gradient_symbol(f, dx);

  s.h = block_diag2(p.rho * s.mass + dt * dt * p.mu * s.stiffness);

  if (s.grad.norm() < 1e-12 * dx) {
    if (p.policy == DegeneratePolicy::Throw)
      throw DegenerateFrequency("elasticity: divergence symbol vanishes at theta=(" + std::to_string(t1) + ", " +
                                std::to_string(t2) + ")");
    s.degenerate = true;
    s.schur = CMatrix::Zero(1, 1);
    s.projector = CMatrix::Identity(8, 8);
    return s;
  }
  const CMatrix hinv_b = solve(s.h, s.grad);
  s.schur = s.grad.adjoint() * hinv_b;
  s.projector = CMatrix::Identity(8, 8) - hinv_b * solve(s.schur, s.grad.adjoint());
  return s;
}

CMatrix phi_symbol_elasticity(const Frequency& f, const ElasticityParams& p, int step_scale) {
  const ElasticitySymbolSet s = elasticity_symbol_set(f, p, step_scale);
  const double dt = p.dt * step_scale;
  const CMatrix mfull = block_diag2(s.mass), kfull = block_diag2(s.stiffness);
  const CMatrix pm = s.projector * solve(s.h, mfull);
  const CMatrix pk = s.projector * solve(s.h, kfull);
  CMatrix phi(16, 16);
  phi.topLeftCorner(8, 8) = p.rho * pm;
  phi.topRightCorner(8, 8) = -dt * p.mu * pk;
  phi.bottomLeftCorner(8, 8) = p.rho * dt * pm;
  phi.bottomRightCorner(8, 8) = CMatrix::Identity(8, 8) - dt * dt * p.mu * pk;
  return phi;
}

ProblemSymbols elasticity_symbols(const ElasticityParams& p) {
  p.validate();
  ProblemSymbols s;
  s.name = "elasticity";
  s.spatial_dim = 2;
  s.block_size = 16;
  s.phi = [p](const Frequency& f, int scale) { return phi_symbol_elasticity(f, p, scale); };
  s.degenerate = [dx = p.dx](const Frequency& f) { return gradient_symbol(f, dx).norm() < 1e-12 * dx; };
  return s;
}

}  // namespace pintana
