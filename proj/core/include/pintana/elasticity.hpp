#pragma once

#include "pintana/hierarchy.hpp"
#include "pintana/linalg.hpp"

namespace pintana {

enum class DegeneratePolicy { IdentityProjector, Throw };

// Incompressible linear elasticity on a uniform quadrilateral mesh,
// Q2 velocity/displacement and Q1 pressure, implicit Euler in time.
struct ElasticityParams {
  double rho = 1.0;
  double mu = 1.0;
  double dx = 0.0;
  double dt = 0.0;
  DegeneratePolicy policy = DegeneratePolicy::IdentityProjector;

  void validate() const;
};

// 1D Q2 element symbols for one frequency, dof order (node, midpoint).
CMatrix mass_symbol_1d(double theta, double dx);
CMatrix stiffness_symbol_1d(double theta, double dx);

// 8x1 symbol of the discrete gradient acting on Q1 pressure (x block, then y).
CMatrix gradient_symbol(const Frequency& f, double dx);

// Scalar Q2 field symbols. The four dof types per cell are ordered
// (node, x-edge, y-edge, center).
struct ElasticitySymbolSet {
  CMatrix mass;       // 4x4
  CMatrix stiffness;  // 4x4
  CMatrix grad;       // 8x1, x then y velocity component
  CMatrix h;          // 8x8, rho M + dt^2 mu K
  CMatrix schur;      // 1x1, grad^H h^-1 grad
  CMatrix projector;  // 8x8, I - h^-1 grad schur^-1 grad^H
  bool degenerate = false;
};

ElasticitySymbolSet elasticity_symbol_set(const Frequency& f, const ElasticityParams& p, int step_scale = 1);

// 16x16 one-step propagator symbol, unknowns ordered (v_x, v_y, u_x, u_y),
// each with the four Q2 dof types.
CMatrix phi_symbol_elasticity(const Frequency& f, const ElasticityParams& p, int step_scale = 1);

ProblemSymbols elasticity_symbols(const ElasticityParams& p);

}  // namespace pintana
