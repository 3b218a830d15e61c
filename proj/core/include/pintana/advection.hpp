#pragma once

#include <Eigen/Dense>

#include "pintana/hierarchy.hpp"
#include "pintana/linalg.hpp"

namespace pintana {

// u_t + c u_x = 0, periodic in space, implicit Euler with first-order upwind.
struct AdvectionParams {
  double c = 1.0;
  double dx = 0.0;
  double dt = 0.0;

  void validate() const;
  double courant(int step_scale = 1) const { return c * step_scale * dt / dx; }
};

// [1 + lambda (1 - e^{-i theta})]^{-1} with lambda = c * step_scale * dt / dx.
cplx phi_symbol_advection(double theta, const AdvectionParams& p, int step_scale = 1);

// Dense nx x nx inverse of the periodic bidiagonal step matrix
// (diagonal 1 + lambda, subdiagonal and corner -lambda).
Eigen::MatrixXd assemble_propagator(int nx, const AdvectionParams& p, int step_scale = 1);

// One implicit step: solves the periodic bidiagonal system in O(nx).
void advection_step(const Eigen::VectorXd& in, Eigen::VectorXd& out, double lambda);

ProblemSymbols advection_symbols(const AdvectionParams& p);

}  // namespace pintana
