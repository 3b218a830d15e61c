#pragma once

#include <complex>
#include <vector>

#include "pintana/hierarchy.hpp"

namespace pintana {

// Eigenvalue pair of the fine and coarse step for one spatial mode.
struct EigenPair {
  cplx lambda;
  cplx mu;
};

// Closed-form norms of the scalar two-level error propagator on NT coarse
// intervals (index 0 included). C-point scope: 1- and inf-norms coincide.
double ra_cpoint_bound(const EigenPair& p, int m, int nt_coarse, Relaxation relax, int k = 1);

// Full fine-grid scope: sqrt(||E^k||_1 ||E^k||_inf).
double ra_full_norm_one(const EigenPair& p, int m, int nt_coarse, Relaxation relax, int k = 1);
double ra_full_norm_inf(const EigenPair& p, int m, int nt_coarse, Relaxation relax, int k = 1);
double ra_full_bound(const EigenPair& p, int m, int nt_coarse, Relaxation relax, int k = 1);

inline constexpr double kSimultaneityTolerance = 1e-8;

// Eigen-decomposition of phi reused for phic. Valid when the two commute;
// simultaneity_residual measures how far U^-1 phic U is from diagonal.
struct SimultaneousEigs {
  std::vector<EigenPair> pairs;
  double kappa = 1.0;  // cond_2(U)
  double simultaneity_residual = 0.0;
  bool diagonalizable = true;
  bool simultaneous = true;
};

SimultaneousEigs simultaneous_eigs(const CMatrix& phi, const CMatrix& phic);

struct SystemBound {
  double value = 0.0;
  std::size_t used = 0;
  std::vector<std::size_t> excluded;  // indices of frequencies that failed the checks
};

// max_n kappa_n * max_l bound(pair_l). Frequencies where phi is not
// diagonalizable are excluded; pairs of non-simultaneous frequencies use
// the diagonal of U^-1 phic U, and the residual is left to the caller.
SystemBound ra_system_bound(const std::vector<SimultaneousEigs>& per_frequency, int m, int nt_coarse,
                            Relaxation relax, int k = 1, Scope scope = Scope::CPoints);

struct RaOptions {
  Scope scope = Scope::CPoints;
  int k_max = 10;
  ThetaGrid theta;
  bool keep_samples = false;
};

// Two-level only. Scalar problems use the closed forms directly; block
// problems go through simultaneous_eigs and the kappa-weighted bound.
SweepResult sigma_ra(const ProblemSymbols& problem, const Hierarchy& h, Relaxation relax, const RaOptions& opt);

}  // namespace pintana
