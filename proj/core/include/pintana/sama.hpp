#pragma once

#include <vector>

#include "pintana/hierarchy.hpp"
#include "pintana/lfa.hpp"

namespace pintana {

struct SamaVariant {
  Scope scope = Scope::Full;
  NormKind norm = NormKind::Exact2;
};

std::string to_string(const SamaVariant& v);

// Space-time block matrices for one spatial frequency, with the initial
// time point as index 0.
struct SamaOperators {
  CMatrix ac;       // coarse space-time operator, (NT+1) q
  CMatrix as;       // Schur-complement operator on the coarse grid
  CMatrix interp;   // ideal interpolation P_phi, (nt+1) q x (NT+1) q
  CMatrix restrict; // injection R_I, (NT+1) q x (nt+1) q
};

SamaOperators sama_operators(const LevelSymbols& s, const Hierarchy& h, const MethodSpec& method,
                             CoarseSchur schur = CoarseSchur::CoarsePower);

// Iteration matrix assembled by literally composing the block matrices.
// Full scope is (nt+1) q square; C-point scope keeps the C-point rows and
// columns, (NT+1) q square.
CMatrix sama_blocks(const LevelSymbols& s, const Hierarchy& h, const MethodSpec& method, Scope scope,
                    CoarseSchur schur = CoarseSchur::CoarsePower);

// norms of block^k for k = 1..k_max by repeated multiplication.
std::vector<double> sama_power_series(const CMatrix& block, int k_max, NormKind norm);

// Same quantities as sama_power_series(sama_blocks(...)) computed from the
// C-point operator G, using E^k = P_phi G^k R_I. Two-level cycles use the
// block Toeplitz structure of G.
std::vector<double> sama_frequency_values(const LevelSymbols& s, const Hierarchy& h, const MethodSpec& method,
                                          const SamaVariant& variant, int k_max,
                                          CoarseSchur schur = CoarseSchur::CoarsePower);

struct SamaOptions {
  SamaVariant variant;
  int k_max = 10;
  ThetaGrid theta;
  CoarseSchur schur = CoarseSchur::CoarsePower;
  bool allow_large_exact = false;  // exact 2-norm on full scope above kDenseSpectralLimit
  bool keep_samples = false;
};

SweepResult sigma_sama(const ProblemSymbols& problem, const Hierarchy& h, const MethodSpec& method,
                       const SamaOptions& opt);

}  // namespace pintana
