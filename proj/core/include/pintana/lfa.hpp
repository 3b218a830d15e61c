#pragma once

#include "pintana/hierarchy.hpp"

namespace pintana {

// Which operator stands in for the Schur complement on the first coarse
// level of a three-level cycle: the m2-th power of the coarse step (what
// the cycle actually applies) or the (m*m2)-th power of the fine step.
enum class CoarseSchur { CoarsePower, FinePower };

// Two-level space-time symbol, an (m q) x (m q) matrix for temporal
// frequency omega0 in (-pi/m, pi/m].
CMatrix two_level_symbol(const CMatrix& phi, const CMatrix& phic, int m, double omega0, Relaxation relax);

// Three-level symbol, (m2 m q) square, omega0 in (-pi/(m m2), pi/(m m2)].
CMatrix three_level_symbol(const LevelSymbols& s, int m, int m2, double omega0, const MethodSpec& method,
                           CoarseSchur schur = CoarseSchur::CoarsePower);

// The symbol factors as Z G R with R Z = I, so E^k = Z G^k R. These return
// the interpolation column Z and the first-coarse-level operator G.
struct LfaFactors {
  CMatrix z;
  CMatrix g;
};
LfaFactors two_level_factors(const CMatrix& phi, const CMatrix& phic, int m, double omega0, Relaxation relax);
LfaFactors three_level_factors(const LevelSymbols& s, int m, int m2, double omega0, const MethodSpec& method,
                               CoarseSchur schur = CoarseSchur::CoarsePower);

struct LfaOptions {
  int k_max = 10;
  ThetaGrid theta;
  double omega_spacing = 0.0;  // 0 selects pi/32
  CoarseSchur schur = CoarseSchur::CoarsePower;
  bool keep_samples = false;
};

// max over (theta, omega0) of ||E^k||_2 for k = 1..k_max. Sample points where
// the coarse symbol is singular (the space-time constant mode) are skipped
// and counted in series.excluded.
SweepResult sigma_lfa(const ProblemSymbols& problem, const Hierarchy& h, const MethodSpec& method,
                      const LfaOptions& opt);

}  // namespace pintana
