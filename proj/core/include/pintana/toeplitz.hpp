#pragma once

#include <vector>

#include "pintana/hierarchy.hpp"

namespace pintana {

// Lower-triangular block Toeplitz matrix with n+1 block rows, stored by its
// first block column. Blocks before `lead` are known to be zero.
struct BlockToeplitz {
  std::vector<CMatrix> blocks;
  int lead = 0;

  int size() const { return static_cast<int>(blocks.size()); }
  bool zero() const { return lead >= size(); }
  CMatrix dense() const;
};

// C-point error propagator of the two-level cycle on n+1 coarse points
// (index 0 is the initial time): blocks phic^{j-1} (phi^m - phic) for F,
// shifted by one and multiplied by phi^m for FCF.
BlockToeplitz two_level_cpoint_operator(const CMatrix& phi, const CMatrix& phic, int m, int n, Relaxation relax);

// Truncated product, exact for finite sections of lower-triangular Toeplitz matrices.
BlockToeplitz multiply(const BlockToeplitz& a, const BlockToeplitz& b);

}  // namespace pintana
