#include "pintana/toeplitz.hpp"

#include <algorithm>

#include "pintana/errors.hpp"

namespace pintana {

CMatrix BlockToeplitz::dense() const {
  if (blocks.empty()) return {};
  const auto q = blocks[0].rows();
  const int n = size();
  CMatrix d = CMatrix::Zero(n * q, n * q);
  for (int j = 0; j < n; ++j)
    for (int i = std::max(j, j + lead); i < n; ++i) d.block(i * q, j * q, q, q) = blocks[static_cast<std::size_t>(i - j)];
  return d;
}

BlockToeplitz two_level_cpoint_operator(const CMatrix& phi, const CMatrix& phic, int m, int n, Relaxation relax) {
  if (n < 1) throw ConfigError("toeplitz: need at least one coarse interval");
  const auto q = phi.rows();
  const CMatrix phim = matrix_power(phi, m);
  const CMatrix jump = phim - phic;
  BlockToeplitz t;
  t.blocks.assign(static_cast<std::size_t>(n + 1), CMatrix::Zero(q, q));
  const int shift = relax == Relaxation::F ? 1 : 2;
  const CMatrix tail = relax == Relaxation::F ? jump : CMatrix(jump * phim);
  CMatrix p = CMatrix::Identity(q, q);
  for (int j = shift; j <= n; ++j) {
    t.blocks[static_cast<std::size_t>(j)] = p * tail;
    p = p * phic;
  }
  t.lead = shift;
  return t;
}

BlockToeplitz multiply(const BlockToeplitz& a, const BlockToeplitz& b) {
  if (a.size() != b.size()) throw ConfigError("toeplitz: size mismatch");
  const auto q = a.blocks.at(0).rows();
  const int n = a.size();
  BlockToeplitz c;
  c.blocks.assign(static_cast<std::size_t>(n), CMatrix::Zero(q, q));
  c.lead = std::min(n, a.lead + b.lead);
  for (int i = c.lead; i < n; ++i) {
    CMatrix acc = CMatrix::Zero(q, q);
    for (int j = a.lead; j <= i - b.lead; ++j)
      acc.noalias() += a.blocks[static_cast<std::size_t>(j)] * b.blocks[static_cast<std::size_t>(i - j)];
    c.blocks[static_cast<std::size_t>(i)] = acc;
  }
  return c;
}

}  // namespace pintana
