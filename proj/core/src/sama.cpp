#include "pintana/sama.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "pintana/errors.hpp"
#include "pintana/sweep.hpp"
#include "pintana/toeplitz.hpp"

namespace pintana {

std::string to_string(const SamaVariant& v) { return to_string(v.scope) + "-" + to_string(v.norm); }

namespace {

// I on the diagonal, -a on the first block subdiagonal, n+1 block rows.
CMatrix bidiagonal(const CMatrix& a, int n) {
  const auto q = a.rows();
  CMatrix s = CMatrix::Identity((n + 1) * q, (n + 1) * q);
  for (int j = 1; j <= n; ++j) s.block(j * q, (j - 1) * q, q, q) = -a;
  return s;
}

// Ideal interpolation from n+1 coarse points to n*m+1 fine points.
CMatrix interpolation(const CMatrix& a, int m, int n) {
  const auto q = a.rows();
  CMatrix p = CMatrix::Zero((n * m + 1) * q, (n + 1) * q);
  std::vector<CMatrix> pw(static_cast<std::size_t>(m));
  pw[0] = CMatrix::Identity(q, q);
  for (int r = 1; r < m; ++r) pw[static_cast<std::size_t>(r)] = pw[static_cast<std::size_t>(r - 1)] * a;
  for (int j = 0; j < n; ++j)
    for (int r = 0; r < m; ++r) p.block((j * m + r) * q, j * q, q, q) = pw[static_cast<std::size_t>(r)];
  p.block(n * m * q, n * q, q, q) = CMatrix::Identity(q, q);
  return p;
}

CMatrix injection(int m, int n, std::ptrdiff_t q) {
  CMatrix r = CMatrix::Zero((n + 1) * q, (n * m + 1) * q);
  for (int j = 0; j <= n; ++j) r.block(j * q, j * m * q, q, q) = CMatrix::Identity(q, q);
  return r;
}

// Approximate inverse of the first coarse-level operator: exact for two
// levels, nu two-grid iterations with zero initial guess for three.
CMatrix coarse_solver(const LevelSymbols& s, const Hierarchy& h, const MethodSpec& method, CoarseSchur schur,
                      const CMatrix& ac) {
  const auto n1 = ac.rows();
  const CMatrix eye1 = CMatrix::Identity(n1, n1);
  const CMatrix ac_inv = solve(ac, eye1);
  if (method.cycle == Cycle::TwoLevel) return ac_inv;
  const int nt2 = h.coarsest_intervals();
  const auto q = s.phi.rows();
  const CMatrix step = schur == CoarseSchur::CoarsePower ? matrix_power(s.phic, h.m2) : matrix_power(s.phi, h.m * h.m2);
  const CMatrix acs = bidiagonal(step, nt2);
  const CMatrix acc = bidiagonal(s.phicc, nt2);
  const CMatrix eye2 = CMatrix::Identity(acs.rows(), acs.cols());
  CMatrix gc = eye2 - solve(acc, acs);
  if (method.relax == Relaxation::FCF) gc = gc * (eye2 - acs);
  const CMatrix ec = interpolation(s.phic, h.m2, nt2) * gc * injection(h.m2, nt2, q);
  const int nu = method.cycle == Cycle::V ? 1 : 2;
  return (eye1 - matrix_power(ec, nu)) * ac_inv;
}

// C-point operator G = (I - X A_S) Y on the first coarse level.
CMatrix cpoint_operator(const LevelSymbols& s, const Hierarchy& h, const MethodSpec& method, CoarseSchur schur) {
  const int n = h.coarse_intervals();
  const CMatrix as = bidiagonal(matrix_power(s.phi, h.m), n);
  const CMatrix ac = bidiagonal(s.phic, n);
  const CMatrix eye = CMatrix::Identity(as.rows(), as.cols());
  CMatrix g = eye - coarse_solver(s, h, method, schur, ac) * as;
  if (method.relax == Relaxation::FCF) g = g * (eye - as);
  return g;
}

double combine(double one, double inf) { return std::sqrt(one * inf); }

// Per-frequency data for norms over the full fine grid.
struct FullWeights {
  std::vector<CMatrix> powers;  // phi^r, r < m
  CMatrix upper;                // U with U^H U = sum_r (phi^r)^H phi^r
};

FullWeights full_weights(const CMatrix& phi, int m, bool need_factor) {
  FullWeights w;
  const auto q = phi.rows();
  w.powers.push_back(CMatrix::Identity(q, q));
  for (int r = 1; r < m; ++r) w.powers.push_back(w.powers.back() * phi);
  if (need_factor) {
    CMatrix d = CMatrix::Zero(q, q);
    for (const auto& p : w.powers) d.noalias() += p.adjoint() * p;
    Eigen::LLT<CMatrix> llt(d);
    if (llt.info() != Eigen::Success) throw NumericalError("sama: weight matrix is not positive definite");
    w.upper = llt.matrixU();
  }
  return w;
}

double toeplitz_cpoint_norm(const BlockToeplitz& t, NormKind norm) {
  if (t.zero()) return 0.0;
  if (norm == NormKind::Exact2) return norm_two(t.dense());
  const auto q = t.blocks[0].rows();
  Eigen::VectorXd col = Eigen::VectorXd::Zero(q), row = Eigen::VectorXd::Zero(q);
  for (int d = t.lead; d < t.size(); ++d) {
    const auto a = t.blocks[static_cast<std::size_t>(d)].cwiseAbs();
    col += a.colwise().sum().transpose();
    row += a.rowwise().sum();
  }
  return combine(col.maxCoeff(), row.maxCoeff());
}

double toeplitz_full_norm(const BlockToeplitz& t, const FullWeights& w, NormKind norm) {
  if (t.zero()) return 0.0;
  const auto q = t.blocks[0].rows();
  const int n = t.size() - 1;
  if (norm == NormKind::Exact2) {
    std::vector<CMatrix> scaled(static_cast<std::size_t>(n + 1));
    for (int d = t.lead; d <= n; ++d) scaled[static_cast<std::size_t>(d)] = w.upper * t.blocks[static_cast<std::size_t>(d)];
    CMatrix mat = CMatrix::Zero((n + 1) * q, (n + 1) * q);
    for (int j = 0; j <= n; ++j) {
      for (int i = j + t.lead; i < n; ++i) mat.block(i * q, j * q, q, q) = scaled[static_cast<std::size_t>(i - j)];
      if (n - j >= t.lead) mat.block(n * q, j * q, q, q) = t.blocks[static_cast<std::size_t>(n - j)];
    }
    return norm_two(mat);
  }
  // Column (J, c): sum over fine rows below C-point J. Row (L, r): prefix of phi^r h_d.
  Eigen::VectorXd prefix = Eigen::VectorXd::Zero(q);
  double one = 0.0;
  const auto m = w.powers.size();
  std::vector<Eigen::VectorXd> rows(m, Eigen::VectorXd::Zero(q));
  Eigen::VectorXd last_row = Eigen::VectorXd::Zero(q);
  for (int d = 0; d <= n; ++d) {
    if (d < t.lead) continue;
    const CMatrix& hd = t.blocks[static_cast<std::size_t>(d)];
    const auto ad = hd.cwiseAbs();
    one = std::max(one, (prefix + ad.colwise().sum().transpose()).maxCoeff());
    last_row += ad.rowwise().sum();
    if (d == n) break;
    for (std::size_t r = 0; r < m; ++r) {
      const auto a = r == 0 ? Eigen::MatrixXd(ad) : Eigen::MatrixXd((w.powers[r] * hd).cwiseAbs());
      prefix += a.colwise().sum().transpose();
      rows[r] += a.rowwise().sum();
    }
  }
  one = std::max(one, prefix.maxCoeff());
  double inf = last_row.maxCoeff();
  for (const auto& r : rows) inf = std::max(inf, r.maxCoeff());
  return combine(one, inf);
}

double dense_full_norm(const CMatrix& gk, const FullWeights& w, std::ptrdiff_t q, NormKind norm) {
  const auto blocks = gk.rows() / q;
  const auto n = blocks - 1;
  if (norm == NormKind::Exact2) {
    CMatrix mat(gk.rows(), gk.cols());
    for (std::ptrdiff_t l = 0; l < n; ++l) mat.middleRows(l * q, q) = w.upper * gk.middleRows(l * q, q);
    mat.middleRows(n * q, q) = gk.middleRows(n * q, q);
    return norm_two(mat);
  }
  Eigen::VectorXd colsum = gk.middleRows(n * q, q).cwiseAbs().colwise().sum().transpose();
  double inf = gk.middleRows(n * q, q).cwiseAbs().rowwise().sum().maxCoeff();
  for (std::ptrdiff_t l = 0; l < n; ++l) {
    const auto rows = gk.middleRows(l * q, q);
    for (const auto& p : w.powers) {
      const Eigen::MatrixXd a = (p * rows).cwiseAbs();
      colsum += a.colwise().sum().transpose();
      inf = std::max(inf, a.rowwise().sum().maxCoeff());
    }
  }
  return combine(colsum.maxCoeff(), inf);
}

double matrix_norm(const CMatrix& a, NormKind norm) {
  return norm == NormKind::Exact2 ? norm_two(a) : one_inf_bound(a);
}

}  // namespace

SamaOperators sama_operators(const LevelSymbols& s, const Hierarchy& h, const MethodSpec& method, CoarseSchur) {
  h.validate(method);
  const int n = h.coarse_intervals();
  SamaOperators o;
  o.ac = bidiagonal(s.phic, n);
  o.as = bidiagonal(matrix_power(s.phi, h.m), n);
  o.interp = interpolation(s.phi, h.m, n);
  o.restrict = injection(h.m, n, s.phi.rows());
  return o;
}

CMatrix sama_blocks(const LevelSymbols& s, const Hierarchy& h, const MethodSpec& method, Scope scope,
                    CoarseSchur schur) {
  const SamaOperators o = sama_operators(s, h, method, schur);
  const CMatrix eye = CMatrix::Identity(o.as.rows(), o.as.cols());
  CMatrix inner = eye - coarse_solver(s, h, method, schur, o.ac) * o.as;
  if (method.relax == Relaxation::FCF) inner = inner * (eye - o.as);
  const CMatrix e = o.interp * inner * o.restrict;
  if (scope == Scope::Full) return e;
  return o.restrict * e * o.restrict.transpose();
}

std::vector<double> sama_power_series(const CMatrix& block, int k_max, NormKind norm) {
  if (block.rows() != block.cols()) throw ConfigError("sama: block must be square");
  if (k_max < 1) throw ConfigError("sama: k_max must be positive");
  std::vector<double> out;
  CMatrix p = block;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) p = p * block;
    out.push_back(matrix_norm(p, norm));
  }
  return out;
}

std::vector<double> sama_frequency_values(const LevelSymbols& s, const Hierarchy& h, const MethodSpec& method,
                                          const SamaVariant& variant, int k_max, CoarseSchur schur) {
  h.validate(method);
  if (k_max < 1) throw ConfigError("sama: k_max must be positive");
  const auto q = s.phi.rows();
  const bool full = variant.scope == Scope::Full;
  FullWeights w;
  if (full) w = full_weights(s.phi, h.m, variant.norm == NormKind::Exact2);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k_max));

  if (method.cycle == Cycle::TwoLevel) {
    const BlockToeplitz g = two_level_cpoint_operator(s.phi, s.phic, h.m, h.coarse_intervals(), method.relax);
    BlockToeplitz gk = g;
    for (int k = 1; k <= k_max; ++k) {
      if (k > 1) gk = multiply(gk, g);
      out.push_back(full ? toeplitz_full_norm(gk, w, variant.norm) : toeplitz_cpoint_norm(gk, variant.norm));
    }
    return out;
  }

  const CMatrix g = cpoint_operator(s, h, method, schur);
  CMatrix gk = g;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) gk = gk * g;
    out.push_back(full ? dense_full_norm(gk, w, q, variant.norm) : matrix_norm(gk, variant.norm));
  }
  return out;
}

SweepResult sigma_sama(const ProblemSymbols& problem, const Hierarchy& h, const MethodSpec& method,
                       const SamaOptions& opt) {
  h.validate(method);
  if (opt.k_max < 1) throw ConfigError("sama: k_max must be positive");
  const long full_size = static_cast<long>(problem.block_size) * (h.nt + 1);
  if (opt.variant.scope == Scope::Full && opt.variant.norm == NormKind::Exact2 && full_size > kDenseSpectralLimit &&
      !opt.allow_large_exact)
    throw ConfigError("sama: exact 2-norm on the full grid has size " + std::to_string(full_size) +
                      "; use the bound or allow large exact norms explicitly");
  ThetaGrid grid = opt.theta;
  grid.dim = problem.spatial_dim;
  const auto thetas = grid.points();
  auto values = parallel_map<std::optional<std::vector<double>>>(thetas.size(), [&](std::size_t i) {
    const LevelSymbols s = problem.levels(thetas[i], h, method);
    return std::optional<std::vector<double>>(sama_frequency_values(s, h, method, opt.variant, opt.k_max, opt.schur));
  });
  SweepResult r;
  r.series = reduce_max(thetas, values, opt.k_max);
  for (const auto& t : thetas) r.series.degenerate += problem.degenerate(t) ? 1 : 0;
  if (opt.keep_samples) {
    for (std::size_t i = 0; i < thetas.size(); ++i) r.samples.push_back({thetas[i], *values[i]});
  }
  return r;
}

}  // namespace pintana
