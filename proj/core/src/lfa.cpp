#include "pintana/lfa.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "pintana/errors.hpp"
#include "pintana/sweep.hpp"

namespace pintana {

namespace {

// Column of phase-shifted powers [I; a e^{-i w}; ...; a^{n-1} e^{-i(n-1) w}].
CMatrix phase_column(const CMatrix& a, int n, double w) {
  const auto q = a.rows();
  CMatrix z(n * q, q);
  CMatrix p = CMatrix::Identity(q, q);
  for (int r = 0; r < n; ++r) {
    z.middleRows(r * q, q) = p * std::exp(cplx(0.0, -r * w));
    p = p * a;
  }
  return z;
}

// Block-circulant operator on n points: I on the diagonal, -a e^{-i w}
// below it and in the top-right corner.
CMatrix periodic_bidiagonal(const CMatrix& a, int n, double w) {
  const auto q = a.rows();
  CMatrix s = CMatrix::Identity(n * q, n * q);
  const CMatrix off = -a * std::exp(cplx(0.0, -w));
  for (int j = 0; j < n; ++j) {
    const int prev = (j + n - 1) % n;
    s.block(j * q, prev * q, q, q) += off;
  }
  return s;
}

CMatrix expand_first_column(const LfaFactors& f) {
  const auto rows = f.z.rows();
  const auto q = f.g.cols();
  CMatrix e = CMatrix::Zero(rows, rows);
  e.leftCols(q) = f.z * f.g;
  return e;
}

}  // namespace

LfaFactors two_level_factors(const CMatrix& phi, const CMatrix& phic, int m, double omega0, Relaxation relax) {
  if (phi.rows() != phi.cols() || phic.rows() != phi.rows()) throw ConfigError("lfa: symbol shape mismatch");
  if (m < 2) throw ConfigError("lfa: m must be at least 2");
  const auto q = phi.rows();
  const CMatrix eye = CMatrix::Identity(q, q);
  const cplx shift = std::exp(cplx(0.0, -m * omega0));
  const CMatrix as = eye - matrix_power(phi, m) * shift;
  const CMatrix ac = eye - phic * shift;
  CMatrix g = eye - solve(ac, as);
  if (relax == Relaxation::FCF) g = g * (eye - as);
  return {phase_column(phi, m, omega0), g};
}

CMatrix two_level_symbol(const CMatrix& phi, const CMatrix& phic, int m, double omega0, Relaxation relax) {
  return expand_first_column(two_level_factors(phi, phic, m, omega0, relax));
}

LfaFactors three_level_factors(const LevelSymbols& s, int m, int m2, double omega0, const MethodSpec& method,
                               CoarseSchur schur) {
  if (method.cycle == Cycle::TwoLevel) throw ConfigError("lfa: three-level symbol needs a V or F cycle");
  if (m < 2 || m2 < 2) throw ConfigError("lfa: coarsening factors must be at least 2");
  if (s.phicc.size() == 0) throw ConfigError("lfa: missing coarsest-level symbol");
  const auto q = s.phi.rows();
  const CMatrix eye = CMatrix::Identity(q, q);
  const CMatrix eye1 = CMatrix::Identity(m2 * q, m2 * q);

  // First coarse level: m2 points per period, neighbours differ by m fine steps.
  const CMatrix as = periodic_bidiagonal(matrix_power(s.phi, m), m2, m * omega0);
  const CMatrix ac = periodic_bidiagonal(s.phic, m2, m * omega0);

  // Two-grid iteration for ac, coarsening by m2 onto the coarsest level.
  const cplx shift2 = std::exp(cplx(0.0, -m * m2 * omega0));
  const CMatrix schur_step = schur == CoarseSchur::CoarsePower ? matrix_power(s.phic, m2) : matrix_power(s.phi, m * m2);
  const CMatrix acs = eye - schur_step * shift2;
  const CMatrix acc = eye - s.phicc * shift2;
  CMatrix gc = eye - solve(acc, acs);
  if (method.relax == Relaxation::FCF) gc = gc * (eye - acs);
  const CMatrix zc = phase_column(s.phic, m2, m * omega0);
  CMatrix ec = CMatrix::Zero(m2 * q, m2 * q);
  ec.leftCols(q) = zc * gc;

  const int nu = method.cycle == Cycle::V ? 1 : 2;
  const CMatrix approx_inv = (eye1 - matrix_power(ec, nu)) * solve(ac, eye1);
  CMatrix g = eye1 - approx_inv * as;
  if (method.relax == Relaxation::FCF) g = g * (eye1 - as);

  // Fine-level interpolation: one phase column per first-coarse point.
  const CMatrix zf = phase_column(s.phi, m, omega0);
  CMatrix z = CMatrix::Zero(m2 * m * q, m2 * q);
  for (int j = 0; j < m2; ++j) z.block(j * m * q, j * q, m * q, q) = zf;
  return {z, g};
}

CMatrix three_level_symbol(const LevelSymbols& s, int m, int m2, double omega0, const MethodSpec& method,
                           CoarseSchur schur) {
  const LfaFactors f = three_level_factors(s, m, m2, omega0, method, schur);
  // E = Z G R with R selecting the C-points (every m-th fine block).
  const auto q = s.phi.rows();
  const auto n = f.z.rows();
  CMatrix e = CMatrix::Zero(n, n);
  const CMatrix zg = f.z * f.g;
  for (int j = 0; j < m2; ++j) e.middleCols(j * m * q, q) = zg.middleCols(j * q, q);
  return e;
}

namespace {

struct ThetaOutcome {
  std::optional<std::vector<double>> values;
  std::vector<double> omega_at;
  std::size_t skipped = 0;
};

}  // namespace

SweepResult sigma_lfa(const ProblemSymbols& problem, const Hierarchy& h, const MethodSpec& method,
                      const LfaOptions& opt) {
  if (opt.k_max < 1) throw ConfigError("lfa: k_max must be positive");
  if (h.m < 2) throw ConfigError("lfa: m must be at least 2");
  if (method.cycle != Cycle::TwoLevel && h.m2 < 2) throw ConfigError("lfa: three-level cycles need m2 >= 2");
  ThetaGrid grid = opt.theta;
  grid.dim = problem.spatial_dim;
  const auto thetas = grid.points();
  const int period = method.cycle == Cycle::TwoLevel ? h.m : h.m * h.m2;
  const double hw = opt.omega_spacing > 0 ? opt.omega_spacing : std::numbers::pi / 32;
  const auto omegas = symmetric_samples(std::numbers::pi / period, hw);
  const int kmax = opt.k_max;

  auto outcomes = parallel_map<ThetaOutcome>(thetas.size(), [&](std::size_t i) {
    ThetaOutcome out;
    const LevelSymbols s = problem.levels(thetas[i], h, method);
    std::vector<double> best(static_cast<std::size_t>(kmax), -1.0);
    std::vector<double> at(static_cast<std::size_t>(kmax), 0.0);
    for (double w : omegas) {
      LfaFactors f;
      try {
        f = method.cycle == Cycle::TwoLevel ? two_level_factors(s.phi, s.phic, h.m, w, method.relax)
                                            : three_level_factors(s, h.m, h.m2, w, method, opt.schur);
      } catch (const SingularMatrixError&) {
        ++out.skipped;
        continue;
      }
      CMatrix gk = f.g;
      for (int k = 1; k <= kmax; ++k) {
        if (k > 1) gk = gk * f.g;
        const double v = norm_two(f.z * gk);
        auto idx = static_cast<std::size_t>(k - 1);
        if (v > best[idx]) {
          best[idx] = v;
          at[idx] = w;
        }
      }
    }
    if (out.skipped < omegas.size()) out.values = best;
    out.omega_at = at;
    return out;
  });

  std::vector<std::optional<std::vector<double>>> vals(thetas.size());
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    vals[i] = outcomes[i].values;
    skipped += outcomes[i].skipped;
  }
  SweepResult r;
  r.series = reduce_max(thetas, vals, kmax);
  // reduce_max counts whole theta values; LFA counts (theta, omega) samples.
  r.series.excluded = skipped;
  r.series.sampled = thetas.size() * omegas.size() - skipped;
  for (auto& p : r.series.points) {
    for (std::size_t i = 0; i < thetas.size(); ++i) {
      const auto& t = thetas[i];
      if (t.theta_x == p.argmax.theta_x && t.theta_y == p.argmax.theta_y) {
        p.argmax.omega0 = outcomes[i].omega_at[static_cast<std::size_t>(p.k - 1)];
        break;
      }
    }
  }
  for (const auto& t : thetas) r.series.degenerate += problem.degenerate(t) ? 1 : 0;
  if (skipped > 0) r.series.notes.push_back("skipped " + std::to_string(skipped) + " singular coarse-symbol samples");
  if (opt.keep_samples) {
    r.samples.reserve(thetas.size());
    for (std::size_t i = 0; i < thetas.size(); ++i) {
      FrequencySample fs{thetas[i], vals[i] ? *vals[i] : std::vector<double>{}};
      r.samples.push_back(std::move(fs));
    }
  }
  return r;
}

}  // namespace pintana
