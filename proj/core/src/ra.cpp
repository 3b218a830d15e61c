#include "pintana/ra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "pintana/errors.hpp"
#include "pintana/harness/csv.hpp"
#include "pintana/sweep.hpp"

namespace pintana {

namespace {

void check(int m, int nt_coarse, int k) {
  if (m < 1) throw ConfigError("ra: m must be positive");
  if (nt_coarse < 1) throw ConfigError("ra: NT must be positive");
  if (k < 1) throw ConfigError("ra: k must be positive");
}

// sum_{j=0}^{upto} C(j+k-1, j) b^j, zero when upto < 0.
double binomial_series(double b, int k, int upto) {
  if (upto < 0) return 0.0;
  if (k == 1) {
    const double n = upto + 1.0;
    if (std::abs(b - 1.0) < 1e-12) return n;
    if (b == 0.0) return 1.0;
    return -std::expm1(n * std::log(b)) / (1.0 - b);
  }
  double term = 1.0, sum = 1.0;
  for (int j = 1; j <= upto; ++j) {
    term *= b * (j + k - 1.0) / j;
    sum += term;
  }
  return sum;
}

// C(j+k-1, j) b^j, zero when j < 0.
double binomial_term(double b, int k, int j) {
  if (j < 0) return 0.0;
  double term = 1.0;
  for (int i = 1; i <= j; ++i) term *= b * (i + k - 1.0) / i;
  return term;
}

struct Scalars {
  double amp;    // |lambda^m - mu| (times |lambda^m| for FCF), raised to k
  double b;      // |mu|
  int shift;     // leading zero blocks of G^k: k for F, 2k for FCF
  double weight; // sum_{l<m} |lambda|^l
  double row_gain;  // max_{r<m} |lambda|^r
};

Scalars scalars(const EigenPair& p, int m, Relaxation relax, int k) {
  const cplx lm = std::pow(p.lambda, m);
  double base = std::abs(lm - p.mu);
  if (relax == Relaxation::FCF) base *= std::abs(lm);
  const double l = std::abs(p.lambda);
  Scalars s;
  s.amp = std::pow(base, k);
  s.b = std::abs(p.mu);
  s.shift = relax == Relaxation::F ? k : 2 * k;
  s.weight = 0.0;
  double pw = 1.0;
  s.row_gain = 0.0;
  for (int r = 0; r < m; ++r) {
    s.weight += pw;
    s.row_gain = std::max(s.row_gain, pw);
    pw *= l;
  }
  return s;
}

}  // namespace

double ra_cpoint_bound(const EigenPair& p, int m, int nt_coarse, Relaxation relax, int k) {
  check(m, nt_coarse, k);
  const Scalars s = scalars(p, m, relax, k);
  return s.amp * binomial_series(s.b, k, nt_coarse - s.shift);
}

double ra_full_norm_one(const EigenPair& p, int m, int nt_coarse, Relaxation relax, int k) {
  check(m, nt_coarse, k);
  const Scalars s = scalars(p, m, relax, k);
  const int j = nt_coarse - s.shift;
  return s.amp * (binomial_term(s.b, k, j) + s.weight * binomial_series(s.b, k, j - 1));
}

double ra_full_norm_inf(const EigenPair& p, int m, int nt_coarse, Relaxation relax, int k) {
  check(m, nt_coarse, k);
  const Scalars s = scalars(p, m, relax, k);
  const int j = nt_coarse - s.shift;
  return s.amp * std::max(binomial_series(s.b, k, j), s.row_gain * binomial_series(s.b, k, j - 1));
}

double ra_full_bound(const EigenPair& p, int m, int nt_coarse, Relaxation relax, int k) {
  return std::sqrt(ra_full_norm_one(p, m, nt_coarse, relax, k) * ra_full_norm_inf(p, m, nt_coarse, relax, k));
}

SimultaneousEigs simultaneous_eigs(const CMatrix& phi, const CMatrix& phic) {
  if (phi.rows() != phic.rows() || phi.cols() != phic.cols()) throw ConfigError("ra: symbol shape mismatch");
  SimultaneousEigs out;
  const EigResult e = eig(phi);
  out.diagonalizable = e.diagonalizable;
  try {
    out.kappa = cond_two(e.vectors);
    const CMatrix d = solve(e.vectors, phic * e.vectors);
    CMatrix off = d;
    off.diagonal().setZero();
    const double nd = norm_two(d);
    out.simultaneity_residual = nd > 0 ? norm_two(off) / nd : norm_two(off);
    for (std::ptrdiff_t l = 0; l < d.rows(); ++l) out.pairs.push_back({e.values(l), d(l, l)});
  } catch (const SingularMatrixError&) {
    out.diagonalizable = false;
    out.kappa = std::numeric_limits<double>::infinity();
    out.simultaneity_residual = std::numeric_limits<double>::infinity();
  }
  out.simultaneous = out.simultaneity_residual <= kSimultaneityTolerance;
  return out;
}

SystemBound ra_system_bound(const std::vector<SimultaneousEigs>& per_frequency, int m, int nt_coarse,
                            Relaxation relax, int k, Scope scope) {
  SystemBound b;
  for (std::size_t i = 0; i < per_frequency.size(); ++i) {
    const auto& f = per_frequency[i];
    if (!f.diagonalizable) {
      b.excluded.push_back(i);
      continue;
    }
    ++b.used;
    double worst = 0.0;
    for (const auto& p : f.pairs)
      worst = std::max(worst, scope == Scope::CPoints ? ra_cpoint_bound(p, m, nt_coarse, relax, k)
                                                      : ra_full_bound(p, m, nt_coarse, relax, k));
    b.value = std::max(b.value, f.kappa * worst);
  }
  return b;
}

SweepResult sigma_ra(const ProblemSymbols& problem, const Hierarchy& h, Relaxation relax, const RaOptions& opt) {
  const MethodSpec two{relax, Cycle::TwoLevel};
  h.validate(two);
  if (opt.k_max < 1) throw ConfigError("ra: k_max must be positive");
  ThetaGrid grid = opt.theta;
  grid.dim = problem.spatial_dim;
  const auto thetas = grid.points();
  const int nc = h.coarse_intervals();
  struct Outcome {
    std::optional<std::vector<double>> bounds;  // kappa times the max over eigenpairs
    double kappa = 1.0;
    double residual = 0.0;
  };
  auto outcomes = parallel_map<Outcome>(thetas.size(), [&](std::size_t i) {
    Outcome out;
    const CMatrix phi = problem.phi(thetas[i], 1);
    const CMatrix phic = problem.phi(thetas[i], h.m);
    SimultaneousEigs se;
    if (phi.rows() == 1) {
      se.pairs.push_back({phi(0, 0), phic(0, 0)});
    } else {
      se = simultaneous_eigs(phi, phic);
      if (!se.diagonalizable) return out;
    }
    out.kappa = se.kappa;
    out.residual = se.simultaneity_residual;
    std::vector<double> v;
    for (int k = 1; k <= opt.k_max; ++k) {
      double worst = 0.0;
      for (const auto& p : se.pairs)
        worst = std::max(worst, opt.scope == Scope::CPoints ? ra_cpoint_bound(p, h.m, nc, relax, k)
                                                            : ra_full_bound(p, h.m, nc, relax, k));
      v.push_back(se.kappa * worst);
    }
    out.bounds = std::move(v);
    return out;
  });
  std::vector<std::optional<std::vector<double>>> values(thetas.size());
  double kappa = 1.0, residual = 0.0;
  std::size_t non_simultaneous = 0;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    values[i] = outcomes[i].bounds;
    if (!values[i]) continue;
    kappa = std::max(kappa, outcomes[i].kappa);
    residual = std::max(residual, outcomes[i].residual);
    non_simultaneous += outcomes[i].residual > kSimultaneityTolerance ? 1 : 0;
  }
  SweepResult r;
  r.series = reduce_max(thetas, values, opt.k_max);
  if (problem.block_size > 1) {
    r.series.notes.push_back("kappa_max=" + format_real(kappa));
    r.series.notes.push_back("simultaneity_residual=" + format_real(residual));
    if (non_simultaneous)
      r.series.notes.push_back("non_simultaneous=" + std::to_string(non_simultaneous));
  }
  for (const auto& t : thetas) r.series.degenerate += problem.degenerate(t) ? 1 : 0;
  if (r.series.excluded > 0)
    r.series.notes.push_back("excluded " + std::to_string(r.series.excluded) +
                             " non-diagonalizable frequencies");
  if (opt.keep_samples)
    for (std::size_t i = 0; i < thetas.size(); ++i) {
      std::vector<double> v;
      if (values[i]) v = *values[i];
      r.samples.push_back({thetas[i], v});
    }
  return r;
}

}  // namespace pintana
