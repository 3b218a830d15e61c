// Acceptance suite: one PASS/FAIL line per criterion. Tolerances are fixed
// below; numbers are printed so a failing line can be read on its own.
//
//   pintana_acceptance [--only name[,name...]] [--list]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pintana/advection.hpp"
#include "pintana/elasticity.hpp"
#include "pintana/harness/average.hpp"
#include "pintana/lfa.hpp"
#include "pintana/mgrit.hpp"
#include "pintana/ra.hpp"
#include "pintana/sama.hpp"
#include "space_time.hpp"

using namespace pintana;
using std::numbers::pi;

namespace {

// Pinned tolerances.
constexpr double kOracleRel = 1e-9;
constexpr double kOracleSeconds = 10;
constexpr double kRaRel = 1e-12;
constexpr double kRaAbsFloor = 1e-13;  // empty sums are exactly 0; assembled values carry roundoff
constexpr double kRaSeconds = 30;
constexpr double kExactRel = 1e-10;
constexpr double kExactSeconds = 20;
constexpr double kSamaRaFactor = 1.5;
constexpr double kLfaSamaFirst = 5e-3;  // three significant figures
constexpr double kFig4Seconds = 300;
const double kFullOverCpts = std::sqrt(2.0) * 1.01;
constexpr double kBoundOverExactAdvection = 1.7;
constexpr double kBoundOverExactElasticity = 3.7;
constexpr double kPessimismLo = 4, kPessimismHi = 12;
constexpr double kMeasuredSlack = 1e-9;
constexpr double kRobustAverage = 0.5;
constexpr double kRatioInvariance = 1e-10;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> violated;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      violated.push_back(what);
    }
  }
};

struct Criterion {
  std::string name;
  std::function<void(Outcome&)> run;
};

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const char* name(Relaxation r) { return r == Relaxation::F ? "F" : "FCF"; }

AdvectionParams advection_params(double dt = 0.1, double dx = 0.5) { return {1.0, dx, dt}; }

ElasticityParams elasticity_params(double rho, double mu, double dt, double dx = 0.5) {
  ElasticityParams p;
  p.rho = rho;
  p.mu = mu;
  p.dx = dx;
  p.dt = dt;
  return p;
}

PredictionSeries sama(const ProblemSymbols& problem, const Hierarchy& h, const MethodSpec& method, SamaVariant v,
                      int k_max, double htheta) {
  SamaOptions opt;
  opt.variant = v;
  opt.k_max = k_max;
  opt.theta = ThetaGrid{problem.spatial_dim, htheta};
  return sigma_sama(problem, h, method, opt).series;
}

PredictionSeries ra(const ProblemSymbols& problem, const Hierarchy& h, Relaxation relax, Scope scope, int k_max,
                    double htheta) {
  RaOptions opt;
  opt.scope = scope;
  opt.k_max = k_max;
  opt.theta = ThetaGrid{problem.spatial_dim, htheta};
  return sigma_ra(problem, h, relax, opt).series;
}

PredictionSeries lfa(const ProblemSymbols& problem, const Hierarchy& h, const MethodSpec& method, int k_max,
                     double htheta, double homega = pi / 32) {
  LfaOptions opt;
  opt.k_max = k_max;
  opt.theta = ThetaGrid{problem.spatial_dim, htheta};
  opt.omega_spacing = homega;
  return sigma_lfa(problem, h, method, opt).series;
}

std::vector<double> values(const PredictionSeries& s) {
  std::vector<double> v;
  for (const auto& p : s.points) v.push_back(p.value);
  return v;
}

double average(const PredictionSeries& s, int lo, int hi) {
  const auto a = average_reduction(values(s), lo, hi);
  return a ? *a : 0.0;
}

double max_ratio(const PredictionSeries& num, const PredictionSeries& den) {
  double r = 0.0;
  for (std::size_t k = 0; k < num.points.size(); ++k)
    if (den.points[k].value > 0) r = std::max(r, num.points[k].value / den.points[k].value);
  return r;
}

// ---------------------------------------------------------------------------

void oracle_equivalence(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const AdvectionParams p = advection_params();
  double worst = 0.0;
  for (int nx : {4, 8}) {
    for (int nt : {4, 8}) {
      for (auto relax : {Relaxation::F, Relaxation::FCF}) {
        const Hierarchy h{nt, 2, 1, p.dt};
        const auto s = sama(advection_symbols(p), h, {relax, Cycle::TwoLevel}, {Scope::Full, NormKind::Exact2}, 4,
                            2 * pi / nx);
        const oracle::Mat phi = assemble_propagator(nx, p).cast<cplx>();
        const oracle::Mat phic = assemble_propagator(nx, p, 2).cast<cplx>();
        const oracle::Mat e = oracle::two_grid_error(phi, phic, nt, 2, relax == Relaxation::FCF);
        for (int k = 1; k <= 4; ++k) {
          const double ref = oracle::spectral_norm(oracle::power(e, k));
          worst = std::max(worst, std::abs(s.at(k) - ref) / ref);
        }
      }
    }
  }
  const double t = seconds_since(t0);
  o.detail << "max rel diff " << fmt(worst, 3) << " (tol " << kOracleRel << "), " << fmt(t, 3) << " s";
  o.require(worst <= kOracleRel, "relative difference");
  o.require(t < kOracleSeconds, "runtime");
}

void ra_closed_forms(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto draw = [&] { return std::polar(1.05 * std::sqrt(u(rng)), 2 * pi * u(rng)); };
  auto mismatch = [](double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), kRaAbsFloor / kRaRel});
  };
  const int nts[] = {4, 16, 32};
  double worst = 0.0;
  int cases = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const EigenPair pair{draw(), draw()};
    const int m = trial % 2 ? 4 : 2;
    const int nc = nts[(trial / 2) % 3];
    const int k = 1 + (trial / 6) % 4;
    for (auto relax : {Relaxation::F, Relaxation::FCF}) {
      const int n = m * nc;
      const oracle::Mat lam = oracle::Mat::Constant(1, 1, pair.lambda);
      const oracle::Mat mu = oracle::Mat::Constant(1, 1, pair.mu);
      const oracle::Mat e = oracle::power(oracle::two_grid_error(lam, mu, n, m, relax == Relaxation::FCF), k);
      const oracle::Mat r = oracle::injection(1, n, m);
      const oracle::Mat c = r * e * r.transpose();
      const double cref = norm_inf(c);
      const double fref = std::sqrt(norm_one(e) * norm_inf(e));
      worst = std::max(worst, mismatch(ra_cpoint_bound(pair, m, nc, relax, k), cref));
      worst = std::max(worst, mismatch(ra_full_bound(pair, m, nc, relax, k), fref));
      ++cases;
    }
  }
  const double t = seconds_since(t0);
  o.detail << cases << " cases, max rel diff " << fmt(worst, 3) << " (tol " << kRaRel << "), " << fmt(t, 3) << " s";
  o.require(worst <= kRaRel, "relative difference");
  o.require(t < kRaSeconds, "runtime");
}

void exactness(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  int runs = 0;
  for (int nt : {8, 16, 32, 64}) {
    for (int m : {2, 4}) {
      for (auto relax : {Relaxation::F, Relaxation::FCF}) {
        const int bound = relax == Relaxation::F ? nt / m : nt / (2 * m);
        if (bound < 1 || nt % (relax == Relaxation::F ? m : 2 * m)) continue;
        SimulationSpec spec;
        spec.nx = 64;
        spec.advection = advection_params();
        spec.hierarchy = Hierarchy{nt, m, 1, spec.advection.dt};
        spec.method = {relax, Cycle::TwoLevel};
        spec.ic = InitialCondition{{{2.0, pi / 16}}};
        spec.iterations = bound;
        const Measurement meas = measure(spec);
        const double last = meas.cumulative.empty() ? 0.0 : meas.cumulative.back();
        worst = std::max(worst, last);
        ++runs;
      }
    }
  }
  const double t = seconds_since(t0);
  o.detail << runs << " runs, worst relative error after nt/m or nt/(2m) iterations " << fmt(worst, 3) << " (tol "
           << kExactRel << "), " << fmt(t, 3) << " s";
  o.require(worst <= kExactRel, "relative error");
  o.require(t < kExactSeconds, "runtime");
}

void fig4_advection(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto problem = advection_symbols(advection_params());
  const Hierarchy h{64, 2, 1, 0.1};
  for (auto relax : {Relaxation::F, Relaxation::FCF}) {
    const MethodSpec method{relax, Cycle::TwoLevel};
    const auto s = sama(problem, h, method, {Scope::Full, NormKind::Exact2}, 10, pi / 32);
    const auto r = ra(problem, h, relax, Scope::CPoints, 10, pi / 32);
    const auto l = lfa(problem, h, method, 1, pi / 32);
    const double factor = std::max(max_ratio(s, r), max_ratio(r, s));
    const double first = std::abs(l.at(1) - s.at(1)) / s.at(1);
    o.detail << name(relax) << ": SAMA/RA factor " << fmt(factor) << ", LFA(1)=" << fmt(l.at(1), 5)
             << " SAMA(1)=" << fmt(s.at(1), 5) << " RA(1)=" << fmt(r.at(1), 5) << "; ";
    o.require(factor <= kSamaRaFactor, std::string(name(relax)) + " SAMA vs RA factor");
    o.require(first <= kLfaSamaFirst, std::string(name(relax)) + " LFA vs SAMA at k=1");
  }
  const double t = seconds_since(t0);
  o.detail << fmt(t, 3) << " s";
  o.require(t < kFig4Seconds, "runtime");
}

void ratio_claims(Outcome& o) {
  const SamaVariant full_exact{Scope::Full, NormKind::Exact2}, cpts_exact{Scope::CPoints, NormKind::Exact2};
  const SamaVariant full_bound{Scope::Full, NormKind::OneInfBound}, cpts_bound{Scope::CPoints, NormKind::OneInfBound};

  const auto adv = advection_symbols(advection_params());
  const Hierarchy h{64, 2, 1, 0.1};
  double adv_full_cpts = 0, adv_bound = 0, adv_full_bound = 0;
  for (auto relax : {Relaxation::F, Relaxation::FCF}) {
    const MethodSpec method{relax, Cycle::TwoLevel};
    const auto fe = sama(adv, h, method, full_exact, 10, pi / 32);
    const auto ce = sama(adv, h, method, cpts_exact, 10, pi / 32);
    const auto fb = sama(adv, h, method, full_bound, 10, pi / 32);
    const auto cb = sama(adv, h, method, cpts_bound, 10, pi / 32);
    adv_full_cpts = std::max(adv_full_cpts, max_ratio(fe, ce));
    // The exact/bound pair the claim is read from is the C-point one; the
    // full-scope ratio is reported only.
    adv_bound = std::max(adv_bound, max_ratio(cb, ce));
    adv_full_bound = std::max(adv_full_bound, max_ratio(fb, fe));
  }
  o.detail << "advection: full/cpts " << fmt(adv_full_cpts) << ", cpts bound/exact " << fmt(adv_bound)
           << " [full bound/exact " << fmt(adv_full_bound) << "]; ";
  o.require(adv_full_cpts <= kFullOverCpts, "advection full/cpts");
  o.require(adv_bound <= kBoundOverExactAdvection, "advection bound/exact");

  // Exact norms on the elasticity grid use the reduced pi/8 sampling.
  const auto ela = elasticity_symbols(elasticity_params(1, 1, 0.1));
  double ela_full_cpts = 0, ela_bound = 0;
  for (auto relax : {Relaxation::F, Relaxation::FCF}) {
    const MethodSpec method{relax, Cycle::TwoLevel};
    const auto fe = sama(ela, h, method, full_exact, 10, pi / 8);
    const auto ce = sama(ela, h, method, cpts_exact, 10, pi / 8);
    const auto cb = sama(ela, h, method, cpts_bound, 10, pi / 8);
    ela_full_cpts = std::max(ela_full_cpts, max_ratio(fe, ce));
    ela_bound = std::max(ela_bound, max_ratio(cb, ce));
  }
  o.detail << "elasticity: full/cpts " << fmt(ela_full_cpts) << ", cpts bound/exact " << fmt(ela_bound) << "; ";
  o.require(ela_full_cpts <= kFullOverCpts, "elasticity full/cpts");
  o.require(ela_bound <= kBoundOverExactElasticity, "elasticity bound/exact");

  // Pessimism: geometric mean over k = 1..10 of RA over the SAMA C-point bound.
  for (auto relax : {Relaxation::F, Relaxation::FCF}) {
    const auto cb = sama(ela, h, {relax, Cycle::TwoLevel}, cpts_bound, 10, pi / 32);
    const auto r = ra(ela, h, relax, Scope::CPoints, 10, pi / 32);
    double log_sum = 0;
    for (int k = 1; k <= 10; ++k) log_sum += std::log(r.at(k) / cb.at(k));
    const double factor = std::exp(log_sum / 10);
    o.detail << "RA/SAMA " << name(relax) << " " << fmt(factor) << " (k=1: " << fmt(r.at(1) / cb.at(1)) << ") ";
    o.require(factor >= kPessimismLo && factor <= kPessimismHi, std::string("pessimism ") + name(relax));
  }
}

void lfa_trend(Outcome& o) {
  const auto problem = advection_symbols(advection_params());
  struct Band {
    int nt;
    Relaxation relax;
    double lo, hi;
  };
  const Band bands[] = {{128, Relaxation::F, 0.15, 0.35},
                        {128, Relaxation::FCF, 0.70, 1.10},
                        {1024, Relaxation::F, 0.0, 0.06},
                        {1024, Relaxation::FCF, 0.02, 0.12}};
  for (const Band& b : bands) {
    const Hierarchy h{b.nt, 2, 1, 0.1};
    const MethodSpec method{b.relax, Cycle::TwoLevel};
    const double al = average(lfa(problem, h, method, 20, pi / 32), 1, 20);
    const double as = average(sama(problem, h, method, {Scope::Full, NormKind::Exact2}, 20, pi / 32), 1, 20);
    const double gap = (al - as) / as;
    o.detail << "nt=" << b.nt << " " << name(b.relax) << " gap " << fmt(100 * gap, 3) << "% (LFA " << fmt(al)
             << ", SAMA " << fmt(as) << "); ";
    o.require(gap >= b.lo && gap <= b.hi, "gap nt=" + std::to_string(b.nt) + " " + name(b.relax));
    // Not part of the verdict: the LFA maximum sits next to the excluded
    // constant mode and keeps growing as omega is refined.
    const double fine = average(lfa(problem, h, method, 20, pi / 32, pi / 512), 1, 20);
    o.detail << "[h_omega=pi/512: " << fmt(100 * (fine - as) / as, 3) << "%] ";
  }
}

void multilevel(Outcome& o) {
  const auto problem = advection_symbols(advection_params());
  struct Target {
    const char* label;
    Hierarchy h;
    MethodSpec method;
    double value, tol;
  };
  const Target targets[] = {
      {"2L F m=2", {256, 2, 1, 0.1}, {Relaxation::F, Cycle::TwoLevel}, 0.13, 0.02},
      {"2L F m=4", {256, 4, 1, 0.1}, {Relaxation::F, Cycle::TwoLevel}, 0.31, 0.03},
      {"2L FCF m=2", {256, 2, 1, 0.1}, {Relaxation::FCF, Cycle::TwoLevel}, 0.11, 0.02},
      {"2L FCF m=4", {256, 4, 1, 0.1}, {Relaxation::FCF, Cycle::TwoLevel}, 0.24, 0.03},
      {"3L F-cycle F", {256, 2, 2, 0.1}, {Relaxation::F, Cycle::F}, 0.15, 0.02},
      {"3L F-cycle FCF", {256, 2, 2, 0.1}, {Relaxation::FCF, Cycle::F}, 0.12, 0.02},
  };
  for (const Target& t : targets) {
    const double a = average(sama(problem, t.h, t.method, {Scope::Full, NormKind::Exact2}, 10, pi / 32), 1, 10);
    o.detail << t.label << " " << fmt(a, 3) << "; ";
    o.require(std::abs(a - t.value) <= t.tol, t.label);
  }
}

void measured_vs_predicted(Outcome& o) {
  const Hierarchy h{64, 2, 1, 0.1};
  const std::vector<InitialCondition> ics = {
      InitialCondition{{{2.0, pi / 16}}},
      InitialCondition{{{2.0, 5 * pi / 8}}},
      InitialCondition{{{2.0, pi / 8}, {2.0, 15 * pi / 16}}},
  };
  double worst_cum = 0, worst_step = 0;
  for (auto relax : {Relaxation::F, Relaxation::FCF}) {
    const MethodSpec method{relax, Cycle::TwoLevel};
    const auto s = sama(advection_symbols(advection_params()), h, method, {Scope::Full, NormKind::Exact2}, 10, pi / 32);
    for (const auto& ic : ics) {
      SimulationSpec spec;
      spec.nx = 64;
      spec.advection = advection_params();
      spec.hierarchy = h;
      spec.method = method;
      spec.ic = ic;
      spec.guess = InitialGuess::Random;
      spec.iterations = 10;
      const Measurement meas = measure(spec);
      for (std::size_t i = 0; i < meas.cumulative.size(); ++i) {
        const int k = static_cast<int>(i) + 1;
        worst_cum = std::max(worst_cum, meas.cumulative[i] - s.at(k));
        worst_step = std::max(worst_step, meas.per_iteration[i] - s.at(1));
      }
    }
  }
  o.detail << "max(||e_k||/||e_0|| - sigma(E^k)) " << fmt(worst_cum, 3) << ", max(||e_k||/||e_k-1|| - sigma(E)) "
           << fmt(worst_step, 3) << " (slack " << kMeasuredSlack << ")";
  o.require(worst_cum <= kMeasuredSlack, "cumulative factor above prediction");
  o.require(worst_step <= kMeasuredSlack, "per-iteration factor above prediction");
}

void elasticity_robustness(Outcome& o) {
  const Hierarchy h{128, 2, 1, 0.25};
  const SamaVariant v{Scope::Full, NormKind::OneInfBound};
  double worst = 0;
  for (int e = -4; e <= 4; ++e) {
    const double rho = std::ldexp(1.0, e);
    const auto problem = elasticity_symbols(elasticity_params(rho, 1.0, 0.25));
    for (auto relax : {Relaxation::F, Relaxation::FCF}) {
      const double a = average(sama(problem, h, {relax, Cycle::TwoLevel}, v, 10, pi / 16), 2, 10);
      worst = std::max(worst, a);
    }
  }
  o.detail << "max average reduction over nu in [2^-4, 2^4] " << fmt(worst) << " (limit " << kRobustAverage << "); ";
  o.require(worst <= kRobustAverage, "average reduction");

  double diff = 0;
  for (auto relax : {Relaxation::F, Relaxation::FCF}) {
    const auto a = sama(elasticity_symbols(elasticity_params(1.0, 1.0, 0.25)), h, {relax, Cycle::TwoLevel}, v, 10, pi / 8);
    const auto b = sama(elasticity_symbols(elasticity_params(10.0, 10.0, 0.25)), h, {relax, Cycle::TwoLevel}, v, 10, pi / 8);
    for (int k = 1; k <= 10; ++k) diff = std::max(diff, std::abs(a.at(k) - b.at(k)) / a.at(k));
  }
  o.detail << "(mu,rho) vs (10mu,10rho) max rel diff " << fmt(diff, 3);
  o.require(diff <= kRatioInvariance, "mu/rho invariance");
}

void invariants(Outcome& o) {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> g;
  auto random_matrix = [&](int r, int c) {
    CMatrix a(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) a(i, j) = cplx(g(rng), g(rng));
    return a;
  };
  int checks = 0;

  bool norms = true;
  for (int t = 0; t < 1000; ++t) {
    const CMatrix a = random_matrix(1 + t % 9, 1 + (t / 9) % 9);
    const double n2 = norm_two(a);
    norms &= n2 * n2 <= norm_one(a) * norm_inf(a) * (1 + 1e-12);
    if (t < 200) {
      const CMatrix b = random_matrix(a.cols(), 1 + t % 5);
      norms &= norm_two(a * b) <= n2 * norm_two(b) * (1 + 1e-12);
    }
    ++checks;
  }
  o.require(norms, "norm inequalities");

  bool advection = true;
  for (int j = 1; j < 1000; ++j)
    for (int scale : {1, 2, 8}) advection &= std::abs(phi_symbol_advection(2 * pi * j / 1000, advection_params(), scale)) < 1;
  o.require(advection, "|phi| < 1 away from theta = 0");

  bool projector = true;
  for (const Frequency& f : ThetaGrid{2, pi / 8}.points()) {
    const auto s = elasticity_symbol_set(f, elasticity_params(1, 1, 0.1));
    if (s.degenerate) continue;
    const double scale = s.projector.norm();
    projector &= (s.projector * s.projector - s.projector).norm() <= 1e-10 * scale;
    projector &= (s.grad.adjoint() * s.projector).norm() <= 1e-10 * s.grad.norm() * scale;
    ++checks;
  }
  o.require(projector, "projector idempotent and divergence free");

  // Nilpotency: zero from k = NT+1 (F) or NT/2+1 (FCF) on, not before.
  bool nilpotent = true;
  const Hierarchy h{16, 2, 1, 0.1};
  const auto adv = advection_symbols(advection_params());
  const auto ela = elasticity_symbols(elasticity_params(1, 1, 0.1));
  for (const auto* problem : {&adv, &ela}) {
    const Frequency f{pi / 3, pi / 5, 0};
    for (auto relax : {Relaxation::F, Relaxation::FCF}) {
      const MethodSpec method{relax, Cycle::TwoLevel};
      const int index = (relax == Relaxation::F ? 8 : 4) + 1;
      const auto v = sama_frequency_values(problem->levels(f, h, method), h, method, {Scope::Full, NormKind::Exact2}, index);
      nilpotent &= v[static_cast<std::size_t>(index - 1)] == 0.0 && v[static_cast<std::size_t>(index - 2)] > 0.0;
      ++checks;
    }
  }
  o.require(nilpotent, "nilpotency indices");

  // Orderings: bound >= exact; RA full within [1, sqrt(m)] of RA C-points.
  bool order = true;
  for (const auto* problem : {&adv, &ela}) {
    for (auto relax : {Relaxation::F, Relaxation::FCF}) {
      const MethodSpec method{relax, Cycle::TwoLevel};
      for (double t : {pi / 7, 2 * pi / 3}) {
        const auto s = problem->levels({t, -t / 2, 0}, h, method);
        for (Scope sc : {Scope::Full, Scope::CPoints}) {
          const auto ex = sama_frequency_values(s, h, method, {sc, NormKind::Exact2}, 6);
          const auto bd = sama_frequency_values(s, h, method, {sc, NormKind::OneInfBound}, 6);
          for (std::size_t k = 0; k < ex.size(); ++k) order &= ex[k] <= bd[k] * (1 + 1e-12) + 1e-300;
        }
        ++checks;
      }
    }
  }
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 500; ++t) {
    const EigenPair p{std::polar(u(rng), 2 * pi * u(rng)), std::polar(u(rng), 2 * pi * u(rng))};
    const int m = t % 2 ? 4 : 2;
    for (auto relax : {Relaxation::F, Relaxation::FCF}) {
      const double c = ra_cpoint_bound(p, m, 16, relax, 2);
      const double f = ra_full_bound(p, m, 16, relax, 2);
      order &= f >= c * (1 - 1e-12) && f <= std::sqrt(m) * c * (1 + 1e-12) + 1e-300;
      ++checks;
    }
  }
  o.require(order, "bound orderings");
  o.detail << checks << " property checks";
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"oracle-equivalence", oracle_equivalence},
      {"ra-closed-forms", ra_closed_forms},
      {"exactness", exactness},
      {"fig4-advection", fig4_advection},
      {"ratio-claims", ratio_claims},
      {"lfa-trend", lfa_trend},
      {"multilevel", multilevel},
      {"measured-vs-predicted", measured_vs_predicted},
      {"elasticity-robustness", elasticity_robustness},
      {"invariants", invariants},
  };

  std::vector<std::string> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--list") {
      for (const auto& c : criteria) std::cout << c.name << "\n";
      return 0;
    }
    if (arg == "--only" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      for (std::string item; std::getline(ss, item, ',');) only.push_back(item);
      continue;
    }
    std::cerr << "usage: pintana_acceptance [--only name[,name...]] [--list]\n";
    return 2;
  }
  for (const auto& n : only) {
    if (std::none_of(criteria.begin(), criteria.end(), [&](const Criterion& c) { return c.name == n; })) {
      std::cerr << "unknown criterion '" << n << "'\n";
      return 2;
    }
  }

  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.name) == only.end()) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::string tail;
    for (const auto& v : o.violated) tail += (tail.empty() ? " | violated: " : "; ") + v;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << " (" << fmt(seconds_since(t0), 3) << " s): " << o.detail.str()
              << tail << std::endl;
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
