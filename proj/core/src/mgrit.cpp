#include "pintana/mgrit.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "pintana/errors.hpp"

namespace pintana {

Eigen::VectorXd InitialCondition::evaluate(int nx) const {
  Eigen::VectorXd u = Eigen::VectorXd::Zero(nx);
  for (const auto& [amp, theta] : modes)
    for (int j = 0; j < nx; ++j) u(j) += amp * std::cos(theta * j);
  return u;
}

void InitialCondition::validate(int nx) const {
  for (const auto& [amp, theta] : modes) {
    const double j = theta * nx / (2.0 * std::numbers::pi);
    if (std::abs(j - std::round(j)) > 1e-9)
      throw ConfigError("initial condition frequency " + std::to_string(theta) + " is not a grid frequency for nx=" +
                        std::to_string(nx));
    (void)amp;
  }
}

MgritAdvection::MgritAdvection(int nx, const AdvectionParams& p, const Hierarchy& h, const MethodSpec& method)
    : nx_(nx), params_(p), h_(h), method_(method) {
  p.validate();
  h.validate(method);
  if (nx < 2) throw ConfigError("mgrit: nx must be at least 2");
  lambda_.push_back(p.courant(1));
  lambda_.push_back(p.courant(h.m));
  if (method.levels() == 3) lambda_.push_back(p.courant(h.m * h.m2));
}

int MgritAdvection::intervals(int level) const {
  if (level == 0) return h_.nt;
  if (level == 1) return h_.nt / h_.m;
  return h_.nt / (h_.m * h_.m2);
}

int MgritAdvection::factor(int level) const { return level == 0 ? h_.m : h_.m2; }

SpaceTimeVector MgritAdvection::zeros(int level) const {
  return SpaceTimeVector(static_cast<std::size_t>(intervals(level) + 1), Eigen::VectorXd::Zero(nx_));
}

SpaceTimeVector MgritAdvection::rhs(const Eigen::VectorXd& u0) const {
  SpaceTimeVector g = zeros(0);
  g[0] = u0;
  return g;
}

void MgritAdvection::step(int level, const Eigen::VectorXd& in, Eigen::VectorXd& out) const {
  advection_step(in, out, lambda_.at(static_cast<std::size_t>(level)));
}

void MgritAdvection::solve_level(SpaceTimeVector& u, const SpaceTimeVector& g, int level) const {
  u[0] = g[0];
  Eigen::VectorXd tmp;
  for (std::size_t i = 1; i < u.size(); ++i) {
    step(level, u[i - 1], tmp);
    u[i] = tmp + g[i];
  }
}

SpaceTimeVector MgritAdvection::sequential_solve(const Eigen::VectorXd& u0) const {
  SpaceTimeVector u = zeros(0);
  solve_level(u, rhs(u0), 0);
  return u;
}

SpaceTimeVector MgritAdvection::initial_guess(const Eigen::VectorXd& u0, InitialGuess guess, std::uint64_t seed) const {
  SpaceTimeVector u = zeros(0);
  u[0] = u0;
  if (guess == InitialGuess::Random) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (std::size_t i = 1; i < u.size(); ++i)
      for (int j = 0; j < nx_; ++j) u[i](j) = dist(rng);
  }
  return u;
}

void MgritAdvection::f_relax(SpaceTimeVector& u, const SpaceTimeVector& g, int level) const {
  const int c = factor(level);
  const int n = intervals(level);
  Eigen::VectorXd tmp;
  for (int i = 1; i <= n; ++i) {
    if (i % c == 0) continue;
    step(level, u[static_cast<std::size_t>(i - 1)], tmp);
    u[static_cast<std::size_t>(i)] = tmp + g[static_cast<std::size_t>(i)];
  }
}

void MgritAdvection::c_relax(SpaceTimeVector& u, const SpaceTimeVector& g, int level) const {
  const int c = factor(level);
  const int n = intervals(level);
  u[0] = g[0];  // the initial point is a C-point whose equation is u_0 = g_0
  Eigen::VectorXd tmp;
  for (int i = c; i <= n; i += c) {
    step(level, u[static_cast<std::size_t>(i - 1)], tmp);
    u[static_cast<std::size_t>(i)] = tmp + g[static_cast<std::size_t>(i)];
  }
}

void MgritAdvection::relax(SpaceTimeVector& u, const SpaceTimeVector& g, int level) const {
  f_relax(u, g, level);
  if (method_.relax == Relaxation::FCF) {
    c_relax(u, g, level);
    f_relax(u, g, level);
  }
}

void MgritAdvection::cycle(SpaceTimeVector& u, const SpaceTimeVector& g, int level) const {
  if (level >= levels() - 1) {
    solve_level(u, g, level);
    return;
  }
  relax(u, g, level);

  // Injected residual at the C-points; index 0 carries g_0 - u_0.
  const int c = factor(level);
  const int nc = intervals(level + 1);
  SpaceTimeVector r = zeros(level + 1);
  r[0] = g[0] - u[0];
  Eigen::VectorXd tmp;
  for (int j = 1; j <= nc; ++j) {
    const auto i = static_cast<std::size_t>(j * c);
    step(level, u[i - 1], tmp);
    r[static_cast<std::size_t>(j)] = g[i] - u[i] + tmp;
  }

  SpaceTimeVector v = zeros(level + 1);
  if (level + 1 == levels() - 1) {
    solve_level(v, r, level + 1);
  } else {
    const int nu = method_.cycle == Cycle::F ? 2 : 1;
    for (int it = 0; it < nu; ++it) cycle(v, r, level + 1);
  }

  for (int j = 0; j <= nc; ++j) u[static_cast<std::size_t>(j * c)] += v[static_cast<std::size_t>(j)];
  f_relax(u, g, level);
}

double space_time_norm(const SpaceTimeVector& v, int stride) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); i += static_cast<std::size_t>(stride)) s += v[i].squaredNorm();
  return std::sqrt(s);
}

SpaceTimeVector difference(const SpaceTimeVector& a, const SpaceTimeVector& b) {
  SpaceTimeVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

Measurement measure(const SimulationSpec& spec) {
  if (spec.iterations < 1) throw ConfigError("measure: iterations must be positive");
  spec.ic.validate(spec.nx);
  const MgritAdvection solver(spec.nx, spec.advection, spec.hierarchy, spec.method);
  const Eigen::VectorXd u0 = spec.ic.evaluate(spec.nx);
  const SpaceTimeVector exact = solver.sequential_solve(u0);
  const SpaceTimeVector g = solver.rhs(u0);
  SpaceTimeVector u = solver.initial_guess(u0, spec.guess, spec.seed);
  const int stride = spec.error_scope == Scope::CPoints ? spec.hierarchy.m : 1;

  Measurement out;
  out.error_norms.push_back(space_time_norm(difference(u, exact), stride));
  const double e0 = out.error_norms[0];
  if (!std::isfinite(e0)) throw NumericalError("measure: initial error is not finite");
  if (!(e0 > 0)) {
    out.converged_at = 0;
    return out;
  }
  for (int k = 1; k <= spec.iterations; ++k) {
    if (out.error_norms.back() < kConvergedRelative * e0) {
      out.converged_at = k - 1;
      break;
    }
    solver.cycle(u, g);
    const double e = space_time_norm(difference(u, exact), stride);
    if (!std::isfinite(e)) throw NumericalError("measure: error norm is not finite");
    out.per_iteration.push_back(e / out.error_norms.back());
    out.error_norms.push_back(e);
    out.cumulative.push_back(e / e0);
  }
  return out;
}

}  // namespace pintana
