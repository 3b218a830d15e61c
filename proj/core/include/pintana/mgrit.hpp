#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pintana/advection.hpp"
#include "pintana/hierarchy.hpp"

namespace pintana {

using SpaceTimeVector = std::vector<Eigen::VectorXd>;  // nt+1 spatial vectors, index 0 = initial time

enum class InitialGuess { Zero, Random };

// u0_j = sum amplitude * cos(theta * j) on the periodic grid j = 0..nx-1.
struct InitialCondition {
  std::vector<std::pair<double, double>> modes;  // (amplitude, theta)

  Eigen::VectorXd evaluate(int nx) const;
  void validate(int nx) const;  // each theta must be a grid frequency 2 pi j / nx
};

inline constexpr std::uint64_t kDefaultSeed = 20240101;

// Two- and three-level MGRIT for periodic implicit-upwind advection. Level
// 0 is the fine grid; level l uses time step dt * (m, m*m2)[l-1].
class MgritAdvection {
public:
  MgritAdvection(int nx, const AdvectionParams& p, const Hierarchy& h, const MethodSpec& method);

  int levels() const { return method_.levels(); }
  int intervals(int level) const;  // time intervals on a level
  int factor(int level) const;     // coarsening factor from level to level+1

  SpaceTimeVector zeros(int level) const;
  SpaceTimeVector rhs(const Eigen::VectorXd& u0) const;  // g_0 = u0, zero elsewhere
  SpaceTimeVector sequential_solve(const Eigen::VectorXd& u0) const;
  SpaceTimeVector initial_guess(const Eigen::VectorXd& u0, InitialGuess guess, std::uint64_t seed) const;

  void step(int level, const Eigen::VectorXd& in, Eigen::VectorXd& out) const;
  void f_relax(SpaceTimeVector& u, const SpaceTimeVector& g, int level) const;
  void c_relax(SpaceTimeVector& u, const SpaceTimeVector& g, int level) const;
  void relax(SpaceTimeVector& u, const SpaceTimeVector& g, int level) const;  // F or FCF
  void solve_level(SpaceTimeVector& u, const SpaceTimeVector& g, int level) const;

  // One iteration on `level`. At the top this is a full MGRIT iteration; on
  // an intermediate level it is one two-grid cycle for the coarse problem.
  void cycle(SpaceTimeVector& u, const SpaceTimeVector& g, int level = 0) const;

private:
  int nx_;
  AdvectionParams params_;
  Hierarchy h_;
  MethodSpec method_;
  std::vector<double> lambda_;
};

double space_time_norm(const SpaceTimeVector& v, int stride = 1);
SpaceTimeVector difference(const SpaceTimeVector& a, const SpaceTimeVector& b);

struct SimulationSpec {
  int nx = 64;
  AdvectionParams advection;
  Hierarchy hierarchy;
  MethodSpec method;
  InitialCondition ic;
  InitialGuess guess = InitialGuess::Random;
  std::uint64_t seed = kDefaultSeed;
  int iterations = 10;
  Scope error_scope = Scope::Full;  // C-point scope measures C-points only
};

// Series stop early once the error drops below 1e-13 ||e_0||; converged_at
// then holds the last iteration index that was run (0 for a zero initial
// error, in which case all ratio series are empty).
struct Measurement {
  std::vector<double> error_norms;   // k = 0..iterations
  std::vector<double> per_iteration; // ||e_k|| / ||e_{k-1}||, k = 1..iterations
  std::vector<double> cumulative;    // ||e_k|| / ||e_0||
  std::optional<int> converged_at;
};

inline constexpr double kConvergedRelative = 1e-13;

Measurement measure(const SimulationSpec& spec);

}  // namespace pintana
