#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pintana/frequency.hpp"
#include "pintana/linalg.hpp"

namespace pintana {

enum class Relaxation { F, FCF };
enum class Cycle { TwoLevel, V, F };
enum class Scope { Full, CPoints };
enum class NormKind { Exact2, OneInfBound };

struct MethodSpec {
  Relaxation relax = Relaxation::F;
  Cycle cycle = Cycle::TwoLevel;

  int levels() const { return cycle == Cycle::TwoLevel ? 2 : 3; }
};

// Time-grid hierarchy. nt fine intervals, coarsening factor m to the
// first coarse level and m2 to the second (three-level cycles only).
struct Hierarchy {
  int nt = 0;
  int m = 2;
  int m2 = 1;
  double dt = 0.0;

  int coarse_intervals() const { return nt / m; }
  int coarsest_intervals() const { return nt / (m * m2); }

  // Throws ConfigError if nt, m, m2 do not fit the requested cycle.
  void validate(const MethodSpec& method) const;
};

// Block symbols of the time stepper on each level for one frequency.
struct LevelSymbols {
  CMatrix phi;    // fine step
  CMatrix phic;   // step scaled by m
  CMatrix phicc;  // step scaled by m*m2, empty for two-level cycles
};

// theta -> q x q propagator symbol for a time step scaled by step_scale.
struct ProblemSymbols {
  std::string name;
  int spatial_dim = 1;
  int block_size = 1;
  std::function<CMatrix(const Frequency&, int step_scale)> phi;
  // Frequencies where the symbol needed a fallback (reported, not fatal).
  std::function<bool(const Frequency&)> degenerate = [](const Frequency&) { return false; };

  LevelSymbols levels(const Frequency& f, const Hierarchy& h, const MethodSpec& method) const;
};

struct PredictionPoint {
  int k = 0;
  double value = 0.0;
  Frequency argmax;
};

struct PredictionSeries {
  std::vector<PredictionPoint> points;  // k = 1..k_max
  std::size_t sampled = 0;              // frequencies evaluated
  std::size_t excluded = 0;             // frequencies skipped (singular or defective)
  std::size_t degenerate = 0;           // frequencies evaluated with a fallback symbol
  std::vector<std::string> notes;

  double at(int k) const { return points.at(static_cast<std::size_t>(k - 1)).value; }
};

// Per-frequency values, kept when a caller wants the full map.
struct FrequencySample {
  Frequency freq;
  std::vector<double> values;  // k = 1..k_max; empty when excluded
};

struct SweepResult {
  PredictionSeries series;
  std::vector<FrequencySample> samples;
};

std::string to_string(Relaxation r);
std::string to_string(Cycle c);
std::string to_string(Scope s);
std::string to_string(NormKind n);

}  // namespace pintana
