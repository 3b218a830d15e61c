#include "pintana/hierarchy.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "pintana/errors.hpp"
#include "pintana/sweep.hpp"

namespace pintana {

void Hierarchy::validate(const MethodSpec& method) const {
  if (m < 2) throw ConfigError("coarsening factor m must be at least 2");
  if (nt < 1) throw ConfigError("nt must be positive");
  if (nt % m != 0) throw ConfigError("nt=" + std::to_string(nt) + " is not divisible by m=" + std::to_string(m));
  if (method.cycle != Cycle::TwoLevel) {
    if (m2 < 2) throw ConfigError("three-level cycles need m2 >= 2");
    if ((nt / m) % m2 != 0)
      throw ConfigError("nt/m=" + std::to_string(nt / m) + " is not divisible by m2=" + std::to_string(m2));
  }
}

LevelSymbols ProblemSymbols::levels(const Frequency& f, const Hierarchy& h, const MethodSpec& method) const {
  LevelSymbols s;
  s.phi = phi(f, 1);
  s.phic = phi(f, h.m);
  if (method.cycle != Cycle::TwoLevel) s.phicc = phi(f, h.m * h.m2);
  return s;
}

std::string to_string(Relaxation r) { return r == Relaxation::F ? "F" : "FCF"; }

std::string to_string(Cycle c) {
  switch (c) {
    case Cycle::TwoLevel: return "two-level";
    case Cycle::V: return "V";
    case Cycle::F: return "F";
  }
  return "?";
}

std::string to_string(Scope s) { return s == Scope::Full ? "full" : "cpts"; }
std::string to_string(NormKind n) { return n == NormKind::Exact2 ? "2norm" : "bound"; }

unsigned sweep_threads() {
  if (const char* env = std::getenv("PINTANA_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1u;
}

PredictionSeries reduce_max(const std::vector<Frequency>& freqs,
                            const std::vector<std::optional<std::vector<double>>>& values, int k_max) {
  PredictionSeries s;
  s.points.resize(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    s.points[static_cast<std::size_t>(k - 1)].k = k;
    s.points[static_cast<std::size_t>(k - 1)].value = -std::numeric_limits<double>::infinity();
  }
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    if (!values[i]) {
      ++s.excluded;
      continue;
    }
    ++s.sampled;
    for (int k = 1; k <= k_max; ++k) {
      auto& p = s.points[static_cast<std::size_t>(k - 1)];
      const double v = (*values[i])[static_cast<std::size_t>(k - 1)];
      if (!std::isfinite(v))
        throw NumericalError("non-finite value at theta=(" + std::to_string(freqs[i].theta_x) + ", " +
                             std::to_string(freqs[i].theta_y) + ")");
      if (v > p.value) {
        p.value = v;
        p.argmax = freqs[i];
      }
    }
  }
  if (s.sampled == 0) throw NumericalError("every sampled frequency was excluded");
  return s;
}

}  // namespace pintana
