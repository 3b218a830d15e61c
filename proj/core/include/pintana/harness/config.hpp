#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pintana/hierarchy.hpp"
#include "pintana/lfa.hpp"
#include "pintana/mgrit.hpp"

namespace pintana {

// Flat "key = value" text. Keys before the first [section] are defaults
// shared by every section. '#' starts a comment.
struct ConfigSection {
  std::string name;
  std::vector<std::pair<std::string, std::string>> entries;
};

struct ConfigFile {
  std::string origin;
  std::vector<std::pair<std::string, std::string>> defaults;
  std::vector<ConfigSection> sections;

  std::string description() const;
};

ConfigFile parse_config(std::istream& in, const std::string& origin);
ConfigFile load_config(const std::string& path);

using Overrides = std::map<std::string, std::string>;

struct AverageWindow {
  int lo = 1;
  int hi = 10;
};

// One fully typed experiment (one section, one sweep value).
struct Experiment {
  std::string name;
  std::string problem = "advection";
  std::vector<std::string> methods = {"lfa", "sama", "ra"};
  std::vector<Relaxation> relax = {Relaxation::F, Relaxation::FCF};
  Cycle cycle = Cycle::TwoLevel;
  int m = 2;
  int m2 = 2;
  int nx = 64;
  int nt = 64;
  double dx = 0.5;
  double dt = 0.1;
  double c = 1.0;
  double rho = 1.0;
  double mu = 1.0;
  double htheta = 0.0;  // resolved: 2 pi / nx unless given
  double homega = 0.0;  // resolved: pi / 32 unless given
  std::vector<NormKind> norms = {NormKind::Exact2};
  std::vector<Scope> scopes = {Scope::Full};       // sama
  std::vector<Scope> ra_scopes = {Scope::CPoints};  // ra
  int kmax = 10;
  std::uint64_t seed = kDefaultSeed;
  std::vector<AverageWindow> averages;
  InitialCondition ic;
  std::string ic_text;
  std::vector<InitialGuess> guesses = {InitialGuess::Random};
  Scope error_scope = Scope::Full;
  CoarseSchur schur = CoarseSchur::CoarsePower;
  bool allow_large_exact = false;
  bool emit_map = false;
  std::vector<int> map_k;
  std::string sweep_note;  // "key=value" when produced by a sweep

  Hierarchy hierarchy() const;
  int levels() const { return cycle == Cycle::TwoLevel ? 2 : 3; }
};

// Known keys; anything else is rejected by resolve_section.
const std::vector<std::string>& config_keys();

// defaults < section < overrides. A "sweep = key: v1, v2" entry expands
// into one experiment per value. Throws ConfigError naming the key.
std::vector<Experiment> resolve_section(const ConfigFile& file, const ConfigSection& section,
                                        const Overrides& overrides);

// Builds a single experiment from overrides only (no config file).
std::vector<Experiment> resolve_overrides(const Overrides& overrides);

double parse_real(const std::string& text);
InitialCondition parse_initial_condition(const std::string& text);

}  // namespace pintana
