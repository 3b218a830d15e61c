#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pintana/harness/config.hpp"
#include "pintana/harness/csv.hpp"

namespace pintana {

enum class RunMode {
  Analyze,   // lfa / sama / ra methods of each experiment
  Simulate,  // measured MGRIT convergence only
  Compare,   // every listed method plus measured and sama
};

struct RunReport {
  std::vector<ResultRow> rows;
  int numeric_failures = 0;
  std::vector<std::string> messages;
};

ProblemSymbols make_problem(const Experiment& e);

RunReport run_experiment(const Experiment& e, RunMode mode);

// Runs every section (or only `section` when given) of a config file.
RunReport run_config(const ConfigFile& file, const Overrides& overrides, RunMode mode,
                     const std::optional<std::string>& section = std::nullopt);

}  // namespace pintana
