// Command-line driver: analyze | simulate | compare | list-configs.
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pintana/errors.hpp"
#include "pintana/harness/config.hpp"
#include "pintana/harness/csv.hpp"
#include "pintana/harness/runner.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

std::string config_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("PINTANA_CONFIG_DIR")) return env;
  return PINTANA_CONFIG_DIR;
}

std::string resolve_config(const std::string& name, const std::string& dir) {
  if (fs::exists(name)) return name;
  const fs::path candidate = fs::path(dir) / (name + ".cfg");
  if (fs::exists(candidate)) return candidate.string();
  throw pintana::ConfigError("no config named '" + name + "' (looked in " + dir + ")");
}

struct RunArgs {
  std::string config;
  std::string section;
  std::string out;
  std::map<std::string, std::string> values;  // flag name -> raw value
  bool emit_map = false;
  bool allow_large_exact = false;
};

// Flags that map one-to-one onto config keys.
const std::vector<std::string> kKeyFlags = {
    "problem", "method", "relax", "cycle",    "levels", "m",    "m2",      "nx",  "nt",          "dx",
    "dt",      "c",      "rho",   "mu",       "htheta", "homega", "norm",  "scope", "ra-scope",  "kmax",
    "seed",    "average", "ic",   "guess",    "error-scope", "schur", "map-k", "sweep"};

void add_run_options(CLI::App* cmd, RunArgs& args) {
  cmd->add_option("--config", args.config, "Config name (see list-configs) or path");
  cmd->add_option("--section", args.section, "Run only this section of the config");
  cmd->add_option("--out", args.out, "Write CSV here instead of standard output");
  for (const auto& key : kKeyFlags)
    cmd->add_option_function<std::string>("--" + key, [&args, key](const std::string& v) { args.values[key] = v; },
                                          "Override config key '" + key + "'");
  cmd->add_flag("--emit-argmax-map", args.emit_map, "Also emit per-frequency rows");
  cmd->add_flag("--allow-large-exact", args.allow_large_exact, "Permit exact 2-norms on large full-grid blocks");
}

int run(const RunArgs& args, pintana::RunMode mode, const std::string& dir) {
  pintana::Overrides ov;
  for (const auto& [k, v] : args.values) {
    std::string key = k;
    std::replace(key.begin(), key.end(), '-', '_');
    ov[key] = v;
  }
  if (args.emit_map) ov["emit_argmax_map"] = "true";
  if (args.allow_large_exact) ov["allow_large_exact"] = "true";

  pintana::RunReport report;
  if (args.config.empty()) {
    for (const auto& e : pintana::resolve_overrides(ov)) {
      auto r = pintana::run_experiment(e, mode);
      report.rows.insert(report.rows.end(), r.rows.begin(), r.rows.end());
      report.numeric_failures += r.numeric_failures;
      report.messages.insert(report.messages.end(), r.messages.begin(), r.messages.end());
    }
  } else {
    const auto file = pintana::load_config(resolve_config(args.config, dir));
    report = pintana::run_config(file, ov, mode,
                                 args.section.empty() ? std::nullopt : std::optional<std::string>(args.section));
  }

  if (args.out.empty()) {
    pintana::write_csv(std::cout, report.rows);
  } else {
    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw pintana::ConfigError("cannot write '" + args.out + "'");
    pintana::write_csv(out, report.rows);
  }
  for (const auto& m : report.messages) std::cerr << "numerical failure: " << m << '\n';
  return report.numeric_failures ? kExitNumeric : 0;
}

int list_configs(const std::string& dir) {
  std::vector<fs::path> files;
  if (fs::is_directory(dir))
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.path().extension() == ".cfg") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    const auto cfg = pintana::load_config(f.string());
    std::cout << f.stem().string() << "  " << cfg.description() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convergence analysis of Parareal and MGRIT: space-time LFA, SAMA, reduction analysis"};
  app.require_subcommand(1);
  std::string dir_flag;
  app.add_option("--config-dir", dir_flag, "Directory holding named configs");

  RunArgs analyze_args, simulate_args, compare_args;
  auto* analyze = app.add_subcommand("analyze", "Run lfa / sama / ra predictions");
  add_run_options(analyze, analyze_args);
  auto* simulate = app.add_subcommand("simulate", "Measure MGRIT convergence on advection");
  add_run_options(simulate, simulate_args);
  auto* compare = app.add_subcommand("compare", "Predictions and measurements side by side");
  add_run_options(compare, compare_args);
  auto* list = app.add_subcommand("list-configs", "List shipped experiment configs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  const std::string dir = config_dir(dir_flag);
  try {
    if (*list) return list_configs(dir);
    if (*analyze) return run(analyze_args, pintana::RunMode::Analyze, dir);
    if (*simulate) return run(simulate_args, pintana::RunMode::Simulate, dir);
    if (*compare) return run(compare_args, pintana::RunMode::Compare, dir);
  } catch (const pintana::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const pintana::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumeric;
  }
  return 0;
}
