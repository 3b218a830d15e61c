#include "pintana/harness/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numbers>
#include <sstream>

#include "pintana/errors.hpp"
#include "pintana/frequency.hpp"

namespace pintana {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ',')) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

[[noreturn]] void bad(const std::string& key, const std::string& value, const std::string& why) {
  throw ConfigError("config key '" + key + "': " + why + " (got '" + value + "')");
}

int parse_int(const std::string& key, const std::string& v, int min_value) {
  try {
    std::size_t used = 0;
    const long x = std::stol(v, &used);
    if (used != v.size()) bad(key, v, "expected an integer");
    if (x < min_value) bad(key, v, "must be at least " + std::to_string(min_value));
    return static_cast<int>(x);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    bad(key, v, "expected an integer");
  }
}

double parse_real_key(const std::string& key, const std::string& v) {
  try {
    return parse_real(v);
  } catch (const std::exception&) {
    bad(key, v, "expected a number");
  }
}

double parse_positive(const std::string& key, const std::string& v) {
  const double x = parse_real_key(key, v);
  if (!(x > 0)) bad(key, v, "must be positive");
  return x;
}

bool parse_bool(const std::string& key, const std::string& v) {
  const auto l = lower(v);
  if (l == "1" || l == "true" || l == "yes" || l == "on") return true;
  if (l == "0" || l == "false" || l == "no" || l == "off") return false;
  bad(key, v, "expected true or false");
}

Relaxation parse_relax(const std::string& key, const std::string& v) {
  const auto l = lower(v);
  if (l == "f") return Relaxation::F;
  if (l == "fcf") return Relaxation::FCF;
  bad(key, v, "expected F or FCF");
}

Cycle parse_cycle(const std::string& key, const std::string& v) {
  const auto l = lower(v);
  if (l == "two-level" || l == "2" || l == "twolevel") return Cycle::TwoLevel;
  if (l == "v") return Cycle::V;
  if (l == "f") return Cycle::F;
  bad(key, v, "expected two-level, V or F");
}

NormKind parse_norm(const std::string& key, const std::string& v) {
  const auto l = lower(v);
  if (l == "exact" || l == "2norm" || l == "exact2") return NormKind::Exact2;
  if (l == "bound" || l == "oneinf" || l == "oneinfbound") return NormKind::OneInfBound;
  bad(key, v, "expected exact or bound");
}

Scope parse_scope(const std::string& key, const std::string& v) {
  const auto l = lower(v);
  if (l == "full") return Scope::Full;
  if (l == "cpts" || l == "cpoints" || l == "c-points") return Scope::CPoints;
  bad(key, v, "expected full or cpoints");
}

using Entries = std::vector<std::pair<std::string, std::string>>;

}  // namespace

double parse_real(const std::string& raw) {
  const std::string t = trim(raw);
  if (lower(t).find("pi") != std::string::npos) return parse_angle(t);
  const auto slash = t.find('/');
  std::size_t used = 0;
  if (slash == std::string::npos) {
    const double v = std::stod(t, &used);
    if (used != t.size()) throw ConfigError("malformed number '" + raw + "'");
    return v;
  }
  const std::string a = trim(t.substr(0, slash)), b = trim(t.substr(slash + 1));
  const double num = std::stod(a, &used);
  if (used != a.size()) throw ConfigError("malformed number '" + raw + "'");
  const double den = std::stod(b, &used);
  if (used != b.size() || den == 0.0) throw ConfigError("malformed number '" + raw + "'");
  return num / den;
}

InitialCondition parse_initial_condition(const std::string& raw) {
  // Terms "A*cos(angle)", "Acos(angle)" or "cos(angle)" joined by '+'.
  InitialCondition ic;
  std::string t;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  std::size_t pos = 0;
  while (pos < t.size()) {
    const auto cpos = t.find("cos(", pos);
    if (cpos == std::string::npos) throw ConfigError("initial condition '" + raw + "': expected cos(...) terms");
    std::string amp = t.substr(pos, cpos - pos);
    if (!amp.empty() && amp.back() == '*') amp.pop_back();
    const auto close = t.find(')', cpos);
    if (close == std::string::npos) throw ConfigError("initial condition '" + raw + "': missing ')'");
    const double a = amp.empty() ? 1.0 : parse_real(amp);
    const double theta = parse_angle(t.substr(cpos + 4, close - cpos - 4));
    ic.modes.emplace_back(a, theta);
    pos = close + 1;
    if (pos < t.size()) {
      if (t[pos] != '+') throw ConfigError("initial condition '" + raw + "': terms must be joined by '+'");
      ++pos;
    }
  }
  if (ic.modes.empty()) throw ConfigError("initial condition is empty");
  return ic;
}

std::string ConfigFile::description() const {
  for (const auto& [k, v] : defaults)
    if (k == "description") return v;
  return {};
}

ConfigFile parse_config(std::istream& in, const std::string& origin) {
  ConfigFile f;
  f.origin = origin;
  std::string line;
  int lineno = 0;
  ConfigSection* current = nullptr;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(origin + ":" + std::to_string(lineno) + ": malformed section header");
      f.sections.push_back({trim(line.substr(1, line.size() - 2)), {}});
      current = &f.sections.back();
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = lower(trim(line.substr(0, eq)));
    std::replace(key.begin(), key.end(), '-', '_');
    const std::string value = trim(line.substr(eq + 1));
    (current ? current->entries : f.defaults).emplace_back(key, value);
  }
  if (f.sections.empty()) f.sections.push_back({"main", {}});
  return f;
}

ConfigFile load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  return parse_config(in, path);
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "description", "problem",  "method", "relax", "cycle",       "levels", "m",     "m2",
      "nx",          "nt",       "dx",     "dt",    "c",           "rho",    "mu",    "htheta",
      "homega",      "norm",     "scope",  "ra_scope", "kmax",     "seed",   "average", "ic",
      "guess",       "error_scope", "schur", "allow_large_exact", "emit_argmax_map", "map_k", "sweep"};
  return keys;
}

Hierarchy Experiment::hierarchy() const {
  Hierarchy h;
  h.nt = nt;
  h.m = m;
  h.m2 = cycle == Cycle::TwoLevel ? 1 : m2;
  h.dt = dt;
  return h;
}

namespace {

Experiment build(const std::string& name, const Entries& entries, const std::string& sweep_note) {
  std::map<std::string, std::string> kv;
  for (const auto& [k, v] : entries) {
    if (std::find(config_keys().begin(), config_keys().end(), k) == config_keys().end())
      throw ConfigError("unknown config key '" + k + "'");
    kv[k] = v;
  }
  Experiment e;
  e.name = name;
  e.sweep_note = sweep_note;
  auto get = [&](const char* k) -> const std::string* {
    auto it = kv.find(k);
    return it == kv.end() ? nullptr : &it->second;
  };
  if (auto v = get("problem")) {
    e.problem = lower(*v);
    if (e.problem != "advection" && e.problem != "elasticity") bad("problem", *v, "expected advection or elasticity");
  }
  if (auto v = get("method")) {
    e.methods.clear();
    for (const auto& s : split_list(*v)) {
      const auto l = lower(s);
      if (l != "lfa" && l != "sama" && l != "ra" && l != "measured") bad("method", *v, "expected lfa, sama, ra or measured");
      e.methods.push_back(l);
    }
    if (e.methods.empty()) bad("method", *v, "empty list");
  }
  if (auto v = get("relax")) {
    e.relax.clear();
    for (const auto& s : split_list(*v)) e.relax.push_back(parse_relax("relax", s));
    if (e.relax.empty()) bad("relax", *v, "empty list");
  }
  std::optional<int> levels;
  if (auto v = get("levels")) {
    levels = parse_int("levels", *v, 2);
    if (*levels > 3) bad("levels", *v, "expected 2 or 3");
  }
  if (auto v = get("cycle")) e.cycle = parse_cycle("cycle", *v);
  if (levels) {
    if (*levels == 2 && e.cycle != Cycle::TwoLevel) bad("levels", std::to_string(*levels), "V and F cycles need 3 levels");
    if (*levels == 3 && e.cycle == Cycle::TwoLevel) e.cycle = Cycle::V;
  }
  if (auto v = get("m")) e.m = parse_int("m", *v, 2);
  if (auto v = get("m2")) e.m2 = parse_int("m2", *v, 2);
  if (auto v = get("nx")) e.nx = parse_int("nx", *v, 2);
  if (auto v = get("nt")) e.nt = parse_int("nt", *v, 1);
  if (auto v = get("dx")) e.dx = parse_positive("dx", *v);
  if (auto v = get("dt")) e.dt = parse_positive("dt", *v);
  if (auto v = get("c")) {
    e.c = parse_real_key("c", *v);
    if (!(e.c >= 0)) bad("c", *v, "must be non-negative");
  }
  if (auto v = get("rho")) e.rho = parse_positive("rho", *v);
  if (auto v = get("mu")) e.mu = parse_positive("mu", *v);
  e.htheta = 2.0 * std::numbers::pi / e.nx;
  if (auto v = get("htheta")) e.htheta = parse_positive("htheta", *v);
  e.homega = std::numbers::pi / 32;
  if (auto v = get("homega")) e.homega = parse_positive("homega", *v);
  if (auto v = get("norm")) {
    e.norms.clear();
    for (const auto& s : split_list(*v)) e.norms.push_back(parse_norm("norm", s));
    if (e.norms.empty()) bad("norm", *v, "empty list");
  }
  if (auto v = get("scope")) {
    e.scopes.clear();
    for (const auto& s : split_list(*v)) e.scopes.push_back(parse_scope("scope", s));
    if (e.scopes.empty()) bad("scope", *v, "empty list");
  }
  if (auto v = get("ra_scope")) {
    e.ra_scopes.clear();
    for (const auto& s : split_list(*v)) e.ra_scopes.push_back(parse_scope("ra_scope", s));
    if (e.ra_scopes.empty()) bad("ra_scope", *v, "empty list");
  }
  if (auto v = get("kmax")) e.kmax = parse_int("kmax", *v, 1);
  if (auto v = get("seed")) {
    try {
      std::size_t used = 0;
      e.seed = std::stoull(*v, &used);
      if (used != v->size()) bad("seed", *v, "expected a non-negative integer");
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      bad("seed", *v, "expected a non-negative integer");
    }
  }
  if (auto v = get("average")) {
    for (const auto& s : split_list(*v)) {
      const auto colon = s.find(':');
      if (colon == std::string::npos) bad("average", *v, "expected lo:hi windows");
      AverageWindow w{parse_int("average", trim(s.substr(0, colon)), 1), parse_int("average", trim(s.substr(colon + 1)), 2)};
      if (w.hi <= w.lo) bad("average", *v, "window must contain at least two iterations");
      e.averages.push_back(w);
    }
  }
  e.ic_text = "2cos(pi/16)";
  if (auto v = get("ic")) e.ic_text = *v;
  try {
    e.ic = parse_initial_condition(e.ic_text);
  } catch (const ConfigError& err) {
    bad("ic", e.ic_text, err.what());
  }
  if (auto v = get("guess")) {
    e.guesses.clear();
    for (const auto& s : split_list(*v)) {
      const auto l = lower(s);
      if (l == "random") e.guesses.push_back(InitialGuess::Random);
      else if (l == "zero") e.guesses.push_back(InitialGuess::Zero);
      else bad("guess", *v, "expected random or zero");
    }
  }
  if (auto v = get("error_scope")) e.error_scope = parse_scope("error_scope", *v);
  if (auto v = get("schur")) {
    const auto l = lower(*v);
    if (l == "coarse") e.schur = CoarseSchur::CoarsePower;
    else if (l == "fine") e.schur = CoarseSchur::FinePower;
    else bad("schur", *v, "expected coarse or fine");
  }
  if (auto v = get("allow_large_exact")) e.allow_large_exact = parse_bool("allow_large_exact", *v);
  if (auto v = get("emit_argmax_map")) e.emit_map = parse_bool("emit_argmax_map", *v);
  if (auto v = get("map_k"))
    for (const auto& s : split_list(*v)) e.map_k.push_back(parse_int("map_k", s, 1));

  // Cross-field checks.
  try {
    e.hierarchy().validate(MethodSpec{Relaxation::F, e.cycle});
  } catch (const ConfigError& err) {
    throw ConfigError(std::string("config key 'nt': ") + err.what());
  }
  try {
    (void)symmetric_samples(std::numbers::pi, e.htheta);
  } catch (const ConfigError&) {
    bad("htheta", format_angle(e.htheta), "spacing must divide 2pi");
  }
  for (const auto& w : e.averages)
    if (w.hi > e.kmax) bad("average", std::to_string(w.lo) + ":" + std::to_string(w.hi), "window exceeds kmax");
  for (int k : e.map_k)
    if (k > e.kmax) bad("map_k", std::to_string(k), "exceeds kmax");
  const bool has_measured = std::find(e.methods.begin(), e.methods.end(), "measured") != e.methods.end();
  if (has_measured && e.problem != "advection") bad("method", "measured", "simulation is available for advection only");
  if (has_measured && e.problem == "advection") {
    try {
      e.ic.validate(e.nx);
    } catch (const ConfigError& err) {
      bad("ic", e.ic_text, err.what());
    }
  }
  const bool has_ra = std::find(e.methods.begin(), e.methods.end(), "ra") != e.methods.end();
  if (has_ra && e.cycle != Cycle::TwoLevel) bad("method", "ra", "reduction analysis covers two-level cycles only");
  return e;
}

std::vector<Experiment> expand(const std::string& name, Entries entries, const Overrides& overrides) {
  std::optional<std::string> sweep;
  Entries base;
  for (auto& kv : entries) {
    if (kv.first == "sweep") sweep = kv.second;
    else base.push_back(kv);
  }
  if (!sweep) return {build(name, base, "")};
  const auto colon = sweep->find(':');
  if (colon == std::string::npos) bad("sweep", *sweep, "expected 'key: v1, v2, ...'");
  std::string key = lower(trim(sweep->substr(0, colon)));
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "sweep" || std::find(config_keys().begin(), config_keys().end(), key) == config_keys().end())
    bad("sweep", *sweep, "unknown key '" + key + "'");
  // An explicit override of the swept key wins over the sweep.
  if (overrides.count(key)) return {build(name, base, "")};
  const auto values = split_list(sweep->substr(colon + 1));
  if (values.empty()) bad("sweep", *sweep, "no values");
  std::vector<Experiment> out;
  for (const auto& v : values) {
    Entries e = base;
    e.emplace_back(key, v);
    out.push_back(build(name, e, key + "=" + v));
  }
  return out;
}

}  // namespace

std::vector<Experiment> resolve_section(const ConfigFile& file, const ConfigSection& section,
                                        const Overrides& overrides) {
  Entries all = file.defaults;
  all.insert(all.end(), section.entries.begin(), section.entries.end());
  for (const auto& [k, v] : overrides) all.emplace_back(k, v);
  return expand(section.name, all, overrides);
}

std::vector<Experiment> resolve_overrides(const Overrides& overrides) {
  Entries all(overrides.begin(), overrides.end());
  return expand("cli", all, {});
}

}  // namespace pintana
