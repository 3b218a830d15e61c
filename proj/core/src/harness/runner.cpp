#include "pintana/harness/runner.hpp"

#include <algorithm>

#include "pintana/advection.hpp"
#include "pintana/elasticity.hpp"
#include "pintana/errors.hpp"
#include "pintana/harness/average.hpp"
#include "pintana/lfa.hpp"
#include "pintana/mgrit.hpp"
#include "pintana/ra.hpp"
#include "pintana/sama.hpp"

namespace pintana {

ProblemSymbols make_problem(const Experiment& e) {
  if (e.problem == "advection") return advection_symbols(AdvectionParams{e.c, e.dx, e.dt});
  ElasticityParams p;
  p.rho = e.rho;
  p.mu = e.mu;
  p.dx = e.dx;
  p.dt = e.dt;
  return elasticity_symbols(p);
}

namespace {

bool has(const std::vector<std::string>& v, const char* s) { return std::find(v.begin(), v.end(), s) != v.end(); }

std::string join_extra(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += ';';
    out += p;
  }
  return out;
}

class Emitter {
public:
  Emitter(const Experiment& e, RunReport& report) : e_(e), report_(report) {}

  ResultRow base(const std::string& method, const std::string& variant, Relaxation relax) const {
    ResultRow r;
    r.problem = e_.problem;
    r.method = method;
    r.variant = variant;
    r.relax = to_string(relax);
    r.levels = e_.levels();
    r.cycle = to_string(e_.cycle);
    r.m = e_.m;
    r.m2 = e_.cycle == Cycle::TwoLevel ? 0 : e_.m2;
    r.nx = e_.nx;
    r.nt = e_.nt;
    return r;
  }

  std::string context() const {
    return join_extra({"section=" + e_.name, e_.sweep_note.empty() ? "" : "sweep=" + e_.sweep_note});
  }

  void series(const std::string& method, const std::string& variant, Relaxation relax, const SweepResult& res,
              bool with_omega) {
    std::string notes;
    for (const auto& n : res.series.notes) notes += (notes.empty() ? "" : ";") + n;
    const std::string extra =
        join_extra({context(), "sampled=" + std::to_string(res.series.sampled),
                    res.series.excluded ? "excluded=" + std::to_string(res.series.excluded) : "",
                    res.series.degenerate ? "degenerate=" + std::to_string(res.series.degenerate) : "", notes});
    std::vector<double> values;
    for (const auto& p : res.series.points) {
      ResultRow r = base(method, variant, relax);
      r.k = p.k;
      r.value = p.value;
      r.theta_x = p.argmax.theta_x;
      if (e_.problem == "elasticity") r.theta_y = p.argmax.theta_y;
      if (with_omega) r.omega0 = p.argmax.omega0;
      r.extra = extra;
      report_.rows.push_back(r);
      values.push_back(p.value);
    }
    averages(method, variant, relax, values);
    if (e_.emit_map) {
      for (const auto& s : res.samples) {
        for (std::size_t i = 0; i < s.values.size(); ++i) {
          const int k = static_cast<int>(i) + 1;
          if (!e_.map_k.empty() && std::find(e_.map_k.begin(), e_.map_k.end(), k) == e_.map_k.end()) continue;
          ResultRow r = base(method, variant + "/map", relax);
          r.k = k;
          r.value = s.values[i];
          r.theta_x = s.freq.theta_x;
          if (e_.problem == "elasticity") r.theta_y = s.freq.theta_y;
          r.extra = context();
          report_.rows.push_back(r);
        }
      }
    }
  }

  void averages(const std::string& method, const std::string& variant, Relaxation relax,
                const std::vector<double>& values) {
    for (const auto& w : e_.averages) {
      ResultRow r = base(method, variant + "/avg", relax);
      r.k = w.hi;
      // A series cut short by convergence cannot fill the window.
      if (values.size() >= static_cast<std::size_t>(w.hi)) r.value = average_reduction(values, w.lo, w.hi);
      r.extra = join_extra({context(), "window=" + std::to_string(w.lo) + "-" + std::to_string(w.hi),
                            r.value ? "" : "excluded=converged"});
      report_.rows.push_back(r);
    }
  }

  void failure(const std::string& method, const std::string& variant, Relaxation relax, const std::string& what) {
    ResultRow r = base(method, variant, relax);
    r.k = 1;
    std::string msg = what;
    std::replace(msg.begin(), msg.end(), ';', ',');
    r.extra = join_extra({context(), "error=" + msg});
    report_.rows.push_back(r);
    ++report_.numeric_failures;
    report_.messages.push_back(e_.name + ": " + method + "/" + variant + "/" + to_string(relax) + ": " + what);
  }

private:
  const Experiment& e_;
  RunReport& report_;
};

template <class F>
void guarded(Emitter& em, const std::string& method, const std::string& variant, Relaxation relax, F&& f) {
  try {
    f();
  } catch (const ConfigError&) {
    throw;
  } catch (const NumericalError& err) {
    em.failure(method, variant, relax, err.what());
  }
}

void run_measured(const Experiment& e, Emitter& em, RunReport& report) {
  for (Relaxation relax : e.relax) {
    for (InitialGuess g : e.guesses) {
      const std::string guess = g == InitialGuess::Random ? "random" : "zero";
      guarded(em, "measured", guess, relax, [&] {
        SimulationSpec spec;
        spec.nx = e.nx;
        spec.advection = AdvectionParams{e.c, e.dx, e.dt};
        spec.hierarchy = e.hierarchy();
        spec.method = MethodSpec{relax, e.cycle};
        spec.ic = e.ic;
        spec.guess = g;
        spec.seed = e.seed;
        spec.iterations = e.kmax;
        spec.error_scope = e.error_scope;
        const Measurement meas = measure(spec);
        const std::string extra =
            join_extra({em.context(), "ic=" + e.ic_text, "seed=" + std::to_string(e.seed),
                        "error_scope=" + to_string(e.error_scope),
                        meas.converged_at ? "converged_at=" + std::to_string(*meas.converged_at) : ""});
        for (const auto& [kind, values] : {std::pair{std::string("cumulative"), &meas.cumulative},
                                           std::pair{std::string("per-iteration"), &meas.per_iteration}}) {
          for (int k = 1; k <= static_cast<int>(values->size()); ++k) {
            ResultRow r = em.base("measured", guess + "/" + kind, relax);
            r.k = k;
            r.value = (*values)[static_cast<std::size_t>(k - 1)];
            r.extra = extra;
            report.rows.push_back(r);
          }
        }
        em.averages("measured", guess + "/cumulative", relax, meas.cumulative);
      });
    }
  }
}

void run_lfa(const Experiment& e, const ProblemSymbols& problem, Emitter& em) {
  for (Relaxation relax : e.relax) {
    guarded(em, "lfa", "full-2norm", relax, [&] {
      LfaOptions opt;
      opt.k_max = e.kmax;
      opt.theta = ThetaGrid{problem.spatial_dim, e.htheta};
      opt.omega_spacing = e.homega;
      opt.schur = e.schur;
      opt.keep_samples = e.emit_map;
      em.series("lfa", "full-2norm", relax, sigma_lfa(problem, e.hierarchy(), MethodSpec{relax, e.cycle}, opt), true);
    });
  }
}

void run_sama(const Experiment& e, const ProblemSymbols& problem, Emitter& em) {
  for (Scope scope : e.scopes) {
    for (NormKind norm : e.norms) {
      const SamaVariant v{scope, norm};
      for (Relaxation relax : e.relax) {
        guarded(em, "sama", to_string(v), relax, [&] {
          SamaOptions opt;
          opt.variant = v;
          opt.k_max = e.kmax;
          opt.theta = ThetaGrid{problem.spatial_dim, e.htheta};
          opt.schur = e.schur;
          opt.allow_large_exact = e.allow_large_exact;
          opt.keep_samples = e.emit_map;
          em.series("sama", to_string(v), relax, sigma_sama(problem, e.hierarchy(), MethodSpec{relax, e.cycle}, opt),
                    false);
        });
      }
    }
  }
}

void run_ra(const Experiment& e, const ProblemSymbols& problem, Emitter& em) {
  for (Scope scope : e.ra_scopes) {
    const std::string variant = to_string(scope) + "-bound";
    for (Relaxation relax : e.relax) {
      guarded(em, "ra", variant, relax, [&] {
        RaOptions opt;
        opt.scope = scope;
        opt.k_max = e.kmax;
        opt.theta = ThetaGrid{problem.spatial_dim, e.htheta};
        opt.keep_samples = e.emit_map;
        em.series("ra", variant, relax, sigma_ra(problem, e.hierarchy(), relax, opt), false);
      });
    }
  }
}

}  // namespace

RunReport run_experiment(const Experiment& e, RunMode mode) {
  RunReport report;
  Emitter em(e, report);
  const ProblemSymbols problem = make_problem(e);
  const bool analyze = mode != RunMode::Simulate;
  if (analyze && has(e.methods, "lfa")) run_lfa(e, problem, em);
  if (analyze && (has(e.methods, "sama") || mode == RunMode::Compare)) run_sama(e, problem, em);
  if (analyze && has(e.methods, "ra")) run_ra(e, problem, em);
  if (mode != RunMode::Analyze && (has(e.methods, "measured") || mode == RunMode::Simulate || mode == RunMode::Compare)) {
    if (e.problem != "advection") throw ConfigError("config key 'problem': simulation is available for advection only");
    e.ic.validate(e.nx);
    run_measured(e, em, report);
  }
  return report;
}

RunReport run_config(const ConfigFile& file, const Overrides& overrides, RunMode mode,
                     const std::optional<std::string>& section) {
  RunReport all;
  bool found = false;
  // Resolve everything first so configuration errors surface before any work.
  std::vector<Experiment> experiments;
  for (const auto& s : file.sections) {
    if (section && s.name != *section) continue;
    found = true;
    for (auto& e : resolve_section(file, s, overrides)) experiments.push_back(std::move(e));
  }
  if (section && !found) throw ConfigError("config has no section '" + *section + "'");
  for (const auto& e : experiments) {
    RunReport r = run_experiment(e, mode);
    all.rows.insert(all.rows.end(), r.rows.begin(), r.rows.end());
    all.numeric_failures += r.numeric_failures;
    all.messages.insert(all.messages.end(), r.messages.begin(), r.messages.end());
  }
  return all;
}

}  // namespace pintana
