#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chmhd/output.hpp"
#include "chmhd/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace chmhd;

namespace {

constexpr double kPi = 3.14159265358979323846;

constexpr int kExitOk = 0;
constexpr int kExitPicard = 2;
constexpr int kExitEnergyFail = 3;
constexpr int kExitConfig = 4;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PicardAbort : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<int> levels = {4, 8, 16};
  int n = 8;
  double dt = 0.0;  // 0: derive from dt_rule (converge/simulate) or 1.0 (energy)
  std::string dt_rule = "0.1h2";
  double t_final = 0.5;
  double eps = 0.05;
  double lambda = 1.0;
  double s_c = 1.0;
  std::string coefficients = "paper-exp";
  double picard_tol = 1e-10;
  int picard_max = 50;
  std::string on_nonconvergence = "abort";
  std::string output_dir = ".";
  int snapshot_every = 0;
  int steps = 20;
  unsigned seed = 0;
  std::string sources = "mms";
};

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ConfigError("config parse error in " + path + ": " + e.what());
  }
  try {
    if (doc.contains("levels")) cfg.levels = doc["levels"].get<std::vector<int>>();
    if (doc.contains("n")) cfg.n = doc["n"].get<int>();
    if (doc.contains("dt")) cfg.dt = doc["dt"].get<double>();
    if (doc.contains("dt_rule")) cfg.dt_rule = doc["dt_rule"].get<std::string>();
    if (doc.contains("t_final")) cfg.t_final = doc["t_final"].get<double>();
    if (doc.contains("eps")) cfg.eps = doc["eps"].get<double>();
    if (doc.contains("lambda")) cfg.lambda = doc["lambda"].get<double>();
    if (doc.contains("s_c")) cfg.s_c = doc["s_c"].get<double>();
    if (doc.contains("coefficients")) cfg.coefficients = doc["coefficients"].get<std::string>();
    if (doc.contains("picard_tol")) cfg.picard_tol = doc["picard_tol"].get<double>();
    if (doc.contains("picard_max")) cfg.picard_max = doc["picard_max"].get<int>();
    if (doc.contains("on_nonconvergence"))
      cfg.on_nonconvergence = doc["on_nonconvergence"].get<std::string>();
    if (doc.contains("output_dir")) cfg.output_dir = doc["output_dir"].get<std::string>();
    if (doc.contains("snapshot_every")) cfg.snapshot_every = doc["snapshot_every"].get<int>();
    if (doc.contains("steps")) cfg.steps = doc["steps"].get<int>();
    if (doc.contains("seed")) cfg.seed = doc["seed"].get<unsigned>();
    if (doc.contains("sources")) cfg.sources = doc["sources"].get<std::string>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config type error: ") + e.what());
  }
}

struct Laws {
  CoefficientLaw kappa, nu, eta;
};

Laws parse_laws(const std::string& spec) {
  if (spec == "paper-exp")
    return {CoefficientLaw::ExpPos(), CoefficientLaw::ExpNeg(), CoefficientLaw::ExpPos()};
  if (spec.rfind("constant:", 0) == 0) {
    double c = 0.0;
    try {
      c = std::stod(spec.substr(9));
    } catch (const std::exception&) {
      throw ConfigError("bad coefficient constant in '" + spec + "'");
    }
    if (!(c > 0.0)) throw ConfigError("coefficient constant must be positive");
    return {CoefficientLaw::Constant(c), CoefficientLaw::Constant(c), CoefficientLaw::Constant(c)};
  }
  throw ConfigError("unknown coefficients selection '" + spec +
                    "' (expected paper-exp or constant:<c>)");
}

SchemeParams scheme_params(const RunConfig& cfg, double dt) {
  SchemeParams p;
  p.eps = cfg.eps;
  p.lambda = cfg.lambda;
  p.s_c = cfg.s_c;
  p.dt = dt;
  const Laws laws = parse_laws(cfg.coefficients);
  p.kappa = laws.kappa;
  p.nu = laws.nu;
  p.eta = laws.eta;
  p.picard_tol = cfg.picard_tol;
  p.picard_max = cfg.picard_max;
  if (cfg.on_nonconvergence == "abort")
    p.abort_on_nonconvergence = true;
  else if (cfg.on_nonconvergence == "warn")
    p.abort_on_nonconvergence = false;
  else
    throw ConfigError("on_nonconvergence must be abort or warn");
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return p;
}

double level_dt(const RunConfig& cfg, int n) {
  if (cfg.dt > 0.0) return cfg.dt;
  if (cfg.dt_rule == "0.1h2") {
    const double h = 1.0 / n;
    return 0.1 * h * h;
  }
  throw ConfigError("unknown dt_rule '" + cfg.dt_rule + "' (expected 0.1h2) and no explicit dt");
}

int step_count(double t_final, double dt) {
  if (t_final <= 0.0) return 0;
  return std::max(1, static_cast<int>(std::llround(t_final / dt)));
}

ManufacturedSolution make_solution(const RunConfig& cfg) {
  const Laws laws = parse_laws(cfg.coefficients);
  return ManufacturedSolution(cfg.eps, cfg.lambda, cfg.s_c, laws.kappa, laws.nu, laws.eta);
}

Sources make_sources(const ManufacturedSolution& ms) {
  Sources src;
  src.g_phi = [&ms](double x, double y, double t) { return ms.g_phi(x, y, t); };
  src.g_u = [&ms](double x, double y, double t) { return ms.g_u(x, y, t); };
  src.g_B = [&ms](double x, double y, double t) { return ms.g_B(x, y, t); };
  return src;
}

std::pair<FieldState, StepDiagnostics> run_step(const Spaces& spaces, const FieldState& prev,
                                                const SchemeParams& params, const Sources& sources,
                                                const std::string& context) {
  try {
    auto result = step(spaces, prev, params, sources);
    if (!params.abort_on_nonconvergence && result.second.final_increment >= params.picard_tol)
      std::fprintf(stderr, "warning: %s: Picard stopped at increment %s after %d iterations\n",
                   context.c_str(), format_double(result.second.final_increment).c_str(),
                   result.second.picard_iters);
    return result;
  } catch (const std::runtime_error& e) {
    throw PicardAbort(context + ": " + e.what());
  }
}

int cmd_converge(const RunConfig& cfg) {
  if (cfg.levels.size() < 2) throw ConfigError("converge needs at least 2 levels");
  for (std::size_t i = 1; i < cfg.levels.size(); ++i)
    if (cfg.levels[i] != 2 * cfg.levels[i - 1])
      throw ConfigError("levels must double (h must halve)");

  const fs::path dir(cfg.output_dir);
  fs::create_directories(dir);
  const ManufacturedSolution ms = make_solution(cfg);
  const Sources sources = make_sources(ms);

  CsvWriter errors(dir / "errors.csv", {"n", "h", "dt", "field", "norm", "error"});
  std::vector<ErrorReport> reports;
  for (int n : cfg.levels) {
    const double dt = level_dt(cfg, n);
    const int n_steps = step_count(cfg.t_final, dt);
    const SchemeParams params = scheme_params(cfg, cfg.t_final > 0 ? cfg.t_final / n_steps : dt);
    const Spaces spaces(n);
    FieldState state = initialize(
        spaces, [&](double x, double y) { return ms.phi(x, y, 0.0); },
        [&](double x, double y) { return ms.u(x, y, 0.0); },
        [&](double x, double y) { return ms.B(x, y, 0.0); });
    double max_weak_div = 0.0;
    for (int k = 1; k <= n_steps; ++k) {
      auto [next, diag] =
          run_step(spaces, state, params, sources, "level n=" + std::to_string(n) + " step " +
                                                       std::to_string(k));
      max_weak_div = std::max(max_weak_div, diag.weak_div);
      state = std::move(next);
    }
    ErrorReport rep = error_norms(spaces, state, ms, state.t);
    rep.dt = params.dt;
    reports.push_back(rep);

    const std::string ns = std::to_string(n), hs = format_double(rep.h),
                      dts = format_double(rep.dt);
    auto emit = [&](const char* field, const char* norm, double e) {
      errors.row({ns, hs, dts, field, norm, format_double(e)});
    };
    const std::vector<std::pair<const char*, const FieldErrors*>> fields = {
        {"phi", &rep.phi}, {"mu", &rep.mu}, {"u", &rep.u}, {"B", &rep.B}};
    for (const auto& [name, fe] : fields) {
      emit(name, "l2", fe->l2);
      emit(name, "h1_semi", fe->h1_semi);
      emit(name, "h1", fe->h1());
    }
    emit("p", "l2", rep.p_l2);
    std::printf("n=%2d  h=%.5f  dt=%.3e  |phi|_H1=%.4e  |mu|_H1=%.4e  |u|_H1=%.4e  "
                "|B|_H1=%.4e  |p|_L2=%.4e  max_weak_div=%.2e\n",
                n, rep.h, rep.dt, rep.phi.h1(), rep.mu.h1(), rep.u.h1(), rep.B.h1(), rep.p_l2,
                max_weak_div);
  }

  CsvWriter rates(dir / "rates.csv",
                  {"h_coarse", "h_fine", "phi_h1", "mu_h1", "u_h1", "B_h1", "p_l2"});
  for (const RateRow& r : observed_rates(reports)) {
    rates.row({format_double(r.h_coarse), format_double(r.h_fine), format_double(r.phi_h1),
               format_double(r.mu_h1), format_double(r.u_h1), format_double(r.B_h1),
               format_double(r.p_l2)});
    std::printf("rate h=%.5f -> %.5f  phi=%.3f  mu=%.3f  u=%.3f  B=%.3f  p=%.3f\n", r.h_coarse,
                r.h_fine, r.phi_h1, r.mu_h1, r.u_h1, r.B_h1, r.p_l2);
  }
  return kExitOk;
}

int cmd_energy(const RunConfig& cfg) {
  const double dt = cfg.dt > 0.0 ? cfg.dt : 1.0;
  const SchemeParams params = scheme_params(cfg, dt);
  const fs::path dir(cfg.output_dir);
  fs::create_directories(dir);
  const Spaces spaces(cfg.n);

  // smooth phase in [-1, 1]; optional small seeded solenoidal u0, B0
  double amp_u = 0.0, amp_B = 0.0;
  if (cfg.seed != 0) {
    std::mt19937 rng(cfg.seed);
    std::uniform_real_distribution<double> unif(0.01, 0.1);
    amp_u = unif(rng);
    amp_B = unif(rng);
  }
  FieldState state = initialize(
      spaces, [](double x, double y) { return std::cos(kPi * x) * std::cos(kPi * y); },
      [&](double x, double y) {
        // curl of the stream function sin^2(pi x) sin^2(pi y): solenoidal, zero trace
        const double sx = std::sin(kPi * x), sy = std::sin(kPi * y);
        return Eigen::Vector2d(amp_u * kPi * sx * sx * std::sin(2.0 * kPi * y),
                               -amp_u * kPi * sy * sy * std::sin(2.0 * kPi * x));
      },
      [&](double x, double y) {
        return Eigen::Vector2d(amp_B * std::sin(kPi * x) * std::cos(kPi * y),
                               -amp_B * std::sin(kPi * y) * std::cos(kPi * x));
      });

  const Eigen::VectorXd volume_weights =
      assemble_load(spaces.ctx, spaces.q2, ScalarFunction([](double, double) { return 1.0; }));
  const double mass0 = volume_weights.dot(state.phi);
  const double e0 = energy(spaces, state, params);

  CsvWriter csv(dir / "energy.csv", {"step", "t", "E", "picard_iters", "max_weak_div",
                                     "mass_drift"});
  csv.row({"0", format_double(0.0), format_double(e0), "0", format_double(0.0),
           format_double(0.0)});

  bool monotone = true;
  double e_prev = e0;
  for (int k = 1; k <= cfg.steps; ++k) {
    auto [next, diag] = run_step(spaces, state, params, Sources::none(),
                                 "energy step " + std::to_string(k));
    const double e = energy(spaces, next, params);
    const double drift = std::abs(volume_weights.dot(next.phi) - mass0);
    csv.row({std::to_string(k), format_double(next.t), format_double(e),
             std::to_string(diag.picard_iters), format_double(diag.weak_div),
             format_double(drift)});
    if (e > e_prev + 1e-8 * std::abs(e0)) monotone = false;
    e_prev = e;
    state = std::move(next);
  }
  std::printf("energy: n=%d dt=%s steps=%d E0=%s E_final=%s -> %s\n", cfg.n,
              format_double(dt).c_str(), cfg.steps, format_double(e0).c_str(),
              format_double(e_prev).c_str(), monotone ? "PASS" : "FAIL");
  return monotone ? kExitOk : kExitEnergyFail;
}

int cmd_simulate(const RunConfig& cfg) {
  const fs::path dir(cfg.output_dir);
  fs::create_directories(dir);
  const double dt = cfg.dt > 0.0 ? cfg.dt : level_dt(cfg, cfg.n);
  const int n_steps = step_count(cfg.t_final, dt);
  const SchemeParams params = scheme_params(cfg, n_steps > 0 ? cfg.t_final / n_steps : dt);
  const Spaces spaces(cfg.n);

  std::optional<ManufacturedSolution> ms;
  Sources sources = Sources::none();
  FieldState state;
  if (cfg.sources == "mms") {
    ms.emplace(make_solution(cfg));
    sources = make_sources(*ms);
    state = initialize(
        spaces, [&](double x, double y) { return ms->phi(x, y, 0.0); },
        [&](double x, double y) { return ms->u(x, y, 0.0); },
        [&](double x, double y) { return ms->B(x, y, 0.0); });
  } else if (cfg.sources == "none") {
    state = initialize(
        spaces, [](double x, double y) { return std::cos(kPi * x) * std::cos(kPi * y); },
        [](double, double) { return Eigen::Vector2d::Zero().eval(); },
        [](double, double) { return Eigen::Vector2d::Zero().eval(); });
  } else {
    throw ConfigError("sources must be mms or none");
  }

  CsvWriter csv(dir / "diag.csv", {"step", "t", "picard_iters", "final_increment",
                                   "max_solve_residual", "weak_div", "energy"});
  auto snapshot = [&](int k) {
    if (cfg.snapshot_every <= 0) return;
    char name[32];
    std::snprintf(name, sizeof(name), "snap_%04d.vtk", k);
    write_vtk_snapshot(dir / name, spaces, state);
  };
  csv.row({"0", format_double(state.t), "0", format_double(0.0), format_double(0.0),
           format_double(weak_divergence_norm(spaces, state.u)),
           format_double(energy(spaces, state, params))});
  snapshot(0);

  for (int k = 1; k <= n_steps; ++k) {
    auto [next, diag] = run_step(spaces, state, params, sources,
                                 "simulate step " + std::to_string(k));
    state = std::move(next);
    csv.row({std::to_string(k), format_double(state.t), std::to_string(diag.picard_iters),
             format_double(diag.final_increment), format_double(diag.max_solve_residual),
             format_double(diag.weak_div), format_double(energy(spaces, state, params))});
    if (cfg.snapshot_every > 0 && k % cfg.snapshot_every == 0) snapshot(k);
  }
  std::printf("simulate: n=%d dt=%s steps=%d t_final=%s E_final=%s\n", cfg.n,
              format_double(params.dt).c_str(), n_steps, format_double(state.t).c_str(),
              format_double(energy(spaces, state, params)).c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coupled phase-field / incompressible MHD finite element solver"};
  app.require_subcommand(1);

  std::string config_path;
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON configuration file");
    sub->add_option("--output-dir", cfg.output_dir, "output directory");
  };

  CLI::App* converge = app.add_subcommand("converge", "manufactured-solution convergence study");
  add_common(converge);
  std::vector<int> levels_flag;
  converge->add_option("--levels", levels_flag, "mesh levels, e.g. 4,8,16")->delimiter(',');
  double t_final_flag = -1.0;
  converge->add_option("--t-final", t_final_flag, "final time");

  CLI::App* energy_cmd = app.add_subcommand("energy", "energy-stability study (zero sources)");
  add_common(energy_cmd);
  double dt_flag = -1.0;
  int steps_flag = -1, n_flag = -1;
  long long seed_flag = -1;
  energy_cmd->add_option("--dt", dt_flag, "time step");
  energy_cmd->add_option("--steps", steps_flag, "number of steps");
  energy_cmd->add_option("--seed", seed_flag, "seed for initial velocity/magnetic amplitudes");
  energy_cmd->add_option("--n", n_flag, "mesh subdivisions per side");

  CLI::App* simulate = app.add_subcommand("simulate", "time integration with diagnostics");
  add_common(simulate);
  simulate->add_option("--n", n_flag, "mesh subdivisions per side");
  simulate->add_option("--t-final", t_final_flag, "final time");
  simulate->add_option("--dt", dt_flag, "time step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (!config_path.empty()) load_config_file(config_path, cfg);
    // flags override file values
    if (!levels_flag.empty()) cfg.levels = levels_flag;
    if (t_final_flag >= 0.0) cfg.t_final = t_final_flag;
    if (dt_flag > 0.0) cfg.dt = dt_flag;
    if (steps_flag >= 0) cfg.steps = steps_flag;
    if (seed_flag >= 0) cfg.seed = static_cast<unsigned>(seed_flag);
    if (n_flag > 0) cfg.n = n_flag;
    if (cfg.n < 1) throw ConfigError("n must be >= 1");
    if (cfg.t_final < 0.0) throw ConfigError("t_final must be >= 0");
    if (cfg.steps < 0) throw ConfigError("steps must be >= 0");

    if (app.got_subcommand(converge)) return cmd_converge(cfg);
    if (app.got_subcommand(energy_cmd)) return cmd_energy(cfg);
    return cmd_simulate(cfg);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const PicardAbort& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitPicard;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
