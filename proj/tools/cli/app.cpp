#include "cli/app.hpp"

#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "cli/run_config.hpp"
#include "cli/scenarios.hpp"
#include "dtls/errors.hpp"

namespace dtls::cli {

namespace {

// Flag values kept apart from the config so that flags override the file.
struct Overrides {
  std::string config_path;
  std::string out_path;
  std::optional<double> delta0, alpha0_L, phi, gamma, gamma_d, gamma_ze;
  std::optional<double> pi_plus, pi_minus, sigma_plus;
  std::optional<int> grid;
  std::optional<double> tol;
  std::optional<int> max_iter;
  std::optional<unsigned> threads;
  std::optional<std::string> var;
  std::optional<double> from, to;
  std::optional<int> steps;
  std::vector<std::string> settings;
};

void add_common(CLI::App* app, Overrides& o, bool with_sweep) {
  app->add_option("--config", o.config_path, "flat key = value config file");
  app->add_option("--out", o.out_path, "output file (default: standard output)");
  app->add_option("--delta0", o.delta0, "detuning Delta0 / Gamma_d");
  app->add_option("--alpha0L", o.alpha0_L, "optical depth alpha0 L");
  app->add_option("--phi", o.phi, "control/probe relative phase (rad)");
  app->add_option("--gamma", o.gamma, "excited-state decay rate");
  app->add_option("--gamma-d", o.gamma_d, "optical coherence decay rate");
  app->add_option("--gamma-ze", o.gamma_ze, "excited Zeeman coherence decay rate");
  app->add_option("--omega-pi-plus", o.pi_plus, "Omega_pi^+(0)");
  app->add_option("--omega-pi-minus", o.pi_minus, "Omega_pi^-(L)");
  app->add_option("--omega-sigma", o.sigma_plus, "Omega_sigma^+(0)");
  app->add_option("--grid", o.grid, "grid points along the sample");
  app->add_option("--tol", o.tol, "ODE relative and shooting tolerance");
  app->add_option("--max-newton", o.max_iter, "shooting iteration cap");
  app->add_option("--threads", o.threads, "sweep workers (0: all cores)");
  app->add_option("--set", o.settings, "extra key=value assignment")->take_all();
  if (with_sweep) {
    app->add_option("--var", o.var, "sweep variable: phi, delta0 or alpha0_L");
    app->add_option("--from", o.from, "first sweep value");
    app->add_option("--to", o.to, "last sweep value");
    app->add_option("--steps", o.steps, "number of sweep points");
  }
}

RunConfig resolve(RunConfig cfg, const Overrides& o) {
  if (!o.config_path.empty()) cfg = load_config(o.config_path, std::move(cfg));
  for (const auto& s : o.settings) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + s + "'");
    apply_setting(cfg, s.substr(0, eq), s.substr(eq + 1));
  }
  auto& p = cfg.params;
  if (o.delta0) p.delta0 = *o.delta0;
  if (o.alpha0_L) p.alpha0_L = *o.alpha0_L;
  if (o.phi) p.phi = *o.phi;
  if (o.gamma) p.gamma = *o.gamma;
  if (o.gamma_d) p.gamma_d = *o.gamma_d;
  if (o.gamma_ze) p.gamma_ze = *o.gamma_ze;
  if (o.pi_plus) cfg.bc.omega_pi_plus_in = *o.pi_plus;
  if (o.pi_minus) cfg.bc.omega_pi_minus_in = *o.pi_minus;
  if (o.sigma_plus) cfg.bc.omega_sigma_plus_in = *o.sigma_plus;
  if (o.grid) cfg.solver.grid_points = *o.grid;
  if (o.tol) {
    cfg.solver.ode_rel_tol = *o.tol;
    cfg.solver.shoot_tol = *o.tol;
  }
  if (o.max_iter) cfg.solver.max_newton_iter = *o.max_iter;
  if (o.threads) cfg.threads = *o.threads;
  if (o.var) apply_setting(cfg, "sweep_var", *o.var);
  if (o.from || o.to || o.steps) {
    if (!cfg.sweep) throw ConfigError("--from/--to/--steps need a sweep variable (--var)");
    if (o.from) cfg.sweep->from = *o.from;
    if (o.to) cfg.sweep->to = *o.to;
    if (o.steps) cfg.sweep->steps = *o.steps;
  }
  cfg.validate();
  return cfg;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Probe reflection and transmission of a standing-wave driven four-level medium",
               "dtls-sim"};
  app.require_subcommand(1);
  Overrides o;

  std::function<void(std::ostream&)> action;

  auto* propagate = app.add_subcommand("propagate", "single solve, profile CSV");
  add_common(propagate, o, false);
  propagate->callback([&] {
    action = [&](std::ostream& os) {
      auto cfg = resolve({}, o);
      cfg.sweep.reset();
      run_scenario(cfg, os);
    };
  });

  auto* sweep = app.add_subcommand("sweep", "one-dimensional sweep, R/T CSV");
  add_common(sweep, o, true);
  sweep->callback([&] {
    action = [&](std::ostream& os) {
      const auto cfg = resolve({}, o);
      if (!cfg.sweep) throw ConfigError("sweep needs --var (or sweep_var in the config)");
      run_scenario(cfg, os);
    };
  });

  std::string figure_name;
  auto* figure = app.add_subcommand("figure", "figure presets");
  figure->add_option("name", figure_name, "figure preset")
      ->required()
      ->check(CLI::IsMember(figure_names()));
  add_common(figure, o, true);
  figure->callback([&] {
    action = [&](std::ostream& os) {
      const auto cfg = resolve(figure_config(figure_name), o);
      run_figure(figure_name, cfg, os, err);
    };
  });

  auto* coefficients = app.add_subcommand("coefficients", "grating coefficients along y");
  add_common(coefficients, o, false);
  coefficients->callback([&] {
    action = [&](std::ostream& os) { emit_coefficients(resolve({}, o), os); };
  });

  std::string oracle_name;
  int samples = 100;
  unsigned seed = 1;
  auto* oracle = app.add_subcommand("oracle", "validation against brute-force oracles");
  oracle->add_option("which", oracle_name, "bloch, fourier or dephasing")
      ->required()
      ->check(CLI::IsMember({"bloch", "fourier", "dephasing"}));
  oracle->add_option("--samples", samples, "random samples / output points");
  oracle->add_option("--seed", seed, "random seed");
  add_common(oracle, o, false);
  oracle->callback([&] {
    action = [&](std::ostream& os) {
      run_oracle(oracle_name, resolve({}, o), samples, seed, os, err);
    };
  });

  auto* config = app.add_subcommand("config", "print the effective configuration");
  add_common(config, o, true);
  config->callback([&] {
    action = [&](std::ostream& os) { os << serialize(resolve({}, o)); };
  });

  try {
    // CLI11 parses in reverse order from a vector.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (o.out_path.empty()) {
      action(out);
    } else {
      std::ofstream file(o.out_path);
      if (!file) throw ConfigError("cannot open output file '" + o.out_path + "'");
      action(file);
      file.flush();
      if (!file) throw Error("write failed for '" + o.out_path + "'");
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const NoConvergence& e) {
    err << "error: " << e.what() << " (iterations " << e.iterations() << ", residual "
        << format_double(e.residual()) << ")\n";
    return kNoConvergence;
  } catch (const NodeError& e) {
    err << "error: " << e.what() << '\n';
    return kNodeError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

}  // namespace dtls::cli
