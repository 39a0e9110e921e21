#include "cli/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "dtls/analytics.hpp"
#include "dtls/errors.hpp"
#include "dtls/grating.hpp"
#include "dtls/oracles.hpp"

namespace dtls::cli {

namespace {

class CsvRow {
 public:
  explicit CsvRow(std::ostream& out) : out_(out) {}
  ~CsvRow() { out_ << '\n'; }
  CsvRow& operator<<(double v) { return put(format_double(v)); }
  CsvRow& operator<<(int v) { return put(std::to_string(v)); }
  CsvRow& operator<<(const std::string& s) { return put(s); }
  CsvRow& operator<<(const char* s) { return put(s); }

 private:
  CsvRow& put(const std::string& s) {
    if (!first_) out_ << ',';
    first_ = false;
    out_ << s;
    return *this;
  }
  std::ostream& out_;
  bool first_ = true;
};

void header(std::ostream& out, std::initializer_list<const char*> cols) {
  CsvRow row(out);
  for (const char* c : cols) row << c;
}

SweepSpec phase_period(int steps) {
  // [0, 2pi) without the duplicated endpoint
  return {SweepVariable::phi, 0.0, 2.0 * kPi * (steps - 1) / steps, steps};
}

RunConfig base_preset(double alpha0_L, double phi) {
  RunConfig cfg;
  cfg.params = PhysicalParams::radiative(0.0, alpha0_L, phi);
  return cfg;
}

}  // namespace

void emit_profile(const FieldProfile& f, double sigma_in, std::ostream& out) {
  header(out, {"y", "re_pi_plus", "im_pi_plus", "re_pi_minus", "im_pi_minus", "re_sigma_plus",
               "im_sigma_plus", "re_sigma_minus", "im_sigma_minus", "I_pi_plus", "I_pi_minus",
               "T_sigma_plus", "R_sigma_minus", "phase_pi_plus", "phase_pi_minus",
               "phase_sigma_plus", "phase_sigma_minus"});
  const bool has_probe = !f.sigma_plus.empty();
  const double norm = sigma_in * sigma_in;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Complex sp = has_probe ? f.sigma_plus[i] : Complex{};
    const Complex sm = has_probe ? f.sigma_minus[i] : Complex{};
    CsvRow row(out);
    row << f.y[i] << f.pi_plus[i].real() << f.pi_plus[i].imag() << f.pi_minus[i].real()
        << f.pi_minus[i].imag() << sp.real() << sp.imag() << sm.real() << sm.imag()
        << std::norm(f.pi_plus[i]) << std::norm(f.pi_minus[i]) << std::norm(sp) / norm
        << std::norm(sm) / norm << f.phase_pi_plus[i] << f.phase_pi_minus[i]
        << (has_probe ? f.phase_sigma_plus[i] : 0.0) << (has_probe ? f.phase_sigma_minus[i] : 0.0);
  }
}

void emit_sweep(const std::vector<SweepRow>& rows, std::ostream& out,
                const std::string& leading_name, double leading_value, bool with_header) {
  if (with_header) {
    CsvRow h(out);
    if (!leading_name.empty()) h << leading_name;
    for (const char* c : {"sweep_value", "R", "T", "T_analytic", "R_analytic",
                          "max_abs_alpha0L_cj", "newton_iters"}) {
      h << c;
    }
  }
  for (const auto& r : rows) {
    CsvRow row(out);
    if (!leading_name.empty()) row << leading_value;
    row << r.value << r.R << r.T << r.T_analytic << r.R_analytic << r.max_coupling
        << r.newton_iterations;
  }
}

void run_scenario(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  if (cfg.sweep) {
    emit_sweep(run_sweep(cfg.params, cfg.bc, cfg.solver, *cfg.sweep, cfg.threads), out);
    return;
  }
  const auto res = solve_scattering(cfg.params, cfg.bc, cfg.solver);
  emit_profile(res.profile, cfg.bc.omega_sigma_plus_in, out);
}

void emit_coefficients(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  const auto control = solve_control_bvp(cfg.params, cfg.bc, cfg.solver);
  const auto& f = control.profile;
  const double F0 = saturation(cfg.params, 0.0).F0;
  header(out, {"y", "r_abs", "a", "b", "eta", "eta_p", "c0", "re_c_plus", "im_c_plus",
               "re_c_minus", "im_c_minus", "re_c_plus_minus", "im_c_plus_minus", "re_cbar_0",
               "im_cbar_0", "re_cbar_1", "im_cbar_1"});
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Complex r = f.pi_minus[i] / f.pi_plus[i];
    const auto mp = modulation_params(F0, f.pi_plus[i], r);
    const auto gc = coupling_coefficients(cfg.params, mp, harmonic_coefficients(mp), f.pi_plus[i]);
    CsvRow row(out);
    row << f.y[i] << mp.r_abs << mp.a << mp.b << gc.eta << gc.eta_p << gc.c0
        << gc.c_plus.real() << gc.c_plus.imag() << gc.c_minus.real() << gc.c_minus.imag()
        << gc.c_plus_minus.real() << gc.c_plus_minus.imag() << gc.cbar_0.real()
        << gc.cbar_0.imag() << gc.cbar_1.real() << gc.cbar_1.imag();
  }
}

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names{"fig3", "fig4", "fig5", "fig6",
                                              "fig7", "fig8", "fig9"};
  return names;
}

RunConfig figure_config(const std::string& name) {
  RunConfig cfg;
  if (name == "fig3" || name == "fig7") {
    cfg = base_preset(0.3, 0.0);
    cfg.sweep = phase_period(128);
  } else if (name == "fig4") {
    cfg = base_preset(0.3, kPi / 4);
  } else if (name == "fig5") {
    cfg = base_preset(0.6, 0.0);
    cfg.sweep = phase_period(128);
  } else if (name == "fig6") {
    cfg = base_preset(0.6, kPi / 4);
  } else if (name == "fig8") {
    cfg = base_preset(0.6, kPi / 2);
  } else if (name == "fig9") {
    cfg = base_preset(0.6, 0.0);
  } else {
    throw ConfigError("unknown figure '" + name + "'");
  }
  return cfg;
}

void run_figure(const std::string& name, const RunConfig& cfg, std::ostream& out,
                std::ostream& log) {
  if (name != "fig7") {
    run_scenario(cfg, out);
    return;
  }
  cfg.validate();
  if (!cfg.sweep) throw ConfigError("fig7 needs a phase sweep");
  const double detuning = 2.0 * cfg.params.gamma_d;
  bool first = true;
  for (double d0 : {0.0, detuning}) {
    auto p = cfg.params;
    p.delta0 = d0;
    emit_sweep(run_sweep(p, cfg.bc, cfg.solver, *cfg.sweep, cfg.threads), out, "delta0", d0,
               first);
    first = false;
  }
  auto p0 = cfg.params;
  p0.delta0 = 0.0;
  auto p2 = cfg.params;
  p2.delta0 = detuning;
  const auto e0 = phase_extrema(p0, cfg.bc, cfg.solver, 64, cfg.threads);
  const auto e2 = phase_extrema(p2, cfg.bc, cfg.solver, 64, cfg.threads);
  const double shift = std::remainder(e2.T_min.phi - e0.T_min.phi, kPi);
  const double phi_L = susceptibilities(p2, 1.0).phi_L;
  log << "T_min phase at delta0=0: " << format_double(e0.T_min.phi / kPi) << " pi\n"
      << "T_min phase at delta0=" << format_double(detuning)
      << ": " << format_double(e2.T_min.phi / kPi) << " pi\n"
      << "extremum shift: " << format_double(shift / kPi) << " pi\n"
      << "analytic phi_L: " << format_double(phi_L / kPi) << " pi\n"
      << "T amplitude: " << format_double(e0.T_max.value - e0.T_min.value) << " -> "
      << format_double(e2.T_max.value - e2.T_min.value) << '\n'
      << "R amplitude: " << format_double(e0.R_max.value - e0.R_min.value) << " -> "
      << format_double(e2.R_max.value - e2.R_min.value) << '\n';
}

void run_oracle(const std::string& which, const RunConfig& cfg, int samples, unsigned seed,
                std::ostream& out, std::ostream& log) {
  cfg.validate();
  if (samples < 1) throw ConfigError("samples must be >= 1");
  if (which == "bloch") {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<> amp(0.0, 1.5), ang(0.0, 2.0 * kPi), det(-3.0, 3.0);
    header(out, {"delta0", "phi", "re_pi", "im_pi", "re_sigma", "im_sigma", "err_rho_pi",
                 "err_rho_sigma", "abs_rho_cd"});
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
      auto p = cfg.params;
      p.delta0 = det(rng);
      p.phi = ang(rng);
      const Complex op = std::polar(amp(rng), ang(rng));
      const Complex os = std::polar(amp(rng), ang(rng));
      const auto rho = oracles::bloch_steady_state(p, op, os);
      const auto cf = steady_coherences_full(p, op, os);
      const double e_pi = std::abs(rho.rho_pi() - cf.rho_pi);
      const double e_sigma = std::abs(rho.rho_sigma() - cf.rho_sigma);
      worst = std::max({worst, e_pi, e_sigma});
      CsvRow(out) << p.delta0 << p.phi << op.real() << op.imag() << os.real() << os.imag()
                  << e_pi << e_sigma << std::abs(rho.rho_excited_zeeman());
    }
    log << "max |closed form - master equation|: " << format_double(worst) << '\n';
  } else if (which == "fourier") {
    const Complex plus{cfg.bc.omega_pi_plus_in, 0.0};
    const Complex r = Complex{cfg.bc.omega_pi_minus_in, 0.0} / plus;
    const auto mp = modulation_params(saturation(cfg.params, 0.0).F0, plus, r);
    const auto hc = harmonic_coefficients(mp);
    header(out, {"n", "re_closed", "im_closed", "re_quadrature", "im_quadrature", "abs_error"});
    double worst = 0.0;
    for (int n = -5; n <= 5; ++n) {
      const Complex c = hc.c(n);
      const Complex q = oracles::fourier_quadrature(mp.a, mp.b, mp.phi_r, n);
      worst = std::max(worst, std::abs(c - q));
      CsvRow(out) << n << c.real() << c.imag() << q.real() << q.imag() << std::abs(c - q);
    }
    log << "max |closed form - quadrature|: " << format_double(worst) << '\n';
  } else if (which == "dephasing") {
    header(out, {"y", "psi_closed_form"});
    for (int i = 0; i < samples; ++i) {
      const double y = samples == 1 ? 0.0 : double(i) / (samples - 1);
      CsvRow(out) << y << analytic_dephasing(cfg.params, y);
    }
    log << "max |closed form - ODE|: "
        << format_double(oracles::ode_crosscheck_dephasing(cfg.params, std::max(samples, 2)))
        << '\n';
  } else {
    throw ConfigError("unknown oracle '" + which + "'");
  }
}

}  // namespace dtls::cli
