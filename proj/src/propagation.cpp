#include "dtls/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "dtls/errors.hpp"

namespace dtls {

namespace odeint = boost::numeric::odeint;

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kTwoPi = 2.0 * kPi;

using ControlState = std::array<double, 4>;
// control (4) + three probe solutions (3 x 4)
using AugmentedState = std::array<double, 16>;
using ForwardState = std::array<double, 4>;

template <class State>
Complex load(const State& s, std::size_t i) {
  return {s[i], s[i + 1]};
}

template <class State>
void store(State& s, std::size_t i, Complex v) {
  s[i] = v.real();
  s[i + 1] = v.imag();
}

std::vector<double> uniform_grid(int n) {
  std::vector<double> y(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(i)] = static_cast<double>(i) / (n - 1);
  y.back() = 1.0;
  return y;
}

/// Integrates `system` over the grid, landing exactly on every node.
template <class State, class System, class Observer>
void integrate_on_grid(System system, State& state, const std::vector<double>& grid,
                       const SolverOptions& opts, Observer observer) {
  auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(opts.ode_abs_tol,
                                                                             opts.ode_rel_tol);
  try {
    odeint::integrate_times(stepper, system, state, grid.begin(), grid.end(), 1e-3, observer,
                            odeint::max_step_checker(100000));
  } catch (const odeint::odeint_error& e) {
    throw IntegrationError(std::string("ODE integration failed: ") + e.what());
  }
}

/// Grating couplings at position y; a standing wave whose |r| moved across 1
/// since the entrance has passed through a node.
GratingCoefficients local_coefficients(const PhysicalParams& params, Envelope plus,
                                       Envelope minus, bool below_node, double y) {
  if (std::norm(plus) == 0.0) {
    throw DegenerateField("forward control vanished at y = " + std::to_string(y));
  }
  const double r_abs = std::abs(minus / plus);
  if ((r_abs < 1.0) != below_node) {
    throw NodeError("control field crosses a node (|r| = 1) at y = " + std::to_string(y), y);
  }
  try {
    return grating_coefficients(params, plus, minus);
  } catch (const NodeError& e) {
    throw NodeError(std::string(e.what()) + " at y = " + std::to_string(y), y);
  }
}

std::pair<Complex, Complex> control_derivative(const PhysicalParams& params,
                                               const GratingCoefficients& gc, Envelope plus,
                                               Envelope minus) {
  const double od = params.alpha0_L;
  return {-od * (gc.cbar_0 * plus + gc.cbar_1 * minus),
          od * (gc.cbar_m1 * plus + gc.cbar_0 * minus)};
}

struct ControlSystem {
  const PhysicalParams* params;

  void operator()(const ControlState& s, ControlState& ds, double y) const {
    const Envelope plus = load(s, 0);
    const Envelope minus = load(s, 2);
    if (std::norm(plus) == 0.0) {
      throw DegenerateField("forward control vanished at y = " + std::to_string(y));
    }
    const auto [dp, dm] = control_rhs(*params, plus, minus);
    store(ds, 0, dp);
    store(ds, 2, dm);
  }
};

struct AugmentedSystem {
  const PhysicalParams* params;
  bool below_node;

  void operator()(const AugmentedState& s, AugmentedState& ds, double y) const {
    const Envelope plus = load(s, 0);
    const Envelope minus = load(s, 2);
    const auto gc = local_coefficients(*params, plus, minus, below_node, y);
    const auto [dp, dm] = control_derivative(*params, gc, plus, minus);
    store(ds, 0, dp);
    store(ds, 2, dm);
    for (std::size_t k = 4; k < 16; k += 4) {
      const auto [dsp, dsm] = probe_rhs(*params, gc, load(s, k), load(s, k + 2));
      store(ds, k, dsp);
      store(ds, k + 2, dsm);
    }
  }
};

double wrap_to(double value, double lower) {
  double w = std::fmod(value - lower, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return lower + w;
}

std::vector<double> raw_phases(const std::vector<Envelope>& field) {
  std::vector<double> out(field.size());
  std::transform(field.begin(), field.end(), out.begin(), envelope_phase);
  return out;
}

}  // namespace

void SolverOptions::validate() const {
  if (grid_points < 2) throw std::invalid_argument("grid_points must be >= 2");
  if (!(ode_rel_tol > 0.0) || !(ode_abs_tol > 0.0) || !(shoot_tol > 0.0)) {
    throw std::invalid_argument("tolerances must be positive");
  }
  if (max_newton_iter < 1) throw std::invalid_argument("max_newton_iter must be >= 1");
}

std::vector<double> unwrap_phase(const std::vector<double>& wrapped, std::size_t anchor) {
  std::vector<double> out(wrapped);
  if (out.empty()) return out;
  for (std::size_t i = anchor + 1; i < out.size(); ++i) {
    out[i] = out[i - 1] + std::remainder(wrapped[i] - out[i - 1], kTwoPi);
  }
  for (std::size_t i = anchor; i-- > 0;) {
    out[i] = out[i + 1] + std::remainder(wrapped[i] - out[i + 1], kTwoPi);
  }
  return out;
}

std::pair<Complex, Complex> control_rhs(const PhysicalParams& params, Envelope pi_plus,
                                        Envelope pi_minus) {
  // Only c_0 and c_{+-1} enter; both stay regular at |r| = 1.
  const double intensity = std::norm(pi_plus);
  if (intensity == 0.0) throw DegenerateField("control_rhs: forward control vanishes");
  const Complex r = pi_minus / pi_plus;
  const double F0 = saturation(params, 0.0).F0;
  const double den = 1.0 + F0 * intensity * (1.0 + std::norm(r));
  const double a_over_r = 2.0 * F0 * intensity / den;
  const double a = a_over_r * std::abs(r);
  const double root = std::sqrt((1.0 - a) * (1.0 + a));
  const double c0 = 1.0 / (den * root);
  // c_1 = c0 eta e^{i phi_r}, eta e^{i phi_r} = -(a/|r|) conj(r) / (1 + root)
  const Complex c1 = -c0 * a_over_r / (1.0 + root) * std::conj(r);
  const Complex lorentz = params.gamma_d / Complex(params.gamma_d, params.delta0);
  const double od = params.alpha0_L;
  return {-od * lorentz * (c0 * pi_plus + c1 * pi_minus),
          od * lorentz * (std::conj(c1) * pi_plus + c0 * pi_minus)};
}

std::pair<Complex, Complex> probe_rhs(const PhysicalParams& params,
                                      const GratingCoefficients& gc, Envelope sigma_plus,
                                      Envelope sigma_minus) {
  const Complex drive = params.alpha0_L * std::exp(2.0 * kI * params.phi);
  const Complex sp = std::conj(sigma_plus);
  const Complex sm = std::conj(sigma_minus);
  return {-drive * (gc.c_plus * sp + gc.c_plus_minus * sm),
          drive * (gc.c_plus_minus * sp + gc.c_minus * sm)};
}

ControlSolution solve_control_bvp(const PhysicalParams& params, const BoundaryConditions& bc,
                                  const SolverOptions& opts) {
  params.validate();
  opts.validate();
  const double entrance = bc.omega_pi_plus_in;
  if (entrance == 0.0) throw DegenerateField("solve_control_bvp: Omega_pi^+(0) = 0");
  const Complex target{bc.omega_pi_minus_in, 0.0};
  const auto grid = uniform_grid(opts.grid_points);
  const ControlSystem system{&params};

  ControlSolution sol;
  auto& prof = sol.profile;

  // Integrates from a trial Omega_pi^-(0) and returns the exit mismatch;
  // optionally records the profile.
  auto shoot = [&](Complex minus0, bool record) {
    ControlState s{};
    store(s, 0, Complex{entrance, 0.0});
    store(s, 2, minus0);
    if (record) {
      prof.y.clear();
      prof.pi_plus.clear();
      prof.pi_minus.clear();
    }
    integrate_on_grid(system, s, grid, opts, [&](const ControlState& st, double y) {
      if (record) {
        prof.y.push_back(y);
        prof.pi_plus.push_back(load(st, 0));
        prof.pi_minus.push_back(load(st, 2));
      }
    });
    return load(s, 2) - target;
  };

  const double tol = opts.shoot_tol * std::abs(entrance);
  Complex x = target;
  Complex f = shoot(x, false);
  int iter = 0;
  while (std::abs(f) > tol) {
    if (iter >= opts.max_newton_iter) {
      throw NoConvergence("solve_control_bvp: Newton iteration cap reached", iter, std::abs(f));
    }
    ++iter;
    const double h = 1e-7 * std::max(1.0, std::abs(x));
    const Complex dre = (shoot(x + h, false) - shoot(x - h, false)) / (2.0 * h);
    const Complex dim = (shoot(x + kI * h, false) - shoot(x - kI * h, false)) / (2.0 * h);
    // Jacobian columns: d(Re f, Im f)/d(Re x) and d(Re f, Im f)/d(Im x)
    const double j11 = dre.real(), j21 = dre.imag(), j12 = dim.real(), j22 = dim.imag();
    const double det = j11 * j22 - j12 * j21;
    if (det == 0.0 || !std::isfinite(det)) {
      throw NoConvergence("solve_control_bvp: singular shooting Jacobian", iter, std::abs(f));
    }
    const Complex step{-(j22 * f.real() - j12 * f.imag()) / det,
                       -(-j21 * f.real() + j11 * f.imag()) / det};
    double damping = 1.0;
    bool accepted = false;
    Error last_error("no trial step evaluated");
    for (int halving = 0; halving < 40; ++halving, damping *= 0.5) {
      const Complex trial = x + damping * step;
      Complex ft;
      try {
        ft = shoot(trial, false);
      } catch (const NodeError& e) {
        last_error = e;
        continue;
      } catch (const IntegrationError& e) {
        last_error = e;
        continue;
      }
      if (std::abs(ft) < std::abs(f)) {
        x = trial;
        f = ft;
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      throw NoConvergence(std::string("solve_control_bvp: damped Newton stalled (") +
                              last_error.what() + ")",
                          iter, std::abs(f));
    }
  }

  sol.residual = std::abs(shoot(x, true));
  sol.newton_iterations = iter;
  // The probe couplings are singular at |r| = 1, so the converged standing
  // wave must stay on the entrance side of that boundary everywhere.
  const bool below_node = std::abs(prof.pi_minus.front()) < std::abs(prof.pi_plus.front());
  for (std::size_t i = 0; i < prof.size(); ++i) {
    const double r_abs = std::abs(prof.pi_minus[i] / prof.pi_plus[i]);
    if ((r_abs < 1.0) != below_node || std::abs(r_abs - 1.0) <= 1e-12) {
      throw NodeError("control field crosses a node (|r| = 1) at y = " +
                          std::to_string(prof.y[i]),
                      prof.y[i]);
    }
  }
  prof.phase_pi_plus = unwrap_phase(raw_phases(prof.pi_plus), 0);
  prof.phase_pi_minus = unwrap_phase(raw_phases(prof.pi_minus), prof.size() - 1);
  return sol;
}

ScatteringResult solve_probe_bvp(const PhysicalParams& params, const FieldProfile& control,
                                 const BoundaryConditions& bc, const SolverOptions& opts) {
  params.validate();
  opts.validate();
  if (control.size() < 2) throw std::invalid_argument("solve_probe_bvp: empty control profile");
  const double e0 = bc.omega_sigma_plus_in;
  if (e0 == 0.0) throw DegenerateField("solve_probe_bvp: Omega_sigma^+(0) = 0");

  const Envelope plus0 = control.pi_plus.front();
  const Envelope minus0 = control.pi_minus.front();
  const bool below_node = std::abs(minus0) < std::abs(plus0);

  // Solution 0 carries the incident probe; 1 and 2 are homogeneous solutions
  // seeded with Omega_sigma^-(0) = 1 and i.
  AugmentedState s{};
  store(s, 0, plus0);
  store(s, 2, minus0);
  store(s, 4, Complex{e0, 0.0});
  store(s, 10, Complex{1.0, 0.0});
  store(s, 14, Complex{0.0, 1.0});

  std::vector<AugmentedState> samples;
  samples.reserve(control.size());
  integrate_on_grid(AugmentedSystem{&params, below_node}, s, control.y, opts,
                    [&](const AugmentedState& st, double) { samples.push_back(st); });

  const AugmentedState& end = samples.back();
  const Complex u0 = load(end, 6), u1 = load(end, 10), u2 = load(end, 14);
  // Real 2x2 system x1 u1 + x2 u2 = -u0 for Omega_sigma^-(L) = 0
  const double a11 = u1.real(), a12 = u2.real(), a21 = u1.imag(), a22 = u2.imag();
  const double det = a11 * a22 - a12 * a21;
  const double fro2 = a11 * a11 + a12 * a12 + a21 * a21 + a22 * a22;
  // cond_2 = (s_max / s_min) from the 2x2 invariants
  const double disc = std::sqrt(std::max(0.0, fro2 * fro2 - 4.0 * det * det));
  const double s_max = std::sqrt(0.5 * (fro2 + disc));
  const double s_min = det == 0.0 ? 0.0 : std::abs(det) / s_max;
  const double condition =
      s_min > 0.0 ? s_max / s_min : std::numeric_limits<double>::infinity();
  if (!(condition < 1e12)) {
    throw SingularSystem("solve_probe_bvp: superposition system is singular (cond = " +
                             std::to_string(condition) + ")",
                         condition);
  }
  const double x1 = (-u0.real() * a22 + a12 * u0.imag()) / det;
  const double x2 = (-a11 * u0.imag() + a21 * u0.real()) / det;

  ScatteringResult res;
  FieldProfile& prof = res.profile;
  prof.y = control.y;
  prof.pi_plus = control.pi_plus;
  prof.pi_minus = control.pi_minus;
  prof.phase_pi_plus = control.phase_pi_plus;
  prof.phase_pi_minus = control.phase_pi_minus;
  prof.sigma_plus.resize(samples.size());
  prof.sigma_minus.resize(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& st = samples[i];
    prof.sigma_plus[i] = load(st, 4) + x1 * load(st, 8) + x2 * load(st, 12);
    prof.sigma_minus[i] = load(st, 6) + x1 * load(st, 10) + x2 * load(st, 14);
  }

  const Complex reflected = prof.sigma_minus.front();
  const Complex transmitted = prof.sigma_plus.back();
  res.R = std::norm(reflected / e0);
  res.T = std::norm(transmitted / e0);
  res.diagnostics.probe_residual = std::abs(prof.sigma_minus.back());
  res.diagnostics.condition = condition;

  prof.phase_sigma_plus = unwrap_phase(raw_phases(prof.sigma_plus), 0);
  // Omega_sigma^- vanishes at the exit: use the limit y -> L^-, where
  // Omega_sigma^-(y) ~ (y - L) dOmega_sigma^-/dy(L).
  auto wrapped_minus = raw_phases(prof.sigma_minus);
  {
    const auto gc = grating_coefficients(params, load(end, 0), load(end, 2));
    const auto [dsp, dsm] = probe_rhs(params, gc, prof.sigma_plus.back(), Complex{});
    (void)dsp;
    wrapped_minus.back() = std::abs(dsm) > 0.0 ? envelope_phase(-dsm) : 0.0;
    // reference interval [-pi/2, 3pi/2)
    wrapped_minus.back() = wrap_to(wrapped_minus.back(), -0.5 * kPi);
  }
  prof.phase_sigma_minus = unwrap_phase(wrapped_minus, prof.size() - 1);
  return res;
}

ScatteringResult solve_scattering(const PhysicalParams& params, const BoundaryConditions& bc,
                                  const SolverOptions& opts) {
  const auto control = solve_control_bvp(params, bc, opts);
  auto res = solve_probe_bvp(params, control.profile, bc, opts);
  res.diagnostics.newton_iterations = control.newton_iterations;
  res.diagnostics.control_residual = control.residual;
  return res;
}

ForwardOnlyResult solve_forward_only(const PhysicalParams& params, double omega_pi_0,
                                     double omega_sigma_0, const SolverOptions& opts) {
  params.validate();
  opts.validate();
  if (omega_pi_0 == 0.0) throw DegenerateField("solve_forward_only: Omega_pi(0) = 0");
  const double od_rate = params.alpha0_L * params.gamma_d;
  const Complex e_phi = std::exp(kI * params.phi);

  auto system = [&](const ForwardState& s, ForwardState& ds, double) {
    const Envelope pi = load(s, 0);
    const Envelope sigma = load(s, 2);
    const double pi_sq = std::norm(pi);
    const auto chi = susceptibilities(params, saturation(params, pi_sq).S);
    store(ds, 0, kI * od_rate * chi.chi_sat * pi);
    // e^{2i dphi} = (Omega_pi/|Omega_pi|)^2 (Omega_sigma^*/|Omega_sigma|)^2
    const double sigma_sq = std::norm(sigma);
    const Complex dephase =
        sigma_sq > 0.0 ? (pi * pi / pi_sq) * (std::conj(sigma) * std::conj(sigma) / sigma_sq)
                       : Complex{1.0, 0.0};
    const Complex probe = sigma / e_phi;
    store(ds, 2, kI * od_rate * chi.chi_eff * dephase * probe * e_phi);
  };

  ForwardState s{};
  store(s, 0, Complex{omega_pi_0, 0.0});
  store(s, 2, Complex{omega_sigma_0, 0.0});
  ForwardOnlyResult out;
  auto& prof = out.profile;
  const auto grid = uniform_grid(opts.grid_points);
  integrate_on_grid(system, s, grid, opts, [&](const ForwardState& st, double y) {
    prof.y.push_back(y);
    prof.pi_plus.push_back(load(st, 0));
    prof.sigma_plus.push_back(load(st, 2));
  });
  prof.pi_minus.assign(prof.size(), Complex{});
  prof.sigma_minus.assign(prof.size(), Complex{});
  prof.phase_pi_plus = unwrap_phase(raw_phases(prof.pi_plus), 0);
  prof.phase_pi_minus.assign(prof.size(), 0.0);
  prof.phase_sigma_plus = unwrap_phase(raw_phases(prof.sigma_plus), 0);
  prof.phase_sigma_minus.assign(prof.size(), 0.0);
  out.dephasing.resize(prof.size());
  for (std::size_t i = 0; i < prof.size(); ++i) {
    out.dephasing[i] = params.phi + prof.phase_sigma_plus[i] - prof.phase_pi_plus[i];
  }
  return out;
}

double analytic_dephasing(const PhysicalParams& params, double y) {
  const double phi = params.phi;
  const double branch = std::floor(phi / kPi);
  const double reduced = phi - branch * kPi;  // in [0, pi)
  if (reduced == 0.0) return phi;
  const double phi_L = std::atan2(params.gamma_d, params.delta0);
  const double sin_L = std::sin(phi_L);
  const double decay = std::exp(-2.0 * params.alpha0_L * y * sin_L * sin_L);
  // cot psi relaxes linearly from cot phi towards -cot phi_L; psi stays in the
  // same pi-interval as phi because cot psi stays finite.
  const double cot_L = std::cos(phi_L) / sin_L;
  const double cot_psi = -cot_L + (1.0 / std::tan(reduced) + cot_L) * decay;
  return branch * kPi + std::atan2(1.0, cot_psi);
}

double dephasing_rhs(const PhysicalParams& params, Complex chi_sat, double psi) {
  const double s = std::sin(psi);
  return 2.0 * params.alpha0_L * params.gamma_d * s *
         (chi_sat.real() * s + chi_sat.imag() * std::cos(psi));
}

}  // namespace dtls
