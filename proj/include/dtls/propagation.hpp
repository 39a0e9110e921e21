#pragma once

// Coupled-wave propagation of the standing-wave control and the probe
// through a sample of unit length, in the slowly varying envelope limit.
//
// The control obeys a nonlinear two-point boundary-value problem (forward
// wave fixed at y = 0, backward wave fixed at y = 1) that is solved by
// shooting on the unknown backward amplitude at the entrance. The probe
// equations are linear over the reals (the envelopes enter conjugated), so
// the probe problem is solved exactly by superposing three real-linear
// solutions.

#include <array>
#include <utility>
#include <vector>

#include "dtls/grating.hpp"
#include "dtls/model.hpp"

namespace dtls {

struct BoundaryConditions {
  double omega_pi_plus_in = 0.4;     ///< Omega_pi^+(0), real
  double omega_pi_minus_in = 0.16;   ///< Omega_pi^-(L), real
  double omega_sigma_plus_in = 1.0;  ///< Omega_sigma^+(0), real; Omega_sigma^-(L) = 0
};

struct SolverOptions {
  int grid_points = 2001;
  double ode_rel_tol = 1e-10;
  double ode_abs_tol = 1e-12;
  double shoot_tol = 1e-10;  ///< relative to |Omega_pi^+(0)|
  int max_newton_iter = 50;

  void validate() const;
};

/// Sampled envelopes on a uniform grid over [0, 1]. Phases use the
/// Omega = |Omega| e^{-i phase} convention and are unwrapped along y.
struct FieldProfile {
  std::vector<double> y;
  std::vector<Envelope> pi_plus;
  std::vector<Envelope> pi_minus;
  std::vector<Envelope> sigma_plus;
  std::vector<Envelope> sigma_minus;
  std::vector<double> phase_pi_plus;
  std::vector<double> phase_pi_minus;
  std::vector<double> phase_sigma_plus;
  std::vector<double> phase_sigma_minus;

  std::size_t size() const { return y.size(); }
};

struct ControlSolution {
  FieldProfile profile;  ///< sigma arrays empty
  int newton_iterations = 0;
  double residual = 0.0;  ///< |Omega_pi^-(L) - target|
};

struct ScatteringDiagnostics {
  int newton_iterations = 0;
  double control_residual = 0.0;
  double probe_residual = 0.0;  ///< |Omega_sigma^-(L)|
  double condition = 0.0;       ///< condition number of the 2x2 superposition system
};

struct ScatteringResult {
  double R = 0.0;
  double T = 0.0;
  FieldProfile profile;
  ScatteringDiagnostics diagnostics;
};

/// d/d(y/L) of (Omega_pi^+, Omega_pi^-).
std::pair<Complex, Complex> control_rhs(const PhysicalParams& params, Envelope pi_plus,
                                        Envelope pi_minus);

/// d/d(y/L) of (Omega_sigma^+, Omega_sigma^-) for given local couplings.
std::pair<Complex, Complex> probe_rhs(const PhysicalParams& params,
                                      const GratingCoefficients& gc, Envelope sigma_plus,
                                      Envelope sigma_minus);

/// Shooting solve of the control boundary-value problem.
/// Throws NoConvergence, NodeError (with the offending y) or DegenerateField.
ControlSolution solve_control_bvp(const PhysicalParams& params, const BoundaryConditions& bc,
                                  const SolverOptions& opts = {});

/// Linear probe solve on a converged control profile (only its y = 0
/// samples and grid are used; the control is re-integrated alongside the probe).
/// Throws SingularSystem when the superposition system is degenerate.
ScatteringResult solve_probe_bvp(const PhysicalParams& params, const FieldProfile& control,
                                 const BoundaryConditions& bc, const SolverOptions& opts = {});

/// Control solve followed by the probe solve.
ScatteringResult solve_scattering(const PhysicalParams& params, const BoundaryConditions& bc,
                                  const SolverOptions& opts = {});

/// Co-propagating control and probe, no backward waves, integrated in the
/// susceptibility form. `dephasing` is phi + phi_sigma^+ - phi_pi^+, i.e. the
/// phase lag of the probe field Omega_sigma e^{-i phi} behind the control.
struct ForwardOnlyResult {
  FieldProfile profile;
  std::vector<double> dephasing;
};

ForwardOnlyResult solve_forward_only(const PhysicalParams& params, double omega_pi_0,
                                     double omega_sigma_0, const SolverOptions& opts = {});

/// Closed-form probe/control dephasing for an unsaturated, undepleted control
/// (chi_sat = chi_lin): tan psi = tan phi_L / ((tan phi_L / tan phi + 1) e^{-2 alpha0 y sin^2 phi_L} - 1),
/// with the branch continuous from psi(0) = phi. phi = 0 mod pi is a fixed point.
double analytic_dephasing(const PhysicalParams& params, double y);

/// Right-hand side of the dephasing equation for a given saturated susceptibility,
/// in units of y/L: 2 alpha0L Gamma_d sin(psi) [chi' sin(psi) + chi'' cos(psi)].
double dephasing_rhs(const PhysicalParams& params, Complex chi_sat, double psi);

/// Continuous phase from wrapped samples; the sample at `anchor` keeps its value.
std::vector<double> unwrap_phase(const std::vector<double>& wrapped, std::size_t anchor);

}  // namespace dtls
