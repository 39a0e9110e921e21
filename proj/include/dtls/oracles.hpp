#pragma once

// Independent brute-force checks of the closed forms used by the solver:
// a full 4-level master-equation steady state, direct quadrature of Fourier
// coefficients, and direct integration of the single-field dephasing equation.

#include <functional>

#include <Eigen/Dense>

#include "dtls/model.hpp"

namespace dtls::oracles {

/// Density matrix over (a, b, c, d) = (ground -1/2, ground +1/2, excited -1/2, excited +1/2).
struct DensityMatrix4 {
  Eigen::Matrix4cd rho;

  Complex operator()(int i, int j) const { return rho(i, j); }
  /// Coherence radiating the pi field: rho_ca - rho_db.
  Complex rho_pi() const;
  /// Coherence radiating the sigma field: rho_cb + rho_da.
  Complex rho_sigma() const;
  /// Excited-state Zeeman coherence rho_cd.
  Complex rho_excited_zeeman() const { return rho(2, 3); }
  double trace_error() const;
  double hermiticity_error() const;
  double min_eigenvalue() const;
};

/// Interaction-picture Hamiltonian in units of hbar.
Eigen::Matrix4cd hamiltonian(const PhysicalParams& params, Envelope omega_pi,
                             Envelope omega_sigma);

/// Steady state of d rho/dt = -i [H, rho] + relaxation. Excited populations
/// decay at Gamma into each ground state at Gamma/2 per channel, optical
/// coherences at Gamma_d, the excited Zeeman coherence at Gamma_ze. Throws
/// SingularLiouvillian unless the stationary subspace is one-dimensional.
DensityMatrix4 bloch_steady_state(const PhysicalParams& params, Envelope omega_pi,
                                  Envelope omega_sigma);

/// (1/2pi) int_0^{2pi} b / (1 + a cos(theta + phi_r)) e^{-i n theta} d theta by
/// adaptive Gauss-Kronrod quadrature.
Complex fourier_quadrature(double a, double b, double phi_r, int n);

/// (1/2pi) int_0^{2pi} f(theta) e^{-i n theta} d theta for a smooth periodic f.
Complex periodic_harmonic(const std::function<Complex(double)>& f, int n);

/// Integrates the dephasing equation with an unsaturated susceptibility from
/// psi(0) = phi and returns max_y |psi_ode(y) - psi_closed_form(y)| on `samples` points.
double ode_crosscheck_dephasing(const PhysicalParams& params, int samples = 201);

}  // namespace dtls::oracles
