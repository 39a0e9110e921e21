#pragma once

// Harmonic content of the saturation grating written by a standing-wave
// control Omega_pi(y) = Omega+ (1 + r e^{-2iky}), and the coupling
// coefficients of the slowly varying forward/backward envelopes.

#include "dtls/model.hpp"

namespace dtls {

/// S(y) = b / (1 + a cos(2ky + phi_r)) and
/// 1/|Omega_pi(y)|^2 = b_p / (1 + a_p cos(2ky + phi_r)).
struct ModulationParams {
  double a = 0.0;
  double b = 1.0;
  double a_p = 0.0;
  double b_p = 1.0;
  double phi_r = 0.0;  ///< r = |r| e^{-i phi_r}; 0 when r = 0
  double r_abs = 0.0;
};

/// Throws NodeError for |r| = 1, DegenerateField for Omega+ = 0.
ModulationParams modulation_params(double F0, Envelope omega_pi_plus, Complex r);

/// Geometric decay ratio of the Fourier coefficients of b / (1 + a cos x):
/// (sqrt(1 - a^2) - 1) / a, finite at a = 0.
double expansion_ratio(double a);

/// Closed-form Fourier coefficients c_n = c0 eta^n e^{i n phi_r} (n >= 0),
/// c_{-n} = conj(c_n). The primed set expands 1/|Omega_pi|^2.
struct HarmonicCoefficients {
  double eta = 0.0;
  double eta_p = 0.0;
  double c0 = 1.0;
  double c0_p = 1.0;
  double phi_r = 0.0;

  Complex c(int n) const;
  Complex c_p(int n) const;
};

HarmonicCoefficients harmonic_coefficients(const ModulationParams& mp);

struct GratingCoefficients {
  double eta = 0.0;
  double eta_p = 0.0;
  double c0 = 1.0;
  double c0_p = 1.0;
  Complex beta;
  double gamma_c = 0.0;  ///< eta + eta_p
  double delta_c = 0.0;  ///< eta^2 + eta_p^2 + eta eta_p - (eta eta_p)^2
  Complex c_plus;
  Complex c_minus;
  Complex c_plus_minus;
  Complex cbar_0;  ///< control self-coupling
  Complex cbar_1;  ///< backward -> forward control coupling
  Complex cbar_m1; ///< forward -> backward control coupling
};

/// Probe and control coupling coefficients at one point of the sample.
/// r = Omega- / Omega+; the r -> 0 limits are evaluated without division by |r|.
GratingCoefficients coupling_coefficients(const PhysicalParams& params,
                                          const ModulationParams& mp,
                                          const HarmonicCoefficients& hc,
                                          Envelope omega_pi_plus);

/// Convenience: modulation, harmonics and couplings from the local control envelopes.
GratingCoefficients grating_coefficients(const PhysicalParams& params,
                                         Envelope omega_pi_plus,
                                         Envelope omega_pi_minus);

struct LocalFields {
  Envelope pi_plus;
  Envelope pi_minus;
  Envelope sigma_plus;
  Envelope sigma_minus;
};

/// Phase-matched harmonics rho^(0) and rho^(-1) of the pi and sigma coherences.
struct CoherenceHarmonics {
  Complex rho_pi_0;
  Complex rho_pi_m1;
  Complex rho_sigma_0;
  Complex rho_sigma_m1;
};

CoherenceHarmonics coherence_harmonics(const PhysicalParams& params,
                                       const GratingCoefficients& gc,
                                       const LocalFields& fields);

}  // namespace dtls
