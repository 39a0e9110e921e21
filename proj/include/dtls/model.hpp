#pragma once

// Steady-state response of a duplicated two-level (F=1/2 -> F=1/2) medium
// to a strong pi-polarised control and a weak sigma-polarised probe.
//
// Units: frequencies in units of the optical coherence decay rate Gamma_d,
// lengths in units of the sample length L. Susceptibilities are stored in
// units where 2 alpha_0 Gamma_d / k = 1, so that the propagation equations
// only ever see the optical depth alpha_0 L.

#include <complex>

namespace dtls {

using Complex = std::complex<double>;

/// Rabi-frequency envelope. Phases follow the convention Omega = |Omega| e^{-i phase}.
using Envelope = Complex;

inline constexpr double kPi = 3.14159265358979323846;

/// Phase of an envelope in the Omega = |Omega| e^{-i phase} convention, in (-pi, pi].
double envelope_phase(Envelope omega);

/// Builds |Omega| e^{-i phase}.
Envelope envelope_from_phase(double magnitude, double phase);

struct PhysicalParams {
  double gamma = 2.0;     ///< excited population decay Gamma
  double gamma_d = 1.0;   ///< optical coherence decay Gamma_d (frequency unit)
  double gamma_ze = 2.0;  ///< excited Zeeman coherence decay; unused in steady state
  double delta0 = 0.0;    ///< detuning omega_0 - omega
  double alpha0_L = 0.0;  ///< optical depth
  double phi = 0.0;       ///< probe/control relative phase (rad)

  /// Radiative limit: Gamma = 2 Gamma_d, Gamma_ze = Gamma.
  static PhysicalParams radiative(double delta0, double alpha0_L, double phi = 0.0);

  /// Throws std::invalid_argument on non-physical values.
  void validate() const;
};

struct Saturation {
  double F0;  ///< saturation scale (units Gamma_d^-2)
  double S;   ///< saturation parameter, in (0, 1]
};

/// F0 = 4 Gamma_d/Gamma / (Gamma_d^2 + Delta0^2), S = 1 / (1 + F0 |Omega_pi|^2).
Saturation saturation(const PhysicalParams& params, double omega_pi_sq);

struct Susceptibilities {
  Complex chi_lin;
  Complex chi_sat;
  Complex chi_eff;
  double phi_L;  ///< arg(chi_lin), tan(phi_L) = Gamma_d / Delta0
  double S;
  double F0;
};

/// Linear, saturated and effective (phase-controlled) susceptibilities for a
/// given saturation parameter. chi_lin = 1 / (-i Gamma_d + Delta0).
Susceptibilities susceptibilities(const PhysicalParams& params, double S);

/// Stationary optical coherences radiating the pi and sigma fields.
struct CoherencePair {
  Complex rho_pi;
  Complex rho_sigma;
};

/// Exact stationary coherences for arbitrary (Omega_pi, Omega_sigma).
/// Throws DegenerateField when both fields vanish.
CoherencePair steady_coherences_full(const PhysicalParams& params, Envelope omega_pi,
                                     Envelope omega_sigma);

/// Leading order in |Omega_sigma| / |Omega_pi|. Throws DegenerateField when
/// the control vanishes.
CoherencePair steady_coherences_perturbative(const PhysicalParams& params,
                                             Envelope omega_pi, Envelope omega_sigma);

}  // namespace dtls
