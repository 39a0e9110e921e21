#include "dtls/grating.hpp"

#include <cmath>

#include "dtls/errors.hpp"

namespace dtls {

namespace {

constexpr Complex kI{0.0, 1.0};

// |r| closer than this to 1 is treated as a node of the standing wave.
constexpr double kNodeTolerance = 1e-12;

Complex harmonic(double c0, double eta, double phi_r, int n) {
  const int m = n < 0 ? -n : n;
  const Complex cm = c0 * std::pow(eta, m) * std::exp(kI * (m * phi_r));
  return n < 0 ? std::conj(cm) : cm;
}

}  // namespace

ModulationParams modulation_params(double F0, Envelope omega_pi_plus, Complex r) {
  const double intensity = std::norm(omega_pi_plus);
  if (intensity == 0.0) throw DegenerateField("modulation_params: forward control vanishes");
  const double r_abs = std::abs(r);
  if (std::abs(r_abs - 1.0) <= kNodeTolerance) {
    throw NodeError("modulation_params: |r| = 1, the control field has nodes");
  }
  ModulationParams mp;
  const double spread = 1.0 + r_abs * r_abs;
  const double den = 1.0 + F0 * intensity * spread;
  mp.a = 2.0 * F0 * intensity * r_abs / den;
  mp.b = 1.0 / den;
  mp.a_p = 2.0 * r_abs / spread;
  mp.b_p = 1.0 / (intensity * spread);
  mp.phi_r = r_abs > 0.0 ? -std::arg(r) : 0.0;
  mp.r_abs = r_abs;
  return mp;
}

double expansion_ratio(double a) { return -a / (1.0 + std::sqrt((1.0 - a) * (1.0 + a))); }

Complex HarmonicCoefficients::c(int n) const { return harmonic(c0, eta, phi_r, n); }

Complex HarmonicCoefficients::c_p(int n) const { return harmonic(c0_p, eta_p, phi_r, n); }

HarmonicCoefficients harmonic_coefficients(const ModulationParams& mp) {
  HarmonicCoefficients hc;
  hc.eta = expansion_ratio(mp.a);
  hc.eta_p = expansion_ratio(mp.a_p);
  hc.c0 = mp.b / std::sqrt((1.0 - mp.a) * (1.0 + mp.a));
  hc.c0_p = mp.b_p / std::sqrt((1.0 - mp.a_p) * (1.0 + mp.a_p));
  hc.phi_r = mp.phi_r;
  return hc;
}

GratingCoefficients coupling_coefficients(const PhysicalParams& params,
                                          const ModulationParams& mp,
                                          const HarmonicCoefficients& hc,
                                          Envelope omega_pi_plus) {
  const double r_abs = mp.r_abs;
  const double node_gap = std::abs(1.0 - r_abs * r_abs);
  if (std::abs(r_abs - 1.0) <= kNodeTolerance) {
    throw NodeError("coupling_coefficients: |r| = 1, the control field has nodes");
  }
  const double intensity = std::norm(omega_pi_plus);
  if (intensity == 0.0) throw DegenerateField("coupling_coefficients: forward control vanishes");

  const Complex lorentz = params.gamma_d / Complex(params.gamma_d, params.delta0);
  // e^{-2i phi_pi^+} with Omega+ = |Omega+| e^{-i phi_pi^+}
  const Complex control_phase_sq = omega_pi_plus * omega_pi_plus / intensity;
  const Complex r_unit = std::exp(-kI * mp.phi_r);

  GratingCoefficients gc;
  gc.eta = hc.eta;
  gc.eta_p = hc.eta_p;
  gc.c0 = hc.c0;
  gc.c0_p = hc.c0_p;
  const double ee = hc.eta * hc.eta_p;
  gc.beta = hc.c0 * control_phase_sq / ((1.0 - ee) * node_gap) * lorentz;
  gc.gamma_c = hc.eta + hc.eta_p;
  gc.delta_c = hc.eta * hc.eta + hc.eta_p * hc.eta_p + ee - ee * ee;

  const double g = gc.gamma_c;
  const double d = gc.delta_c;
  gc.c_plus = gc.beta * (1.0 + 2.0 * g * r_abs + d * r_abs * r_abs);
  // beta r [2 + g/|r| + g|r|] and beta r^2 [1 + 2g/|r| + d/|r|^2] with r = |r| r_unit
  gc.c_plus_minus = gc.beta * r_unit * (2.0 * r_abs + g + g * r_abs * r_abs);
  gc.c_minus = gc.beta * r_unit * r_unit * (r_abs * r_abs + 2.0 * g * r_abs + d);

  gc.cbar_0 = lorentz * hc.c(0);
  gc.cbar_1 = lorentz * hc.c(1);
  gc.cbar_m1 = lorentz * hc.c(-1);
  return gc;
}

GratingCoefficients grating_coefficients(const PhysicalParams& params,
                                         Envelope omega_pi_plus,
                                         Envelope omega_pi_minus) {
  if (std::norm(omega_pi_plus) == 0.0) {
    throw DegenerateField("grating_coefficients: forward control vanishes");
  }
  const Complex r = omega_pi_minus / omega_pi_plus;
  const double F0 = saturation(params, 0.0).F0;
  const auto mp = modulation_params(F0, omega_pi_plus, r);
  return coupling_coefficients(params, mp, harmonic_coefficients(mp), omega_pi_plus);
}

CoherenceHarmonics coherence_harmonics(const PhysicalParams& params,
                                       const GratingCoefficients& gc,
                                       const LocalFields& f) {
  const Complex pre = kI / params.gamma_d;
  const Complex pre_sigma = pre * std::exp(kI * params.phi);
  const Complex sp = std::conj(f.sigma_plus);
  const Complex sm = std::conj(f.sigma_minus);
  return {pre * (gc.cbar_0 * f.pi_plus + gc.cbar_1 * f.pi_minus),
          pre * (gc.cbar_m1 * f.pi_plus + gc.cbar_0 * f.pi_minus),
          pre_sigma * (gc.c_plus * sp + gc.c_plus_minus * sm),
          pre_sigma * (gc.c_plus_minus * sp + gc.c_minus * sm)};
}

}  // namespace dtls
