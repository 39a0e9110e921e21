#include "dtls/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dtls/errors.hpp"

namespace dtls {

namespace {
constexpr Complex kI{0.0, 1.0};
}

double envelope_phase(Envelope omega) { return -std::arg(omega); }

Envelope envelope_from_phase(double magnitude, double phase) {
  return std::polar(magnitude, -phase);
}

PhysicalParams PhysicalParams::radiative(double delta0, double alpha0_L, double phi) {
  PhysicalParams p;
  p.gamma_d = 1.0;
  p.gamma = 2.0 * p.gamma_d;
  p.gamma_ze = p.gamma;
  p.delta0 = delta0;
  p.alpha0_L = alpha0_L;
  p.phi = phi;
  return p;
}

void PhysicalParams::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
  if (!(gamma > 0.0) || !std::isfinite(gamma)) fail("gamma must be positive");
  if (!(gamma_d > 0.0) || !std::isfinite(gamma_d)) fail("gamma_d must be positive");
  if (!(gamma_ze >= 0.0)) fail("gamma_ze must be non-negative");
  if (!std::isfinite(delta0)) fail("delta0 must be finite");
  if (!(alpha0_L >= 0.0) || !std::isfinite(alpha0_L)) fail("alpha0_L must be >= 0");
  if (!std::isfinite(phi)) fail("phi must be finite");
}

Saturation saturation(const PhysicalParams& params, double omega_pi_sq) {
  if (omega_pi_sq < 0.0) throw std::invalid_argument("omega_pi_sq must be >= 0");
  const double gd = params.gamma_d;
  const double F0 = 4.0 * gd / params.gamma / (gd * gd + params.delta0 * params.delta0);
  return {F0, 1.0 / (1.0 + F0 * omega_pi_sq)};
}

Susceptibilities susceptibilities(const PhysicalParams& params, double S) {
  if (!(S > 0.0 && S <= 1.0)) throw std::invalid_argument("S must lie in (0, 1]");
  Susceptibilities out;
  out.chi_lin = 1.0 / Complex(params.delta0, -params.gamma_d);
  out.chi_sat = out.chi_lin * S;
  out.chi_eff = out.chi_sat * std::exp(2.0 * kI * params.phi);
  out.phi_L = std::atan2(params.gamma_d, params.delta0);
  out.S = S;
  out.F0 = saturation(params, 0.0).F0;
  return out;
}

CoherencePair steady_coherences_full(const PhysicalParams& params, Envelope omega_pi,
                                     Envelope omega_sigma) {
  const double gd = params.gamma_d;
  const double d0 = params.delta0;
  const Complex e_phi = std::exp(kI * params.phi);
  const Complex mixed = omega_pi * omega_pi + omega_sigma * omega_sigma / (e_phi * e_phi);
  const double den = 4.0 * gd / params.gamma * std::norm(mixed) +
                     (std::norm(omega_pi) + std::norm(omega_sigma)) * (gd * gd + d0 * d0);
  if (den == 0.0) throw DegenerateField("steady_coherences_full: both fields vanish");
  const Complex common = mixed * Complex(d0, gd) / den;
  return {common * std::conj(omega_pi), common * std::conj(omega_sigma) * e_phi};
}

CoherencePair steady_coherences_perturbative(const PhysicalParams& params,
                                             Envelope omega_pi, Envelope omega_sigma) {
  const double intensity = std::norm(omega_pi);
  if (intensity == 0.0) {
    throw DegenerateField("steady_coherences_perturbative: control field vanishes");
  }
  const auto chi = susceptibilities(params, saturation(params, intensity).S);
  const Complex unit_sq = omega_pi * omega_pi / intensity;
  return {chi.chi_sat * omega_pi,
          chi.chi_eff * unit_sq * std::conj(omega_sigma) * std::exp(-kI * params.phi)};
}

}  // namespace dtls
