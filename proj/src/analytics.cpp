#include "dtls/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dtls {

namespace {
constexpr Complex kI{0.0, 1.0};
}

double max_coupling_strength(double alpha0_L, const GratingCoefficients& gc) {
  return alpha0_L *
         std::max({std::abs(gc.c_plus), std::abs(gc.c_minus), std::abs(gc.c_plus_minus)});
}

SmallOdEnvelopes small_od_envelopes(double alpha0_L, const GratingCoefficients& gc, double phi,
                                    double y) {
  const Complex drive = std::exp(2.0 * kI * phi);
  const double from_exit = alpha0_L * (y - 1.0);
  SmallOdEnvelopes out;
  out.sigma_plus = 1.0 - alpha0_L * y * drive * gc.c_plus;
  out.sigma_minus = from_exit * drive *
                    (gc.c_plus_minus - from_exit / drive * gc.c_plus_minus * std::conj(gc.c_plus));
  out.validity = max_coupling_strength(alpha0_L, gc);
  return out;
}

ApproxRT approx_RT(double alpha0_L, double c_plus_abs, double c_plus_minus_abs, double phi_L,
                   double phi) {
  const double T = 1.0 - 2.0 * alpha0_L * c_plus_abs * std::sin(2.0 * phi + phi_L);
  const double g = alpha0_L * c_plus_minus_abs;
  return {T, g * g * T};
}

ApproxPhases approx_phases(double alpha0_L, double c_plus_abs, double phi_L, double phi,
                           double y) {
  const double swing = alpha0_L * c_plus_abs * std::cos(2.0 * phi + phi_L);
  return {-y * swing, kPi - 2.0 * phi + (y - 1.0) * swing};
}

GratingCoefficients entrance_coefficients(const PhysicalParams& params,
                                          const FieldProfile& control) {
  if (control.size() == 0) throw std::invalid_argument("entrance_coefficients: empty profile");
  return grating_coefficients(params, control.pi_plus.front(), control.pi_minus.front());
}

GratingCoefficients parametric_coefficients(const PhysicalParams& params,
                                            const BoundaryConditions& bc) {
  return grating_coefficients(params, Complex{bc.omega_pi_plus_in, 0.0},
                              Complex{bc.omega_pi_minus_in, 0.0});
}

ApproxRT approx_RT(const PhysicalParams& params, const GratingCoefficients& gc) {
  const double phi_L = std::atan2(params.gamma_d, params.delta0);
  return approx_RT(params.alpha0_L, std::abs(gc.c_plus), std::abs(gc.c_plus_minus), phi_L,
                   params.phi);
}

}  // namespace dtls
