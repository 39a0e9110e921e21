#pragma once

// First-order (small optical depth) solutions of the probe equations with
// couplings frozen along the sample.

#include "dtls/grating.hpp"
#include "dtls/propagation.hpp"

namespace dtls {

struct SmallOdEnvelopes {
  Complex sigma_plus;   ///< normalised to Omega_sigma^+(0) = 1
  Complex sigma_minus;
  double validity;      ///< max_j |alpha0 L c_j|, j in {+, -, +-}
};

SmallOdEnvelopes small_od_envelopes(double alpha0_L, const GratingCoefficients& gc, double phi,
                                    double y);

struct ApproxRT {
  double T;
  double R;
};

/// T ~ 1 - 2 alpha0L |c+| sin(2 phi + phi_L), R ~ |alpha0L c+-|^2 T.
ApproxRT approx_RT(double alpha0_L, double c_plus_abs, double c_plus_minus_abs, double phi_L,
                   double phi);

struct ApproxPhases {
  double sigma_plus;
  double sigma_minus;
};

ApproxPhases approx_phases(double alpha0_L, double c_plus_abs, double phi_L, double phi,
                           double y);

/// Couplings at y = 0 of a converged control profile.
GratingCoefficients entrance_coefficients(const PhysicalParams& params,
                                          const FieldProfile& control);

/// Couplings of the undepleted control, Omega_pi^+ = Omega_pi^+(0) and
/// Omega_pi^- = Omega_pi^-(L) everywhere.
GratingCoefficients parametric_coefficients(const PhysicalParams& params,
                                            const BoundaryConditions& bc);

/// Analytic R and T for the given couplings at the params' phase.
ApproxRT approx_RT(const PhysicalParams& params, const GratingCoefficients& gc);

double max_coupling_strength(double alpha0_L, const GratingCoefficients& gc);

}  // namespace dtls
