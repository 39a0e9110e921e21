#pragma once

// One-dimensional parameter scans of the scattering problem and location of
// the transmission/reflection extrema in the relative phase.

#include <string>
#include <vector>

#include "dtls/propagation.hpp"

namespace dtls {

enum class SweepVariable { phi, delta0, alpha0_L };

SweepVariable parse_sweep_variable(const std::string& name);
std::string to_string(SweepVariable v);

/// `steps` equally spaced values from `from` to `to` inclusive.
struct SweepSpec {
  SweepVariable variable = SweepVariable::phi;
  double from = 0.0;
  double to = 0.0;
  int steps = 2;

  double value(int i) const;
  void validate() const;
};

struct SweepRow {
  double value = 0.0;
  double R = 0.0;
  double T = 0.0;
  double T_analytic = 0.0;
  double R_analytic = 0.0;
  double max_coupling = 0.0;  ///< max_j |alpha0L c_j| at the entrance
  int newton_iterations = 0;
};

PhysicalParams with_value(PhysicalParams params, SweepVariable v, double value);

/// Scattering at every sweep point. Points run on `threads` workers
/// (0: hardware concurrency); rows come back in sweep order. The first
/// failure in sweep order is rethrown.
std::vector<SweepRow> run_sweep(const PhysicalParams& base, const BoundaryConditions& bc,
                                const SolverOptions& opts, const SweepSpec& spec,
                                unsigned threads = 0);

struct Extremum {
  double phi = 0.0;
  double value = 0.0;
};

struct PhaseExtrema {
  Extremum T_min, T_max, R_min, R_max;
};

/// Extrema of T(phi) and R(phi) over one period [0, pi): a coarse scan with
/// `coarse_steps` points followed by Brent refinement around each candidate.
PhaseExtrema phase_extrema(const PhysicalParams& base, const BoundaryConditions& bc,
                           const SolverOptions& opts, int coarse_steps = 64,
                           unsigned threads = 0);

}  // namespace dtls
