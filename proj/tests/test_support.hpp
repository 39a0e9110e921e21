#pragma once

#include <complex>
#include <random>

#include "dtls/model.hpp"

namespace dtls::testing {

/// Deterministic generator for property sweeps.
class ParamSampler {
 public:
  explicit ParamSampler(unsigned seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<>(lo, hi)(rng_); }

  Complex envelope(double max_abs) {
    return std::polar(uniform(0.0, max_abs), uniform(0.0, 2.0 * kPi));
  }

  PhysicalParams params() {
    auto p = PhysicalParams::radiative(uniform(-3.0, 3.0), uniform(0.0, 1.0), uniform(0.0, 2.0 * kPi));
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

inline double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace dtls::testing
