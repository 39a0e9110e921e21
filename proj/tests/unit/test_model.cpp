#include <cmath>

#include "doctest.h"
#include "dtls/errors.hpp"
#include "dtls/model.hpp"
#include "dtls/oracles.hpp"
#include "test_support.hpp"

using namespace dtls;
using dtls::testing::ParamSampler;
using dtls::testing::rel_err;

namespace {
constexpr Complex kI{0.0, 1.0};
}

TEST_CASE("envelope phase follows the e^{-i phase} convention") {
  const Envelope w = envelope_from_phase(0.7, 0.3);
  CHECK(std::abs(w - 0.7 * std::exp(-kI * 0.3)) < 1e-16);
  CHECK(envelope_phase(w) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(envelope_phase(Complex{0.0, -1.0}) == doctest::Approx(kPi / 2));
}

TEST_CASE("radiative-limit parameters") {
  const auto p = PhysicalParams::radiative(0.5, 0.3, 1.0);
  CHECK(p.gamma == 2.0 * p.gamma_d);
  CHECK(p.gamma_ze == p.gamma);
  CHECK_NOTHROW(p.validate());
  auto bad = p;
  bad.alpha0_L = -0.1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = p;
  bad.gamma = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("saturation") {
  auto p = PhysicalParams::radiative(0.0, 0.0);
  auto s = saturation(p, 0.0);
  CHECK(s.F0 == 2.0);
  CHECK(s.S == 1.0);

  s = saturation(p, 0.16);
  CHECK(s.S == doctest::Approx(1.0 / 1.32).epsilon(1e-15));

  p.delta0 = 1.0;
  s = saturation(p, 0.16);
  CHECK(s.F0 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.S == doctest::Approx(1.0 / 1.16).epsilon(1e-15));

  CHECK_THROWS_AS(saturation(p, -1e-3), std::invalid_argument);
}

TEST_CASE("susceptibilities") {
  auto p = PhysicalParams::radiative(0.0, 0.0);
  auto chi = susceptibilities(p, 1.0);
  CHECK(std::abs(chi.chi_lin - kI / p.gamma_d) < 1e-15);
  CHECK(chi.phi_L == doctest::Approx(kPi / 2));

  p.delta0 = 2.0;
  chi = susceptibilities(p, 1.0);
  CHECK(chi.phi_L == doctest::Approx(std::atan(0.5)));
  CHECK(chi.phi_L / kPi == doctest::Approx(0.1476).epsilon(1e-3));
  CHECK(std::arg(chi.chi_lin) == doctest::Approx(chi.phi_L));

  p.delta0 = 0.0;
  p.phi = kPi / 2;
  chi = susceptibilities(p, 1.0);
  CHECK(std::abs(chi.chi_eff + chi.chi_lin) < 1e-15);

  CHECK_THROWS_AS(susceptibilities(p, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(susceptibilities(p, 1.5), std::invalid_argument);
}

TEST_CASE("susceptibility invariants over a parameter sweep") {
  ParamSampler gen(11);
  for (int k = 0; k < 200; ++k) {
    auto p = gen.params();
    const double S = gen.uniform(1e-3, 1.0);
    const auto chi = susceptibilities(p, S);
    CHECK(chi.chi_lin.imag() > 0.0);
    CHECK(std::abs(chi.chi_sat - chi.chi_lin * S) < 1e-15);
    CHECK(std::tan(chi.phi_L) * p.delta0 == doctest::Approx(p.gamma_d).epsilon(1e-9));
    auto shifted = p;
    shifted.phi += kPi;
    CHECK(rel_err(susceptibilities(shifted, S).chi_eff, chi.chi_eff) < 1e-14);
  }
}

TEST_CASE("full stationary coherences: control only") {
  const auto p = PhysicalParams::radiative(0.0, 0.0, 1.234);
  const auto rho = steady_coherences_full(p, 0.4, 0.0);
  CHECK(std::abs(rho.rho_sigma) == 0.0);
  CHECK(std::abs(rho.rho_pi - kI * (0.4 / 1.32)) < 1e-15);

  const auto oracle = oracles::bloch_steady_state(p, 0.4, 0.0);
  CHECK(std::abs(oracle.rho_pi() - rho.rho_pi) < 1e-12);
}

TEST_CASE("full stationary coherences: zero field is an error") {
  const auto p = PhysicalParams::radiative(0.3, 0.0);
  CHECK_THROWS_AS(steady_coherences_full(p, 0.0, 0.0), DegenerateField);
}

TEST_CASE("full stationary coherences: ratio identity") {
  ParamSampler gen(5);
  for (int k = 0; k < 100; ++k) {
    const auto p = gen.params();
    const Complex op = gen.envelope(1.0), os = gen.envelope(1.0);
    const auto rho = steady_coherences_full(p, op, os);
    const Complex lhs = rho.rho_sigma * std::conj(op);
    const Complex rhs = rho.rho_pi * std::conj(os) * std::exp(kI * p.phi);
    CHECK(std::abs(lhs - rhs) <= 1e-14 * (std::abs(lhs) + 1e-300));
  }
}

TEST_CASE("perturbative coherences") {
  auto p = PhysicalParams::radiative(0.0, 0.0, kPi / 4);
  const double S = saturation(p, 0.16).S;
  CHECK(S == doctest::Approx(0.7576).epsilon(1e-4));

  const auto rho = steady_coherences_perturbative(p, 0.4, 0.004);
  CHECK(std::abs(rho.rho_pi - kI * S * 0.4) < 1e-15);
  // chi_eff e^{-i phi} = chi_sat e^{i phi}
  CHECK(std::abs(rho.rho_sigma - kI * S * std::exp(kI * kPi / 4.0) * 0.004) < 1e-15);
  const auto full = steady_coherences_full(p, 0.4, 0.004);
  CHECK(rel_err(rho.rho_sigma, full.rho_sigma) < 2e-4);

  CHECK_THROWS_AS(steady_coherences_perturbative(p, 0.0, 0.01), DegenerateField);
}

TEST_CASE("perturbative rho_sigma modulus does not depend on the control phase") {
  const auto p = PhysicalParams::radiative(0.7, 0.0, 0.4);
  const double ref = std::abs(steady_coherences_perturbative(p, 0.5, 0.01).rho_sigma);
  for (double theta : {0.3, 1.1, 2.9, -2.0}) {
    const auto rho = steady_coherences_perturbative(p, envelope_from_phase(0.5, theta), 0.01);
    CHECK(std::abs(rho.rho_sigma) == doctest::Approx(ref).epsilon(1e-14));
  }
}

TEST_CASE("full and perturbative forms agree to second order in the probe/control ratio") {
  const auto p = PhysicalParams::radiative(0.0, 0.0, 0.0);
  CHECK(rel_err(steady_coherences_perturbative(p, 0.4, 0.004).rho_sigma,
                steady_coherences_full(p, 0.4, 0.004).rho_sigma) <= 1e-4);

  // Constant C measured at eps = 0.1, then required at smaller eps.
  auto worst = [](double eps) {
    ParamSampler gen(99);
    double w = 0.0;
    for (int k = 0; k < 60; ++k) {
      const auto par = gen.params();
      const Complex op = std::polar(gen.uniform(0.05, 1.0), gen.uniform(0.0, 2 * kPi));
      const Complex os = std::polar(eps * std::abs(op), gen.uniform(0.0, 2 * kPi));
      const auto full = steady_coherences_full(par, op, os);
      const auto pert = steady_coherences_perturbative(par, op, os);
      w = std::max({w, rel_err(pert.rho_pi, full.rho_pi), rel_err(pert.rho_sigma, full.rho_sigma)});
    }
    return w / (eps * eps);
  };
  const double C = worst(1e-1);
  CHECK(C < 10.0);
  CHECK(worst(1e-2) <= 1.05 * C);
  CHECK(worst(1e-3) <= 1.05 * C);
}
