#include <cmath>

#include "doctest.h"
#include "dtls/errors.hpp"
#include "dtls/oracles.hpp"
#include "dtls/propagation.hpp"
#include "test_support.hpp"

using namespace dtls;
using dtls::testing::ParamSampler;

TEST_CASE("hamiltonian is hermitian") {
  ParamSampler gen(51);
  for (int k = 0; k < 20; ++k) {
    const auto H = oracles::hamiltonian(gen.params(), gen.envelope(1.0), gen.envelope(1.0));
    CHECK((H - H.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("master-equation steady state matches the closed-form coherences") {
  ParamSampler gen(52);
  for (int k = 0; k < 100; ++k) {
    const auto p = gen.params();
    const Complex op = gen.envelope(1.5);
    const Complex os = gen.envelope(1.5);
    if (std::abs(op) + std::abs(os) < 1e-3) continue;
    const auto rho = oracles::bloch_steady_state(p, op, os);
    const auto cf = steady_coherences_full(p, op, os);
    CHECK(std::abs(rho.rho_pi() - cf.rho_pi) < 1e-10);
    CHECK(std::abs(rho.rho_sigma() - cf.rho_sigma) < 1e-10);
    CHECK(rho.trace_error() < 1e-12);
    CHECK(rho.hermiticity_error() < 1e-12);
    CHECK(rho.min_eigenvalue() > -1e-12);
    CHECK(std::abs(rho.rho_excited_zeeman()) < 1e-12);
  }
}

TEST_CASE("master-equation steady state reference values") {
  const auto p = PhysicalParams::radiative(0.0, 0.0, kPi / 4);
  auto rho = oracles::bloch_steady_state(p, 0.4, 0.0);
  CHECK(std::abs(rho.rho_pi() - Complex(0.0, 0.30303030303030304)) < 1e-12);
  CHECK(std::abs(rho.rho_sigma()) < 1e-14);

  rho = oracles::bloch_steady_state(p, 0.4, 0.4);
  const Complex expected = rho.rho_pi() * std::polar(1.0, kPi / 4);
  CHECK(std::abs(rho.rho_sigma() - expected) < 1e-12);
}

TEST_CASE("dark fields leave the steady state undetermined") {
  const auto p = PhysicalParams::radiative(0.0, 0.0);
  CHECK_THROWS_AS(oracles::bloch_steady_state(p, 0.0, 0.0), SingularLiouvillian);
}

TEST_CASE("quadrature of the saturation grating") {
  CHECK(oracles::fourier_quadrature(0.0, 0.7, 0.0, 0).real() == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(std::abs(oracles::fourier_quadrature(0.0, 0.7, 0.0, 3)) < 1e-14);
  const Complex c1 = oracles::fourier_quadrature(0.16639870952906685, 0.7352884152691371, 0.0, 1);
  CHECK(c1.real() == doctest::Approx(-0.062475958089599895).epsilon(1e-12));
  CHECK(std::abs(c1.imag()) < 1e-15);
}

TEST_CASE("quadrature of a trigonometric polynomial") {
  const auto f = [](double t) { return Complex(2.0 + std::cos(t), 3.0 * std::sin(2 * t)); };
  CHECK(std::abs(oracles::periodic_harmonic(f, 0) - 2.0) < 1e-14);
  CHECK(std::abs(oracles::periodic_harmonic(f, 1) - 0.5) < 1e-14);
  CHECK(std::abs(oracles::periodic_harmonic(f, 2) - 1.5) < 1e-14);
  CHECK(std::abs(oracles::periodic_harmonic(f, -2) + 1.5) < 1e-14);
}

TEST_CASE("dephasing closed form matches direct integration") {
  ParamSampler gen(53);
  for (int k = 0; k < 30; ++k) {
    auto p = gen.params();
    p.alpha0_L = gen.uniform(0.0, 3.0);
    CHECK(oracles::ode_crosscheck_dephasing(p) < 1e-9);
  }
  auto p = PhysicalParams::radiative(0.0, 1.0, 0.0);
  CHECK(oracles::ode_crosscheck_dephasing(p) == 0.0);
}
