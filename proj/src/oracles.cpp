#include "dtls/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>

#include "dtls/errors.hpp"
#include "dtls/propagation.hpp"

namespace dtls::oracles {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr int A = 0, B = 1, C = 2, D = 3;

using Liouvillian = Eigen::Matrix<Complex, 16, 16>;

inline int vec_index(int i, int j) { return 4 * i + j; }

// Right-hand side of the master equation applied to rho.
Eigen::Matrix4cd master_rhs(const PhysicalParams& p, const Eigen::Matrix4cd& H,
                            const Eigen::Matrix4cd& rho) {
  Eigen::Matrix4cd d = -kI * (H * rho - rho * H);
  const Complex excited = rho(C, C) + rho(D, D);
  d(C, C) -= p.gamma * rho(C, C);
  d(D, D) -= p.gamma * rho(D, D);
  d(A, A) += 0.5 * p.gamma * excited;
  d(B, B) += 0.5 * p.gamma * excited;
  for (auto [g, e] : {std::pair{A, C}, {A, D}, {B, C}, {B, D}}) {
    d(g, e) -= p.gamma_d * rho(g, e);
    d(e, g) -= p.gamma_d * rho(e, g);
  }
  d(C, D) -= p.gamma_ze * rho(C, D);
  d(D, C) -= p.gamma_ze * rho(D, C);
  return d;
}

}  // namespace

Complex DensityMatrix4::rho_pi() const { return rho(C, A) - rho(D, B); }

Complex DensityMatrix4::rho_sigma() const { return rho(C, B) + rho(D, A); }

double DensityMatrix4::trace_error() const { return std::abs(rho.trace() - 1.0); }

double DensityMatrix4::hermiticity_error() const {
  return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix4::min_eigenvalue() const {
  const Eigen::Matrix4cd herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

Eigen::Matrix4cd hamiltonian(const PhysicalParams& params, Envelope omega_pi,
                             Envelope omega_sigma) {
  const Complex e_phi = std::exp(kI * params.phi);
  const Complex sigma_up = -std::conj(omega_sigma) * e_phi;
  const Complex sigma_down = -omega_sigma / e_phi;
  Eigen::Matrix4cd H = Eigen::Matrix4cd::Zero();
  H(A, C) = -std::conj(omega_pi);
  H(A, D) = sigma_up;
  H(B, C) = sigma_up;
  H(B, D) = std::conj(omega_pi);
  H(C, A) = -omega_pi;
  H(C, B) = sigma_down;
  H(D, A) = sigma_down;
  H(D, B) = omega_pi;
  H(C, C) = params.delta0;
  H(D, D) = params.delta0;
  return H;
}

DensityMatrix4 bloch_steady_state(const PhysicalParams& params, Envelope omega_pi,
                                  Envelope omega_sigma) {
  const Eigen::Matrix4cd H = hamiltonian(params, omega_pi, omega_sigma);
  Liouvillian L;
  for (int k = 0; k < 16; ++k) {
    Eigen::Matrix4cd unit = Eigen::Matrix4cd::Zero();
    unit(k / 4, k % 4) = 1.0;
    const Eigen::Matrix4cd col = master_rhs(params, H, unit);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) L(vec_index(i, j), k) = col(i, j);
  }

  Eigen::JacobiSVD<Liouvillian> svd(L);
  const auto& sv = svd.singularValues();  // descending
  const double scale = std::max(sv(0), 1.0);
  if (sv(14) <= 1e-10 * scale) {
    throw SingularLiouvillian("bloch_steady_state: stationary subspace is not one-dimensional "
                              "(second smallest singular value " +
                              std::to_string(sv(14)) + ")");
  }

  // Replace the rho_aa equation (redundant by trace conservation) with Tr rho = 1.
  Liouvillian M = L;
  Eigen::Matrix<Complex, 16, 1> rhs = Eigen::Matrix<Complex, 16, 1>::Zero();
  M.row(vec_index(A, A)).setZero();
  for (int i = 0; i < 4; ++i) M(vec_index(A, A), vec_index(i, i)) = 1.0;
  rhs(vec_index(A, A)) = 1.0;
  const Eigen::Matrix<Complex, 16, 1> x = M.fullPivLu().solve(rhs);

  DensityMatrix4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.rho(i, j) = x(vec_index(i, j));
  return out;
}

Complex periodic_harmonic(const std::function<Complex(double)>& f, int n) {
  using boost::math::quadrature::gauss_kronrod;
  auto part = [&](bool imag) {
    return gauss_kronrod<double, 61>::integrate(
        [&](double t) {
          const Complex v = f(t) * std::exp(-kI * (n * t));
          return imag ? v.imag() : v.real();
        },
        0.0, 2.0 * kPi, 15, 1e-14);
  };
  return Complex{part(false), part(true)} / (2.0 * kPi);
}

Complex fourier_quadrature(double a, double b, double phi_r, int n) {
  return periodic_harmonic(
      [=](double t) { return Complex{b / (1.0 + a * std::cos(t + phi_r)), 0.0}; }, n);
}

double ode_crosscheck_dephasing(const PhysicalParams& params, int samples) {
  namespace odeint = boost::numeric::odeint;
  using State = std::array<double, 1>;
  const Complex chi = susceptibilities(params, 1.0).chi_sat;
  auto rhs = [&](const State& s, State& ds, double) { ds[0] = dephasing_rhs(params, chi, s[0]); };

  std::vector<double> grid(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) grid[static_cast<std::size_t>(i)] = double(i) / (samples - 1);
  State s{params.phi};
  double worst = 0.0;
  auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(1e-14, 1e-13);
  odeint::integrate_times(stepper, rhs, s, grid.begin(), grid.end(), 1e-3,
                          [&](const State& st, double y) {
                            worst = std::max(worst,
                                             std::abs(st[0] - analytic_dephasing(params, y)));
                          });
  return worst;
}

}  // namespace dtls::oracles
