#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dtls/analytics.hpp"
#include "dtls/errors.hpp"
#include "dtls/grating.hpp"
#include "dtls/model.hpp"
#include "dtls/oracles.hpp"
#include "dtls/propagation.hpp"
#include "dtls/scan.hpp"

namespace py = pybind11;
using namespace dtls;

PYBIND11_MODULE(_dtls, m) {
  m.doc() = "Standing-wave control, probe reflection and transmission";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DegenerateField>(m, "DegenerateField", base.ptr());
  py::register_exception<NodeError>(m, "NodeError", base.ptr());
  py::register_exception<NoConvergence>(m, "NoConvergence", base.ptr());
  py::register_exception<SingularSystem>(m, "SingularSystem", base.ptr());
  py::register_exception<SingularLiouvillian>(m, "SingularLiouvillian", base.ptr());
  py::register_exception<IntegrationError>(m, "IntegrationError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

  py::class_<PhysicalParams>(m, "PhysicalParams")
      .def(py::init<>())
      .def(py::init([](double delta0, double alpha0_L, double phi) {
             return PhysicalParams::radiative(delta0, alpha0_L, phi);
           }),
           py::arg("delta0") = 0.0, py::arg("alpha0_L") = 0.0, py::arg("phi") = 0.0)
      .def_readwrite("gamma", &PhysicalParams::gamma)
      .def_readwrite("gamma_d", &PhysicalParams::gamma_d)
      .def_readwrite("gamma_ze", &PhysicalParams::gamma_ze)
      .def_readwrite("delta0", &PhysicalParams::delta0)
      .def_readwrite("alpha0_L", &PhysicalParams::alpha0_L)
      .def_readwrite("phi", &PhysicalParams::phi)
      .def("validate", &PhysicalParams::validate);

  py::class_<Saturation>(m, "Saturation")
      .def_readonly("F0", &Saturation::F0)
      .def_readonly("S", &Saturation::S);
  m.def("saturation", &saturation, py::arg("params"), py::arg("omega_pi_sq"));

  py::class_<Susceptibilities>(m, "Susceptibilities")
      .def_readonly("chi_lin", &Susceptibilities::chi_lin)
      .def_readonly("chi_sat", &Susceptibilities::chi_sat)
      .def_readonly("chi_eff", &Susceptibilities::chi_eff)
      .def_readonly("phi_L", &Susceptibilities::phi_L)
      .def_readonly("S", &Susceptibilities::S)
      .def_readonly("F0", &Susceptibilities::F0);
  m.def("susceptibilities", &susceptibilities, py::arg("params"), py::arg("S"));

  py::class_<CoherencePair>(m, "CoherencePair")
      .def_readonly("rho_pi", &CoherencePair::rho_pi)
      .def_readonly("rho_sigma", &CoherencePair::rho_sigma);
  m.def("steady_coherences_full", &steady_coherences_full, py::arg("params"),
        py::arg("omega_pi"), py::arg("omega_sigma"));
  m.def("steady_coherences_perturbative", &steady_coherences_perturbative, py::arg("params"),
        py::arg("omega_pi"), py::arg("omega_sigma"));

  py::class_<GratingCoefficients>(m, "GratingCoefficients")
      .def_readonly("eta", &GratingCoefficients::eta)
      .def_readonly("eta_p", &GratingCoefficients::eta_p)
      .def_readonly("c0", &GratingCoefficients::c0)
      .def_readonly("c0_p", &GratingCoefficients::c0_p)
      .def_readonly("beta", &GratingCoefficients::beta)
      .def_readonly("c_plus", &GratingCoefficients::c_plus)
      .def_readonly("c_minus", &GratingCoefficients::c_minus)
      .def_readonly("c_plus_minus", &GratingCoefficients::c_plus_minus)
      .def_readonly("cbar_0", &GratingCoefficients::cbar_0)
      .def_readonly("cbar_1", &GratingCoefficients::cbar_1)
      .def_readonly("cbar_m1", &GratingCoefficients::cbar_m1);
  m.def("grating_coefficients", &grating_coefficients, py::arg("params"),
        py::arg("omega_pi_plus"), py::arg("omega_pi_minus"));

  py::class_<BoundaryConditions>(m, "BoundaryConditions")
      .def(py::init([](double plus, double minus, double sigma) {
             return BoundaryConditions{plus, minus, sigma};
           }),
           py::arg("omega_pi_plus_in") = 0.4, py::arg("omega_pi_minus_in") = 0.16,
           py::arg("omega_sigma_plus_in") = 1.0)
      .def_readwrite("omega_pi_plus_in", &BoundaryConditions::omega_pi_plus_in)
      .def_readwrite("omega_pi_minus_in", &BoundaryConditions::omega_pi_minus_in)
      .def_readwrite("omega_sigma_plus_in", &BoundaryConditions::omega_sigma_plus_in);

  py::class_<SolverOptions>(m, "SolverOptions")
      .def(py::init<>())
      .def_readwrite("grid_points", &SolverOptions::grid_points)
      .def_readwrite("ode_rel_tol", &SolverOptions::ode_rel_tol)
      .def_readwrite("ode_abs_tol", &SolverOptions::ode_abs_tol)
      .def_readwrite("shoot_tol", &SolverOptions::shoot_tol)
      .def_readwrite("max_newton_iter", &SolverOptions::max_newton_iter);

  py::class_<FieldProfile>(m, "FieldProfile")
      .def_readonly("y", &FieldProfile::y)
      .def_readonly("pi_plus", &FieldProfile::pi_plus)
      .def_readonly("pi_minus", &FieldProfile::pi_minus)
      .def_readonly("sigma_plus", &FieldProfile::sigma_plus)
      .def_readonly("sigma_minus", &FieldProfile::sigma_minus)
      .def_readonly("phase_pi_plus", &FieldProfile::phase_pi_plus)
      .def_readonly("phase_pi_minus", &FieldProfile::phase_pi_minus)
      .def_readonly("phase_sigma_plus", &FieldProfile::phase_sigma_plus)
      .def_readonly("phase_sigma_minus", &FieldProfile::phase_sigma_minus)
      .def("__len__", &FieldProfile::size);

  py::class_<ControlSolution>(m, "ControlSolution")
      .def_readonly("profile", &ControlSolution::profile)
      .def_readonly("newton_iterations", &ControlSolution::newton_iterations)
      .def_readonly("residual", &ControlSolution::residual);

  py::class_<ScatteringDiagnostics>(m, "ScatteringDiagnostics")
      .def_readonly("newton_iterations", &ScatteringDiagnostics::newton_iterations)
      .def_readonly("control_residual", &ScatteringDiagnostics::control_residual)
      .def_readonly("probe_residual", &ScatteringDiagnostics::probe_residual)
      .def_readonly("condition", &ScatteringDiagnostics::condition);

  py::class_<ScatteringResult>(m, "ScatteringResult")
      .def_readonly("R", &ScatteringResult::R)
      .def_readonly("T", &ScatteringResult::T)
      .def_readonly("profile", &ScatteringResult::profile)
      .def_readonly("diagnostics", &ScatteringResult::diagnostics);

  m.def("solve_control_bvp", &solve_control_bvp, py::arg("params"),
        py::arg("bc") = BoundaryConditions{}, py::arg("opts") = SolverOptions{},
        py::call_guard<py::gil_scoped_release>());
  m.def("solve_scattering", &solve_scattering, py::arg("params"),
        py::arg("bc") = BoundaryConditions{}, py::arg("opts") = SolverOptions{},
        py::call_guard<py::gil_scoped_release>());
  m.def("analytic_dephasing", &analytic_dephasing, py::arg("params"), py::arg("y"));

  py::class_<ApproxRT>(m, "ApproxRT")
      .def_readonly("T", &ApproxRT::T)
      .def_readonly("R", &ApproxRT::R);
  m.def("approx_RT",
        py::overload_cast<double, double, double, double, double>(&approx_RT),
        py::arg("alpha0_L"), py::arg("c_plus_abs"), py::arg("c_plus_minus_abs"),
        py::arg("phi_L"), py::arg("phi"));
  m.def("entrance_coefficients", &entrance_coefficients, py::arg("params"), py::arg("control"));

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("value", &SweepRow::value)
      .def_readonly("R", &SweepRow::R)
      .def_readonly("T", &SweepRow::T)
      .def_readonly("T_analytic", &SweepRow::T_analytic)
      .def_readonly("R_analytic", &SweepRow::R_analytic)
      .def_readonly("max_coupling", &SweepRow::max_coupling)
      .def_readonly("newton_iterations", &SweepRow::newton_iterations);
  m.def(
      "run_sweep",
      [](const PhysicalParams& p, const std::string& var, double from, double to, int steps,
         const BoundaryConditions& bc, const SolverOptions& opts, unsigned threads) {
        return run_sweep(p, bc, opts, {parse_sweep_variable(var), from, to, steps}, threads);
      },
      py::arg("params"), py::arg("var"), py::arg("from_"), py::arg("to"), py::arg("steps"),
      py::arg("bc") = BoundaryConditions{}, py::arg("opts") = SolverOptions{},
      py::arg("threads") = 0u, py::call_guard<py::gil_scoped_release>());

  py::class_<oracles::DensityMatrix4>(m, "DensityMatrix4")
      .def_property_readonly("rho_pi", &oracles::DensityMatrix4::rho_pi)
      .def_property_readonly("rho_sigma", &oracles::DensityMatrix4::rho_sigma)
      .def_property_readonly("rho_cd", &oracles::DensityMatrix4::rho_excited_zeeman)
      .def("trace_error", &oracles::DensityMatrix4::trace_error)
      .def("element", [](const oracles::DensityMatrix4& d, int i, int j) { return d(i, j); });
  m.def("bloch_steady_state", &oracles::bloch_steady_state, py::arg("params"),
        py::arg("omega_pi"), py::arg("omega_sigma"));
  m.def("fourier_quadrature", &oracles::fourier_quadrature, py::arg("a"), py::arg("b"),
        py::arg("phi_r"), py::arg("n"));
}
