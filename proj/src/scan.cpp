#include "dtls/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <stdexcept>
#include <thread>

#include <boost/math/tools/minima.hpp>

#include "dtls/analytics.hpp"

namespace dtls {

namespace {

void parallel_for(int n, unsigned threads, const std::function<void(int)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(n, 1)));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

SweepVariable parse_sweep_variable(const std::string& name) {
  if (name == "phi") return SweepVariable::phi;
  if (name == "delta0") return SweepVariable::delta0;
  if (name == "alpha0_L") return SweepVariable::alpha0_L;
  throw std::invalid_argument("unknown sweep variable '" + name +
                              "' (expected phi, delta0 or alpha0_L)");
}

std::string to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::phi: return "phi";
    case SweepVariable::delta0: return "delta0";
    case SweepVariable::alpha0_L: return "alpha0_L";
  }
  return "?";
}

double SweepSpec::value(int i) const {
  if (i == steps - 1) return to;
  return from + (to - from) * (double(i) / double(steps - 1));
}

void SweepSpec::validate() const {
  if (steps < 2) throw std::invalid_argument("sweep steps must be >= 2");
  if (!std::isfinite(from) || !std::isfinite(to)) {
    throw std::invalid_argument("sweep bounds must be finite");
  }
}

PhysicalParams with_value(PhysicalParams params, SweepVariable v, double value) {
  switch (v) {
    case SweepVariable::phi: params.phi = value; break;
    case SweepVariable::delta0: params.delta0 = value; break;
    case SweepVariable::alpha0_L: params.alpha0_L = value; break;
  }
  return params;
}

std::vector<SweepRow> run_sweep(const PhysicalParams& base, const BoundaryConditions& bc,
                                const SolverOptions& opts, const SweepSpec& spec,
                                unsigned threads) {
  spec.validate();
  std::vector<SweepRow> rows(static_cast<std::size_t>(spec.steps));
  parallel_for(spec.steps, threads, [&](int i) {
    const double v = spec.value(i);
    const auto p = with_value(base, spec.variable, v);
    const auto control = solve_control_bvp(p, bc, opts);
    const auto res = solve_probe_bvp(p, control.profile, bc, opts);
    const auto gc = entrance_coefficients(p, control.profile);
    const auto rt = approx_RT(p, gc);
    auto& row = rows[static_cast<std::size_t>(i)];
    row.value = v;
    row.R = res.R;
    row.T = res.T;
    row.T_analytic = rt.T;
    row.R_analytic = rt.R;
    row.max_coupling = max_coupling_strength(p.alpha0_L, gc);
    row.newton_iterations = control.newton_iterations;
  });
  return rows;
}

PhaseExtrema phase_extrema(const PhysicalParams& base, const BoundaryConditions& bc,
                           const SolverOptions& opts, int coarse_steps, unsigned threads) {
  if (coarse_steps < 4) throw std::invalid_argument("phase_extrema: coarse_steps must be >= 4");
  // The control does not depend on phi, so it is solved once.
  const auto control = solve_control_bvp(base, bc, opts);
  auto probe = [&](double phi) {
    auto p = base;
    p.phi = phi;
    const auto r = solve_probe_bvp(p, control.profile, bc, opts);
    return std::pair{r.T, r.R};
  };

  const double h = kPi / coarse_steps;
  std::vector<double> T(static_cast<std::size_t>(coarse_steps)), R(T.size());
  parallel_for(coarse_steps, threads, [&](int i) {
    std::tie(T[static_cast<std::size_t>(i)], R[static_cast<std::size_t>(i)]) = probe(i * h);
  });

  // Refines the extremum of one curve; `sign` = +1 for minima, -1 for maxima.
  auto refine = [&](const std::vector<double>& curve, bool use_T, double sign) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < curve.size(); ++i) {
      if (sign * curve[i] < sign * curve[best]) best = i;
    }
    const double centre = best * h;
    auto f = [&](double phi) {
      const auto [t, r] = probe(phi);
      return sign * (use_T ? t : r);
    };
    const auto [phi, val] = boost::math::tools::brent_find_minima(f, centre - h, centre + h, 40);
    const double wrapped = phi - kPi * std::floor(phi / kPi);
    return Extremum{wrapped, sign * val};
  };

  PhaseExtrema out;
  out.T_min = refine(T, true, 1.0);
  out.T_max = refine(T, true, -1.0);
  out.R_min = refine(R, false, 1.0);
  out.R_max = refine(R, false, -1.0);
  return out;
}

}  // namespace dtls
