#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cli/run_config.hpp"
#include "dtls/propagation.hpp"
#include "dtls/scan.hpp"

namespace dtls::cli {

void emit_profile(const FieldProfile& profile, double sigma_in, std::ostream& out);

/// Sweep CSV; `leading` adds a constant first column (name, value) when non-empty.
void emit_sweep(const std::vector<SweepRow>& rows, std::ostream& out,
                const std::string& leading_name = {}, double leading_value = 0.0,
                bool header = true);

/// Single solve (profile CSV) or, with cfg.sweep set, a sweep CSV.
void run_scenario(const RunConfig& cfg, std::ostream& out);

/// Grating and coupling coefficients along the converged control.
void emit_coefficients(const RunConfig& cfg, std::ostream& out);

/// Figure presets. `figure_config` returns the preset with `overrides`
/// applied last; fig7 writes two sweeps and a shift summary to `log`.
const std::vector<std::string>& figure_names();
RunConfig figure_config(const std::string& name);
void run_figure(const std::string& name, const RunConfig& cfg, std::ostream& out,
                std::ostream& log);

/// Validation reports against the brute-force oracles.
void run_oracle(const std::string& which, const RunConfig& cfg, int samples, unsigned seed,
                std::ostream& out, std::ostream& log);

}  // namespace dtls::cli
