#pragma once

#include <ostream>
#include <span>

#include "qilab/config.hpp"

namespace qilab {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

// Each command writes CSV to `out` (only once the run has produced it) and diagnostics to
// `err`, returning one of the exit codes above. Configuration problems never touch `out`.

/// One row: lambda1,lambda2,W,Lambda,t00_exact,t00_asymptotic,error_estimate.
/// Two-sided exponential samplers use the closed-form transform; other samplers fall back to
/// the generic average and leave the rate and asymptotic columns as nan.
int cmd_average(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

/// Rows Lambda,ln_Lambda_over_W,t00,err, then `#` footer lines with the fit and the verdict
/// (three or more points only). The verdict never changes the exit code.
int cmd_sweep(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

/// Uniform trace t,density,err of the pointwise energy density.
int cmd_density_trace(const ExperimentConfig& cfg, double t_min, double t_max, int n_points, std::ostream& out,
                      std::ostream& err);

/// Fock-space check of the pair expectations against sinh^2 f and cosh f sinh f. Exit 0 iff
/// every difference is <= 1e-8.
int cmd_verify_algebra(std::span<const double> f_values, int dim, std::ostream& out, std::ostream& err);

}  // namespace qilab
