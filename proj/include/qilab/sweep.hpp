#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qilab/density.hpp"

namespace qilab {

struct LogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double stderr_slope = 0.0;
};

/// Ordinary least squares y = slope x + intercept. Throws DegenerateAbscissae for fewer than
/// three points or coincident abscissae.
LogFit fit_log_slope(std::span<const std::pair<double, double>> points);

struct SweepPoint {
  double lambda_uv = 0.0;
  double t00 = 0.0;
  double error_estimate = 0.0;
  bool ok = false;
  std::string failure;
};

struct SweepOptions {
  /// Allowed relative gap between fitted and predicted slope.
  double verdict_tol = 0.02;
  /// Minimum span of the grid, in decades of Lambda, for a positive verdict.
  double min_decades = 4.0;
};

/// Cutoff sweep of the band construction. The absence of a lower bound is rendered as:
/// every point computed, t00 strictly decreasing in Lambda, at least min_decades covered,
/// and the fitted slope d t00 / d ln Lambda within verdict_tol of -(l1 l2)^2 / (128 pi^2).
struct SweepReport {
  std::vector<SweepPoint> points;
  std::optional<LogFit> fit;  // present only with >= 3 points, all computed
  double predicted_slope = 0.0;
  bool strictly_decreasing = false;
  bool divergence_verdict = false;
};

/// Evaluates t00_average_exact for each cutoff, reusing the base band profile with Lambda
/// replaced. Cutoffs must be strictly increasing and above W. Points run concurrently; the
/// report is assembled in input order. A numerical failure at one point is recorded on that
/// point and suppresses the fit.
SweepReport run_lambda_sweep(const EnergyDensityModel& base, std::span<const double> lambdas,
                             const SweepOptions& options = {});

/// Decade-spaced cutoffs 10^first * W .. 10^last * W.
std::vector<double> decade_grid(double w, int first_decade = 2, int last_decade = 6);

}  // namespace qilab
