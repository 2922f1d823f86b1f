#include "qilab/sweep.hpp"

#include <cmath>
#include <future>
#include <numbers>

#include "qilab/errors.hpp"

namespace qilab {

LogFit fit_log_slope(std::span<const std::pair<double, double>> points) {
  const auto n = static_cast<double>(points.size());
  if (points.size() < 3) throw DegenerateAbscissae("fit_log_slope: need at least 3 points");
  double mx = 0.0;
  double my = 0.0;
  for (const auto& [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (!(sxx > 0.0)) throw DegenerateAbscissae("fit_log_slope: abscissae coincide");
  LogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ssr = 0.0;
  for (const auto& [x, y] : points) {
    const double r = y - (fit.slope * x + fit.intercept);
    ssr += r * r;
  }
  fit.stderr_slope = std::sqrt(ssr / (n - 2.0) / sxx);
  return fit;
}

std::vector<double> decade_grid(double w, int first_decade, int last_decade) {
  std::vector<double> grid;
  for (int d = first_decade; d <= last_decade; ++d) grid.push_back(w * std::pow(10.0, d));
  return grid;
}

SweepReport run_lambda_sweep(const EnergyDensityModel& base, std::span<const double> lambdas,
                             const SweepOptions& options) {
  const auto* band = std::get_if<BandProfile>(&base.profile);
  if (band == nullptr) throw ProfileInvalid("sweep: profile.kind must be band");
  if (lambdas.empty()) throw ConfigError("sweep.grid: empty");
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (!(lambdas[i] > band->w) || !std::isfinite(lambdas[i])) {
      throw ConfigError("sweep.grid: every Lambda must be finite and > profile.w");
    }
    if (i > 0 && !(lambdas[i] > lambdas[i - 1])) {
      throw ConfigError("sweep.grid: Lambda values must be strictly increasing");
    }
  }
  validate_model(base);

  const TwoSidedExponential& s = band->sampler;
  SweepReport report;
  const double p = s.lambda1() * s.lambda2();
  report.predicted_slope = -p * p / (128.0 * std::numbers::pi * std::numbers::pi);

  std::vector<std::future<SweepPoint>> pending;
  pending.reserve(lambdas.size());
  for (double lambda_uv : lambdas) {
    pending.push_back(std::async(std::launch::async, [&base, lambda_uv] {
      EnergyDensityModel m = base;
      m.profile = with_upper_cutoff(base.profile, lambda_uv);
      SweepPoint pt;
      pt.lambda_uv = lambda_uv;
      try {
        const DensityValue v = t00_average_exact(m);
        pt.t00 = v.value;
        pt.error_estimate = v.error_estimate;
        pt.ok = true;
      } catch (const NumericalError& e) {
        pt.failure = e.what();
      }
      return pt;
    }));
  }
  for (auto& f : pending) report.points.push_back(f.get());

  bool all_ok = true;
  bool decreasing = true;
  for (std::size_t i = 0; i < report.points.size(); ++i) {
    all_ok = all_ok && report.points[i].ok;
    if (i > 0 && !(report.points[i].t00 < report.points[i - 1].t00)) decreasing = false;
  }
  report.strictly_decreasing = all_ok && decreasing;

  if (all_ok && report.points.size() >= 3) {
    std::vector<std::pair<double, double>> xy;
    for (const SweepPoint& pt : report.points) xy.emplace_back(std::log(pt.lambda_uv), pt.t00);
    report.fit = fit_log_slope(xy);
    const double decades = std::log10(lambdas.back() / lambdas.front());
    const double gap = std::abs(report.fit->slope - report.predicted_slope);
    report.divergence_verdict = report.strictly_decreasing && decades >= options.min_decades - 1e-9 &&
                                gap <= options.verdict_tol * std::abs(report.predicted_slope);
  }
  return report;
}

}  // namespace qilab
