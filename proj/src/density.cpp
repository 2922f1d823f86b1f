#include "qilab/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qilab/errors.hpp"

namespace qilab {

namespace {

constexpr double kRadialMeasure = 1.0 / (2.0 * std::numbers::pi * std::numbers::pi);

// Radial integrals for the time-domain path must be much tighter than the outer
// integral, since rho(t) is three orders of magnitude larger than its average.
constexpr double kTightRadialRelTol = 1e-14;

DensityValue radial(const EnergyDensityModel& m, const Integrand& f) {
  const auto support = profile_support(m.profile);
  if (!support) return {};
  const QuadratureResult r = integrate(f, support->first, support->second, m.quad);
  return {kRadialMeasure * r.value, kRadialMeasure * r.error_estimate};
}

}  // namespace

EnergyDensityModel band_model(double lambda1, double lambda2, double w, double lambda_uv,
                               QuadratureConfig quad) {
  TwoSidedExponential s(lambda1, lambda2);
  return EnergyDensityModel{BandProfile{w, lambda_uv, s}, s, std::move(quad)};
}

void validate_model(const EnergyDensityModel& m) {
  validate_profile(m.profile);
  validate_config(m.quad);
}

PointwiseDensity::PointwiseDensity(const EnergyDensityModel& m) : PointwiseDensity(m, m.quad) {}

PointwiseDensity::PointwiseDensity(const EnergyDensityModel& m, const QuadratureConfig& radial_cfg) {
  validate_model(m);
  const auto support = profile_support(m.profile);
  if (!support) return;
  const auto& profile = m.profile;
  k_max_ = support->second;
  positive_ = integrate(
      [&profile](double k) {
        const SqueezeFactors q = squeeze_factors(profile, k);
        return k * k * k * q.sinh_g * q.sinh_g;
      },
      support->first, support->second, radial_cfg);
  cross_.emplace(
      [&profile](double k) {
        const SqueezeFactors q = squeeze_factors(profile, k);
        return k * k * k * q.cosh_g * q.sinh_g;
      },
      support->first, support->second, radial_cfg);
}

DensityValue PointwiseDensity::at(double t) const {
  if (!cross_) return {};
  const QuadratureResult osc = cross_->cosine(2.0 * t);
  return {kRadialMeasure * (positive_.value - osc.value),
          kRadialMeasure * (positive_.error_estimate + osc.error_estimate)};
}

DensityValue PointwiseDensity::positive_term() const {
  return {kRadialMeasure * positive_.value, kRadialMeasure * positive_.error_estimate};
}

double PointwiseDensity::magnitude_bound() const {
  if (!cross_) return 0.0;
  return kRadialMeasure * (std::abs(positive_.value) + positive_.error_estimate + cross_->envelope_l1() +
                           cross_->error_bound());
}

DensityValue density_at(const EnergyDensityModel& m, double t) { return PointwiseDensity(m).at(t); }

DensityValue t00_average_exact(const EnergyDensityModel& m) {
  const auto* s = std::get_if<TwoSidedExponential>(&m.sampler);
  if (s == nullptr) {
    throw SamplerMismatch("t00_average_exact: needs a two_sided_exponential sampler, got " +
                          std::string(sampler_kind(m.sampler)));
  }
  if (const auto* band = std::get_if<BandProfile>(&m.profile); band && !(band->sampler == *s)) {
    throw SamplerMismatch("t00_average_exact: band profile was built for a different sampler");
  }
  validate_model(m);

  const double a = s->amplitude();
  const double l1 = s->lambda1();
  const double l2 = s->lambda2();
  const auto& profile = m.profile;
  return radial(m, [&](double k) {
    const SqueezeFactors q = squeeze_factors(profile, k);
    const double k2 = 4.0 * k * k;
    const double bracket = q.sinh_g / q.cosh_g - a * (l1 / (l1 * l1 + k2) + l2 / (l2 * l2 + k2));
    return k * k * k * q.cosh_g * q.sinh_g * bracket;
  });
}

DensityValue t00_average_generic(const EnergyDensityModel& m) {
  validate_model(m);
  const auto& profile = m.profile;
  const auto& sampler = m.sampler;
  return radial(m, [&](double k) {
    const SqueezeFactors q = squeeze_factors(profile, k);
    const double bracket = q.sinh_g / q.cosh_g - sampler_transform_real(sampler, 2.0 * k);
    return k * k * k * q.cosh_g * q.sinh_g * bracket;
  });
}

DensityValue t00_average_timedomain(const EnergyDensityModel& m, double window) {
  validate_model(m);
  if (!(window > 0.0) || !std::isfinite(window)) throw WindowTooSmall("window must be finite and > 0");
  const double tail = sampler_tail_mass(m.sampler, window);
  if (tail > m.quad.rel_tol) {
    throw WindowTooSmall("sampler mass outside +/-" + std::to_string(window) + " is " +
                         std::to_string(tail) + " > quad.rel_tol");
  }
  if (!profile_support(m.profile)) return {};

  QuadratureConfig radial_cfg = m.quad;
  radial_cfg.rel_tol = std::min(radial_cfg.rel_tol, kTightRadialRelTol);
  radial_cfg.breakpoints.clear();
  const PointwiseDensity rho(m, radial_cfg);
  const double bound = rho.magnitude_bound();

  // rho(t) oscillates at up to 2 k_max; pin one panel per period wherever s(t) rho(t)
  // can still matter, plus the kink of the sampler at t = 0.
  QuadratureConfig outer = m.quad;
  const double period = std::numbers::pi / rho.max_wavenumber();
  const double reach =
      std::min(window, sampler_support_radius(m.sampler, 1e-3 * m.quad.abs_tol / std::max(bound, 1e-300)));
  const long steps = std::max(1L, static_cast<long>(std::ceil(reach / period)));
  outer.breakpoints.clear();
  outer.breakpoints.reserve(2 * steps + 1);
  for (long i = -steps; i <= steps; ++i) outer.breakpoints.push_back(i * (reach / steps));

  const auto& sampler = m.sampler;
  const QuadratureResult r = integrate(
      [&](double t) { return sampler_eval(sampler, t) * rho.at(t).value; }, -window, window, outer);

  // Radial errors are t-independent and s integrates to at most one.
  const DensityValue radial_err = rho.at(0.0);
  return {r.value, r.error_estimate + radial_err.error_estimate + tail * bound};
}

double t00_asymptotic(double lambda1, double lambda2, double w, double lambda_uv) {
  if (!(lambda1 > 0.0) || !(lambda2 > 0.0)) throw ConfigError("t00_asymptotic: rates must be > 0");
  if (!(w > 0.0) || !(lambda_uv >= w)) throw ConfigError("t00_asymptotic: need Lambda >= W > 0");
  const double p = lambda1 * lambda2;
  return -p * p / (128.0 * std::numbers::pi * std::numbers::pi) * std::log(lambda_uv / w);
}

}  // namespace qilab
