#include "qilab/squeeze.hpp"

#include <cmath>
#include <string>

#include "qilab/errors.hpp"

namespace qilab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

bool in_band(double k, double w, double lambda_uv) { return k >= w && k <= lambda_uv; }

void check_band(double w, double lambda_uv) {
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw ProfileInvalid("profile.w: must be finite and > 0, got " + std::to_string(w));
  }
  if (!(lambda_uv > w) || !std::isfinite(lambda_uv)) {
    throw ProfileInvalid("profile.lambda_uv: must be finite and > profile.w, got " +
                         std::to_string(lambda_uv));
  }
}

double checked_tanh(const BandProfile& p, double k) {
  const double t = band_tanh(p, k);
  if (!(t < 1.0)) {
    throw ProfileInvalid("band profile: tanh g = " + std::to_string(t) + " >= 1 at k = " +
                             std::to_string(k),
                         k);
  }
  return t;
}

}  // namespace

std::optional<std::pair<double, double>> profile_support(const SqueezeProfile& p) {
  return std::visit(overloaded{
                        [](const ZeroProfile&) -> std::optional<std::pair<double, double>> {
                          return std::nullopt;
                        },
                        [](const BandProfile& b) -> std::optional<std::pair<double, double>> {
                          return std::pair{b.w, b.lambda_uv};
                        },
                        [](const ConstantBand& c) -> std::optional<std::pair<double, double>> {
                          return std::pair{c.w, c.lambda_uv};
                        },
                    },
                    p);
}

double band_tanh(const BandProfile& p, double k) {
  return 0.5 * sampler_transform_real(SamplingFunction{p.sampler}, 2.0 * k);
}

SqueezeFactors squeeze_factors(const SqueezeProfile& p, double k) {
  if (k < 0.0) throw ConfigError("squeeze_at: wavenumber must be >= 0");
  return std::visit(overloaded{
                        [](const ZeroProfile&) { return SqueezeFactors{}; },
                        [k](const BandProfile& b) {
                          if (!in_band(k, b.w, b.lambda_uv)) return SqueezeFactors{};
                          const double t = checked_tanh(b, k);
                          const double c = 1.0 / std::sqrt((1.0 - t) * (1.0 + t));
                          return SqueezeFactors{std::atanh(t), t * c, c};
                        },
                        [k](const ConstantBand& cb) {
                          if (!in_band(k, cb.w, cb.lambda_uv)) return SqueezeFactors{};
                          return SqueezeFactors{cb.g0, std::sinh(cb.g0), std::cosh(cb.g0)};
                        },
                    },
                    p);
}

double squeeze_at(const SqueezeProfile& p, double k) { return squeeze_factors(p, k).g; }

void validate_profile(const SqueezeProfile& p) {
  std::visit(overloaded{
                 [](const ZeroProfile&) {},
                 [](const BandProfile& b) {
                   check_band(b.w, b.lambda_uv);
                   // tanh g peaks at k = W once the band sits above the sampler's knee
                   // (k >= max(lambda)/2); the scan covers bands that start below it.
                   checked_tanh(b, b.w);
                   constexpr int kScan = 64;
                   const double ratio = b.lambda_uv / b.w;
                   for (int i = 1; i <= kScan; ++i) {
                     checked_tanh(b, b.w * std::pow(ratio, double(i) / kScan));
                   }
                 },
                 [](const ConstantBand& c) {
                   check_band(c.w, c.lambda_uv);
                   if (!(c.g0 >= 0.0) || !std::isfinite(c.g0)) {
                     throw ProfileInvalid("profile.g0: must be finite and >= 0");
                   }
                 },
             },
             p);
}

SqueezeProfile with_upper_cutoff(const SqueezeProfile& p, double lambda_uv) {
  return std::visit(overloaded{
                        [](const ZeroProfile& z) -> SqueezeProfile { return z; },
                        [lambda_uv](BandProfile b) -> SqueezeProfile {
                          b.lambda_uv = lambda_uv;
                          return b;
                        },
                        [lambda_uv](ConstantBand c) -> SqueezeProfile {
                          c.lambda_uv = lambda_uv;
                          return c;
                        },
                    },
                    p);
}

}  // namespace qilab
