#pragma once

#include <optional>
#include <utility>
#include <variant>

#include "qilab/sampling.hpp"

namespace qilab {

// Per-mode squeeze profiles g(k) >= 0, with the generator coefficient f_k = -g(k).

struct ZeroProfile {
  bool operator==(const ZeroProfile&) const = default;
};

/// Squeezing only on W <= k <= Lambda, with tanh g(k) = Re s^(2k) / 2 for the
/// two-sided exponential sampler. This ties the state to the sampler it is averaged with.
struct BandProfile {
  double w;
  double lambda_uv;
  TwoSidedExponential sampler;
  bool operator==(const BandProfile&) const = default;
};

/// g(k) = g0 on W <= k <= Lambda.
struct ConstantBand {
  double w;
  double lambda_uv;
  double g0;
  bool operator==(const ConstantBand&) const = default;
};

using SqueezeProfile = std::variant<ZeroProfile, BandProfile, ConstantBand>;

struct SqueezeFactors {
  double g = 0.0;
  double sinh_g = 0.0;
  double cosh_g = 1.0;
};

/// Band [W, Lambda] for banded variants; nullopt for ZeroProfile.
std::optional<std::pair<double, double>> profile_support(const SqueezeProfile& p);

/// tanh g(k) for the band profile inside the band: Re s^(2k) / 2.
double band_tanh(const BandProfile& p, double k);

double squeeze_at(const SqueezeProfile& p, double k);

/// g, sinh g and cosh g at k. Inside the band profile the hyperbolic factors are formed
/// from tanh g directly.
SqueezeFactors squeeze_factors(const SqueezeProfile& p, double k);

/// Throws ProfileInvalid on structural violations or if tanh g would leave (-1, 1).
void validate_profile(const SqueezeProfile& p);

/// Copy of a banded profile with its upper cutoff replaced.
SqueezeProfile with_upper_cutoff(const SqueezeProfile& p, double lambda_uv);

}  // namespace qilab
