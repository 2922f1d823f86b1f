#pragma once

#include <optional>

#include "qilab/quadrature.hpp"
#include "qilab/sampling.hpp"
#include "qilab/squeeze.hpp"

namespace qilab {

// Massless scalar field in 3+1 dimensions at the spatial origin, natural units
// (hbar = c = 1, omega_k = |k|). Energy densities carry units of wavenumber^4.
//
// Constant chain: the mode sum (1/2V) sum_k 2|k| [...] becomes, with
// sum_k -> V/(2 pi)^3 \int 4 pi k^2 dk, the radial integral (1/2 pi^2) \int k^3 [...] dk.
//
// Sign convention: profiles hold g(k) >= 0 and the squeeze generator uses f_k = -g(k).
// Everything below is written in g; the flip happens nowhere else.

struct EnergyDensityModel {
  SqueezeProfile profile;
  SamplingFunction sampler;
  QuadratureConfig quad;
};

struct DensityValue {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Band profile tied to its own two-sided exponential sampler.
EnergyDensityModel band_model(double lambda1, double lambda2, double w, double lambda_uv,
                               QuadratureConfig quad = {});

/// Throws ConfigError (ProfileInvalid, ...) for invalid profiles or quadrature settings.
void validate_model(const EnergyDensityModel& m);

/// Pointwise density <T00(0, t)> with the radial integrals prepared once, so a trace over
/// many t reuses them:
///   rho(t) = (1/2 pi^2) \int k^3 [sinh^2 g - cosh g sinh g cos(2 k t)] dk.
class PointwiseDensity {
 public:
  explicit PointwiseDensity(const EnergyDensityModel& m);
  PointwiseDensity(const EnergyDensityModel& m, const QuadratureConfig& radial);

  DensityValue at(double t) const;

  /// Non-oscillatory part (1/2 pi^2) \int k^3 sinh^2 g dk, the long-time mean of rho(t).
  DensityValue positive_term() const;

  /// Upper bound on |rho(t)| over all t.
  double magnitude_bound() const;

  /// Highest wavenumber in the profile support (0 for the vacuum).
  double max_wavenumber() const noexcept { return k_max_; }

 private:
  QuadratureResult positive_;
  std::optional<OscillatoryIntegral> cross_;
  double k_max_ = 0.0;
};

DensityValue density_at(const EnergyDensityModel& m, double t);

/// Sampled average with the two-sided exponential's transform written out:
///   (1/2 pi^2) \int k^3 cosh g sinh g [tanh g - A(l1/(l1^2+4k^2) + l2/(l2^2+4k^2))] dk.
/// Throws SamplerMismatch for other samplers, or when a band profile carries a different sampler.
DensityValue t00_average_exact(const EnergyDensityModel& m);

/// Sampled average for any sampler via its transform:
///   (1/2 pi^2) \int k^3 cosh g sinh g [tanh g - Re s^(2k)] dk.
DensityValue t00_average_generic(const EnergyDensityModel& m);

/// \int_{-window}^{window} rho(t) s(t) dt evaluated directly in time, as an independent
/// check of the frequency-domain averages. Throws WindowTooSmall if the sampler's mass
/// outside the window exceeds m.quad.rel_tol.
DensityValue t00_average_timedomain(const EnergyDensityModel& m, double window);

/// -(l1 l2)^2 / (128 pi^2) ln(Lambda / W).
double t00_asymptotic(double lambda1, double lambda2, double w, double lambda_uv);

}  // namespace qilab
