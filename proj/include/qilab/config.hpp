#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qilab/density.hpp"

namespace qilab {

/// Experiment settings as read from a flat `key = value` file. Defaults reproduce the
/// band construction with lambda1 = lambda2 = 1, W = 100, Lambda = 1e8.
///
/// Keys: sampler.kind (two_sided_exponential | lorentzian | gaussian), sampler.lambda1,
/// sampler.lambda2, sampler.t0, sampler.tau, profile.kind (zero | band | constant_band),
/// profile.w, profile.lambda_uv, profile.g0, sweep.grid (comma-separated Lambda values;
/// empty means decades 10^2 W .. 10^6 W), quad.rel_tol, quad.abs_tol,
/// quad.max_subdivisions, verdict.tol, output.path.
struct ExperimentConfig {
  std::string sampler_kind = "two_sided_exponential";
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  double t0 = 1.0;
  double tau = 1.0;

  std::string profile_kind = "band";
  double w = 100.0;
  double lambda_uv = 1e8;
  double g0 = 0.1;

  std::vector<double> sweep_grid;

  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  std::size_t max_subdivisions = 1'000'000;

  double verdict_tol = 0.02;
  std::string output_path;

  bool operator==(const ExperimentConfig&) const = default;
};

/// Sets one key; throws ConfigError naming the key on unknown keys or unparsable values.
void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value);

/// Parses `key = value` lines; blank lines and `#` comments are skipped.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config_file(const std::string& path);

/// Canonical text form: every key, fixed order, 17 significant digits.
std::string serialize_config(const ExperimentConfig& cfg);

/// 64-bit FNV-1a of the canonical text with output.path cleared, as 16 hex digits.
std::string config_hash(const ExperimentConfig& cfg);

SamplingFunction build_sampler(const ExperimentConfig& cfg);
SqueezeProfile build_profile(const ExperimentConfig& cfg);
QuadratureConfig build_quadrature(const ExperimentConfig& cfg);
/// Fully validated model; errors carry the offending key.
EnergyDensityModel build_model(const ExperimentConfig& cfg);

/// Shortest round-trip decimal with 17 significant digits; "nan" / "inf" spelled out.
std::string format_number(double v);

}  // namespace qilab
