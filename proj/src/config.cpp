#include "qilab/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qilab/errors.hpp"

namespace qilab {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(std::string(key) + ": not a number: '" + std::string(text) + "'");
  }
  return v;
}

double parse_positive(std::string_view key, std::string_view text) {
  const double v = parse_double(key, text);
  if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(std::string(key) + ": must be finite and > 0");
  return v;
}

std::string join_grid(const std::vector<double>& grid) {
  std::string out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0) out += ",";
    out += format_number(grid[i]);
  }
  return out;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "sampler.kind") {
    if (value != "two_sided_exponential" && value != "lorentzian" && value != "gaussian") {
      throw ConfigError("sampler.kind: expected two_sided_exponential, lorentzian or gaussian, got '" +
                        std::string(value) + "'");
    }
    cfg.sampler_kind = value;
  } else if (key == "sampler.lambda1") {
    cfg.lambda1 = parse_positive(key, value);
  } else if (key == "sampler.lambda2") {
    cfg.lambda2 = parse_positive(key, value);
  } else if (key == "sampler.t0") {
    cfg.t0 = parse_positive(key, value);
  } else if (key == "sampler.tau") {
    cfg.tau = parse_positive(key, value);
  } else if (key == "profile.kind") {
    if (value != "zero" && value != "band" && value != "constant_band") {
      throw ConfigError("profile.kind: expected zero, band or constant_band, got '" + std::string(value) + "'");
    }
    cfg.profile_kind = value;
  } else if (key == "profile.w") {
    cfg.w = parse_positive(key, value);
  } else if (key == "profile.lambda_uv") {
    cfg.lambda_uv = parse_positive(key, value);
  } else if (key == "profile.g0") {
    const double g0 = parse_double(key, value);
    if (!(g0 >= 0.0) || !std::isfinite(g0)) throw ConfigError("profile.g0: must be finite and >= 0");
    cfg.g0 = g0;
  } else if (key == "sweep.grid") {
    std::vector<double> grid;
    std::string_view rest = value;
    while (!trim(rest).empty()) {
      const auto comma = rest.find(',');
      grid.push_back(parse_positive(key, rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    cfg.sweep_grid = std::move(grid);
  } else if (key == "quad.rel_tol") {
    cfg.rel_tol = parse_positive(key, value);
  } else if (key == "quad.abs_tol") {
    cfg.abs_tol = parse_positive(key, value);
  } else if (key == "quad.max_subdivisions") {
    const double n = parse_positive(key, value);
    if (n != std::floor(n) || n > 1e9) throw ConfigError("quad.max_subdivisions: must be an integer <= 1e9");
    cfg.max_subdivisions = static_cast<std::size_t>(n);
  } else if (key == "verdict.tol") {
    cfg.verdict_tol = parse_positive(key, value);
  } else if (key == "output.path") {
    cfg.output_path = value;
  } else {
    throw ConfigError("unknown key '" + std::string(key) + "'");
  }
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig cfg;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    try {
      apply_setting(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const ExperimentConfig& cfg) {
  std::string out;
  auto put = [&out](const char* key, const std::string& value) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  };
  put("sampler.kind", cfg.sampler_kind);
  put("sampler.lambda1", format_number(cfg.lambda1));
  put("sampler.lambda2", format_number(cfg.lambda2));
  put("sampler.t0", format_number(cfg.t0));
  put("sampler.tau", format_number(cfg.tau));
  put("profile.kind", cfg.profile_kind);
  put("profile.w", format_number(cfg.w));
  put("profile.lambda_uv", format_number(cfg.lambda_uv));
  put("profile.g0", format_number(cfg.g0));
  put("sweep.grid", join_grid(cfg.sweep_grid));
  put("quad.rel_tol", format_number(cfg.rel_tol));
  put("quad.abs_tol", format_number(cfg.abs_tol));
  put("quad.max_subdivisions", std::to_string(cfg.max_subdivisions));
  put("verdict.tol", format_number(cfg.verdict_tol));
  put("output.path", cfg.output_path);
  return out;
}

std::string config_hash(const ExperimentConfig& cfg) {
  // Where the CSV goes does not change what it says.
  ExperimentConfig physics = cfg;
  physics.output_path.clear();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : serialize_config(physics)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SamplingFunction build_sampler(const ExperimentConfig& cfg) {
  if (cfg.sampler_kind == "two_sided_exponential") return TwoSidedExponential(cfg.lambda1, cfg.lambda2);
  if (cfg.sampler_kind == "lorentzian") return Lorentzian(cfg.t0);
  if (cfg.sampler_kind == "gaussian") return Gaussian(cfg.tau);
  throw ConfigError("sampler.kind: unknown '" + cfg.sampler_kind + "'");
}

SqueezeProfile build_profile(const ExperimentConfig& cfg) {
  if (cfg.profile_kind == "zero") return ZeroProfile{};
  if (cfg.profile_kind == "band") {
    const SamplingFunction s = build_sampler(cfg);
    const auto* e = std::get_if<TwoSidedExponential>(&s);
    if (e == nullptr) throw ConfigError("profile.kind: band requires sampler.kind = two_sided_exponential");
    return BandProfile{cfg.w, cfg.lambda_uv, *e};
  }
  if (cfg.profile_kind == "constant_band") return ConstantBand{cfg.w, cfg.lambda_uv, cfg.g0};
  throw ConfigError("profile.kind: unknown '" + cfg.profile_kind + "'");
}

QuadratureConfig build_quadrature(const ExperimentConfig& cfg) {
  QuadratureConfig q;
  q.rel_tol = cfg.rel_tol;
  q.abs_tol = cfg.abs_tol;
  q.max_subdivisions = cfg.max_subdivisions;
  validate_config(q);
  return q;
}

EnergyDensityModel build_model(const ExperimentConfig& cfg) {
  EnergyDensityModel m{build_profile(cfg), build_sampler(cfg), build_quadrature(cfg)};
  validate_model(m);
  return m;
}

}  // namespace qilab
