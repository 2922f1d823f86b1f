#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "qilab/commands.hpp"
#include "qilab/errors.hpp"

using namespace qilab;
using doctest::Approx;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<double> fields(const std::string& line) {
  std::vector<double> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(std::stod(cell));
  return out;
}

std::string message_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parse_config: defaults, comments and overrides") {
  CHECK(parse_config("") == ExperimentConfig{});
  const ExperimentConfig cfg = parse_config(
      "# comment\n\n"
      "sampler.kind = gaussian\n"
      "sampler.tau=0.25\n"
      "profile.kind = constant_band\n"
      "profile.w = 2\n"
      "profile.lambda_uv = 30\n"
      "sweep.grid = 1e4, 1e5,1e6\n"
      "quad.rel_tol = 1e-9\n"
      "verdict.tol = 0.05\n");
  CHECK(cfg.sampler_kind == "gaussian");
  CHECK(cfg.tau == 0.25);
  CHECK(cfg.profile_kind == "constant_band");
  CHECK(cfg.w == 2.0);
  CHECK(cfg.lambda_uv == 30.0);
  CHECK(cfg.sweep_grid == std::vector<double>{1e4, 1e5, 1e6});
  CHECK(cfg.rel_tol == 1e-9);
  CHECK(cfg.verdict_tol == 0.05);
}

TEST_CASE("serialize_config round-trips field by field") {
  ExperimentConfig cfg;
  cfg.lambda1 = 0.1;
  cfg.lambda2 = 1.0 / 3.0;
  cfg.w = 123.456789012345678;
  cfg.sweep_grid = {1e4, 2.5e5, 1e8};
  cfg.output_path = "out.csv";
  cfg.max_subdivisions = 1234;
  const ExperimentConfig back = parse_config(serialize_config(cfg));
  CHECK(back == cfg);
  CHECK(serialize_config(back) == serialize_config(cfg));
  CHECK(config_hash(back) == config_hash(cfg));
  CHECK(config_hash(cfg).size() == 16);
  CHECK(config_hash(cfg) != config_hash(ExperimentConfig{}));
  ExperimentConfig moved = cfg;
  moved.output_path = "elsewhere.csv";
  CHECK(config_hash(moved) == config_hash(cfg));
}

TEST_CASE("configuration errors name the offending key") {
  CHECK(message_of("bogus.key = 1\n").find("bogus.key") != std::string::npos);
  CHECK(message_of("profile.w = abc\n").find("profile.w") != std::string::npos);
  CHECK(message_of("sampler.lambda1 = -1\n").find("sampler.lambda1") != std::string::npos);
  CHECK(message_of("\nno equals sign\n").find("line 2") != std::string::npos);
  CHECK(message_of("sampler.kind = triangle\n").find("sampler.kind") != std::string::npos);

  ExperimentConfig lor;
  lor.sampler_kind = "lorentzian";
  CHECK_THROWS_WITH_AS(build_model(lor), doctest::Contains("profile.kind"), ConfigError);

  ExperimentConfig inverted;
  inverted.w = 1e9;
  CHECK_THROWS_AS(build_model(inverted), ConfigError);
}

TEST_CASE("format_number") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(-2.0) == "-2");
  CHECK(format_number(NAN) == "nan");
  CHECK(format_number(INFINITY) == "inf");
  CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("cmd_average: zero profile") {
  ExperimentConfig cfg;
  cfg.profile_kind = "zero";
  std::ostringstream out, err;
  CHECK(cmd_average(cfg, out, err) == kExitOk);
  const auto rows = lines(out.str());
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].rfind("# qilab average config_hash=", 0) == 0);
  CHECK(rows[1] == "lambda1,lambda2,W,Lambda,t00_exact,t00_asymptotic,error_estimate");
  CHECK(fields(rows[2])[4] == 0.0);
}

TEST_CASE("cmd_average: default configuration") {
  std::ostringstream out, err;
  CHECK(cmd_average(ExperimentConfig{}, out, err) == kExitOk);
  const auto rows = lines(out.str());
  REQUIRE(rows.size() == 3);
  const auto v = fields(rows[2]);
  REQUIRE(v.size() == 7);
  CHECK(v[0] == 1.0);
  CHECK(v[2] == 100.0);
  CHECK(v[3] == 1e8);
  CHECK(v[4] == Approx(-0.010935948042015737).epsilon(1e-12));
  CHECK(v[5] == Approx(-1.0936e-2).epsilon(1e-4));
  CHECK(v[6] > 0.0);
}

TEST_CASE("cmd_average: other samplers use the generic path") {
  ExperimentConfig cfg;
  cfg.sampler_kind = "lorentzian";
  cfg.profile_kind = "constant_band";
  cfg.w = 1.0;
  cfg.lambda_uv = 10.0;
  std::ostringstream out, err;
  CHECK(cmd_average(cfg, out, err) == kExitOk);
  const auto v = fields(lines(out.str())[2]);
  CHECK(std::isnan(v[0]));
  CHECK(std::isnan(v[5]));
  CHECK(v[4] == Approx(1.2689758597601834).epsilon(1e-12));
}

TEST_CASE("cmd_average: configuration errors write nothing") {
  ExperimentConfig cfg;
  cfg.w = -1.0;
  std::ostringstream out, err;
  CHECK(cmd_average(cfg, out, err) == kExitConfig);
  CHECK(out.str().empty());
  CHECK_FALSE(err.str().empty());
}

TEST_CASE("cmd_sweep: default sweep reports PASS") {
  ExperimentConfig cfg;
  cfg.sweep_grid = {1e4, 1e5, 1e6, 1e7, 1e8};
  std::ostringstream out, err;
  CHECK(cmd_sweep(cfg, out, err) == kExitOk);
  const auto rows = lines(out.str());
  REQUIRE(rows.size() == 2 + 5 + 4);
  CHECK(rows[1] == "Lambda,ln_Lambda_over_W,t00,err");
  CHECK(rows[7].rfind("# fitted_slope=", 0) == 0);
  CHECK(rows[9].rfind("# predicted_slope=", 0) == 0);
  CHECK(rows[10] == "# verdict=PASS");
  CHECK(fields(rows[2])[1] == Approx(std::log(100.0)));
}

TEST_CASE("cmd_sweep: grid errors and short grids") {
  ExperimentConfig below;
  below.sweep_grid = {50.0, 1e4, 1e5};
  std::ostringstream out, err;
  CHECK(cmd_sweep(below, out, err) == kExitConfig);
  CHECK(out.str().empty());

  ExperimentConfig single;
  single.sweep_grid = {1e4};
  std::ostringstream out1, err1;
  CHECK(cmd_sweep(single, out1, err1) == kExitOk);
  const auto rows = lines(out1.str());
  CHECK(rows.size() == 3);
  CHECK(out1.str().find("verdict") == std::string::npos);
}

TEST_CASE("cmd_density_trace") {
  ExperimentConfig band;
  band.w = 10.0;
  band.lambda_uv = 1e3;
  {
    std::ostringstream out, err;
    CHECK(cmd_density_trace(band, -1.0, 1.0, 2, out, err) == kExitOk);
    CHECK(lines(out.str()).size() == 2 + 2);
  }
  {
    ExperimentConfig zero;
    zero.profile_kind = "zero";
    std::ostringstream out, err;
    CHECK(cmd_density_trace(zero, -1.0, 1.0, 11, out, err) == kExitOk);
    const auto rows = lines(out.str());
    REQUIRE(rows.size() == 13);
    for (std::size_t i = 2; i < rows.size(); ++i) CHECK(fields(rows[i])[1] == 0.0);
  }
  {
    std::ostringstream out, err;
    CHECK(cmd_density_trace(band, -0.5, 0.5, 41, out, err) == kExitOk);
    const auto rows = lines(out.str());
    REQUIRE(rows.size() == 43);
    double t_min = NAN;
    double rho_min = INFINITY;
    for (std::size_t i = 2; i < rows.size(); ++i) {
      const auto v = fields(rows[i]);
      if (v[1] < rho_min) {
        rho_min = v[1];
        t_min = v[0];
      }
    }
    CHECK(std::abs(t_min) < 1e-12);
  }
  {
    std::ostringstream out, err;
    CHECK(cmd_density_trace(band, 1.0, -1.0, 5, out, err) == kExitConfig);
    CHECK(cmd_density_trace(band, -1.0, 1.0, 1, out, err) == kExitConfig);
    CHECK(out.str().empty());
  }
}

TEST_CASE("cmd_verify_algebra") {
  {
    const std::vector<double> f{0.0, 0.05, 0.1, 0.2, 0.3};
    std::ostringstream out, err;
    CHECK(cmd_verify_algebra(f, 60, out, err) == kExitOk);
    const auto rows = lines(out.str());
    REQUIRE(rows.size() == 6);
    for (double v : fields(rows[1])) CHECK(v == 0.0);
  }
  {
    const std::vector<double> f{0.2};
    std::ostringstream out, err;
    CHECK(cmd_verify_algebra(f, 40, out, err) == kExitOk);
    const auto v = fields(lines(out.str())[1]);
    CHECK(v[3] <= 1e-8);
    CHECK(v[6] <= 1e-8);
  }
  {
    const std::vector<double> f{5.0};
    std::ostringstream out, err;
    CHECK(cmd_verify_algebra(f, 40, out, err) == kExitNumerical);
    CHECK(out.str().empty());
  }
}

TEST_CASE("CSV output is byte-identical across runs") {
  ExperimentConfig cfg;
  cfg.lambda2 = 3.0;
  cfg.sweep_grid = {1e4, 1e5, 1e6, 1e7, 1e8};
  std::ostringstream a, b, err;
  CHECK(cmd_sweep(cfg, a, err) == kExitOk);
  CHECK(cmd_sweep(cfg, b, err) == kExitOk);
  CHECK(a.str() == b.str());
}
