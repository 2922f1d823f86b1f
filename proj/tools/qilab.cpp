// Command-line front end: qilab {average|sweep|density-trace|verify-algebra}.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qilab/commands.hpp"
#include "qilab/errors.hpp"

namespace {

qilab::ExperimentConfig resolve_config(const std::string& path, const std::vector<std::string>& overrides,
                                       const std::string& out) {
  qilab::ExperimentConfig cfg = path.empty() ? qilab::ExperimentConfig{} : qilab::load_config_file(path);
  for (const std::string& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw qilab::ConfigError("--set expects key=value, got '" + kv + "'");
    qilab::apply_setting(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (!out.empty()) cfg.output_path = out;
  return cfg;
}

int emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return qilab::kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "config error: cannot write '" << path << "'\n";
    return qilab::kExitConfig;
  }
  file << text;
  return qilab::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sampled energy densities of squeezed vacuum states"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_path;
  app.add_option("-c,--config", config_path, "Flat key = value config file");
  app.add_option("-s,--set", overrides, "Override a config key (key=value), repeatable");
  app.add_option("-o,--out", out_path, "Write CSV here instead of standard output");

  auto* average = app.add_subcommand("average", "Sampled average for one band");
  auto* sweep = app.add_subcommand("sweep", "Cutoff sweep with log-slope fit and verdict");

  auto* trace = app.add_subcommand("density-trace", "Pointwise energy density on a uniform time grid");
  double t_min = -5.0;
  double t_max = 5.0;
  int n_points = 101;
  trace->add_option("--t-min", t_min, "First time")->capture_default_str();
  trace->add_option("--t-max", t_max, "Last time")->capture_default_str();
  trace->add_option("--n-points", n_points, "Number of samples (>= 2)")->capture_default_str();

  auto* algebra = app.add_subcommand("verify-algebra", "Fock-space check of the Bogoliubov expectations");
  std::vector<double> f_values{0.0, 0.05, 0.1, 0.2, 0.3};
  int dim = 60;
  algebra->add_option("-f,--f", f_values, "Squeeze parameters f")->delimiter(',');
  algebra->add_option("-n,--dim", dim, "Fock truncation dimension")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? qilab::kExitOk : qilab::kExitConfig;
  }

  std::ostringstream out;
  int code = qilab::kExitOk;
  std::string destination = out_path;
  try {
    if (algebra->parsed()) {
      code = qilab::cmd_verify_algebra(f_values, dim, out, std::cerr);
    } else {
      const qilab::ExperimentConfig cfg = resolve_config(config_path, overrides, out_path);
      destination = cfg.output_path;
      if (average->parsed()) {
        code = qilab::cmd_average(cfg, out, std::cerr);
      } else if (sweep->parsed()) {
        code = qilab::cmd_sweep(cfg, out, std::cerr);
      } else if (trace->parsed()) {
        code = qilab::cmd_density_trace(cfg, t_min, t_max, n_points, out, std::cerr);
      }
    }
  } catch (const qilab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return qilab::kExitConfig;
  }

  if (code == qilab::kExitConfig) return code;
  const int written = emit(destination, out.str());
  return written != qilab::kExitOk ? written : code;
}
