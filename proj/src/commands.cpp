#include "qilab/commands.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "qilab/errors.hpp"
#include "qilab/fock_oracle.hpp"
#include "qilab/sweep.hpp"

namespace qilab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kAlgebraTol = 1e-8;

void row(std::ostream& os, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) os << ',';
    os << format_number(v);
    first = false;
  }
  os << '\n';
}

// Runs body against a buffer, mapping the error hierarchy onto exit codes.
template <class Body>
int guarded(std::ostream& out, std::ostream& err, Body&& body) {
  std::ostringstream buf;
  try {
    const int code = body(buf);
    out << buf.str();
    return code;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace

int cmd_average(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&](std::ostream& os) {
    const EnergyDensityModel m = build_model(cfg);
    const auto support = profile_support(m.profile);
    const double w = support ? support->first : kNaN;
    const double lambda_uv = support ? support->second : kNaN;

    double l1 = kNaN;
    double l2 = kNaN;
    double asymptotic = kNaN;
    DensityValue v;
    if (const auto* s = std::get_if<TwoSidedExponential>(&m.sampler)) {
      l1 = s->lambda1();
      l2 = s->lambda2();
      v = t00_average_exact(m);
      if (std::holds_alternative<BandProfile>(m.profile)) asymptotic = t00_asymptotic(l1, l2, w, lambda_uv);
    } else {
      v = t00_average_generic(m);
    }

    os << "# qilab average config_hash=" << config_hash(cfg) << '\n';
    os << "lambda1,lambda2,W,Lambda,t00_exact,t00_asymptotic,error_estimate\n";
    row(os, {l1, l2, w, lambda_uv, v.value, asymptotic, v.error_estimate});
    return kExitOk;
  });
}

int cmd_sweep(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&](std::ostream& os) {
    const EnergyDensityModel m = build_model(cfg);
    const auto* band = std::get_if<BandProfile>(&m.profile);
    if (band == nullptr) throw ConfigError("profile.kind: sweep requires band");
    const std::vector<double> grid = cfg.sweep_grid.empty() ? decade_grid(band->w) : cfg.sweep_grid;

    SweepOptions options;
    options.verdict_tol = cfg.verdict_tol;
    const SweepReport report = run_lambda_sweep(m, grid, options);

    os << "# qilab sweep config_hash=" << config_hash(cfg) << '\n';
    os << "Lambda,ln_Lambda_over_W,t00,err\n";
    bool all_ok = true;
    for (const SweepPoint& pt : report.points) {
      if (!pt.ok) {
        all_ok = false;
        err << "numerical error at Lambda=" << format_number(pt.lambda_uv) << ": " << pt.failure << '\n';
      }
      row(os, {pt.lambda_uv, std::log(pt.lambda_uv / band->w), pt.ok ? pt.t00 : kNaN,
               pt.ok ? pt.error_estimate : kNaN});
    }
    if (report.fit) {
      os << "# fitted_slope=" << format_number(report.fit->slope) << '\n';
      os << "# slope_stderr=" << format_number(report.fit->stderr_slope) << '\n';
      os << "# predicted_slope=" << format_number(report.predicted_slope) << '\n';
      os << "# verdict=" << (report.divergence_verdict ? "PASS" : "FAIL") << '\n';
    }
    return all_ok ? kExitOk : kExitNumerical;
  });
}

int cmd_density_trace(const ExperimentConfig& cfg, double t_min, double t_max, int n_points, std::ostream& out,
                      std::ostream& err) {
  return guarded(out, err, [&](std::ostream& os) {
    if (n_points < 2) throw ConfigError("n-points: must be >= 2");
    if (!(t_min < t_max) || !std::isfinite(t_min) || !std::isfinite(t_max)) {
      throw ConfigError("t-min/t-max: need finite t-min < t-max");
    }
    const EnergyDensityModel m = build_model(cfg);
    const PointwiseDensity rho(m);

    os << "# qilab density-trace config_hash=" << config_hash(cfg) << '\n';
    os << "t,density,err\n";
    const double step = (t_max - t_min) / (n_points - 1);
    for (int i = 0; i < n_points; ++i) {
      const double t = i == n_points - 1 ? t_max : t_min + i * step;
      const DensityValue v = rho.at(t);
      row(os, {t, v.value, v.error_estimate});
    }
    return kExitOk;
  });
}

int cmd_verify_algebra(std::span<const double> f_values, int dim, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&](std::ostream& os) {
    if (f_values.empty()) throw ConfigError("f: at least one value required");
    os << "f,n_expect,sinh2_f,abs_diff_n,aa_expect,cosh_sinh_f,abs_diff_aa\n";
    bool all_ok = true;
    for (double f : f_values) {
      const BogoliubovExpectations e = bogoliubov_expectations(f, dim);
      const double sh = std::sinh(f);
      const double n_ref = sh * sh;
      const double aa_ref = std::cosh(f) * sh;
      const double dn = std::abs(e.n_expect - n_ref);
      const double daa = std::abs(e.aa_expect - aa_ref);
      all_ok = all_ok && dn <= kAlgebraTol && daa <= kAlgebraTol;
      row(os, {f, e.n_expect, n_ref, dn, e.aa_expect, aa_ref, daa});
    }
    if (!all_ok) err << "verify-algebra: difference above " << kAlgebraTol << '\n';
    return all_ok ? kExitOk : kExitNumerical;
  });
}

}  // namespace qilab
