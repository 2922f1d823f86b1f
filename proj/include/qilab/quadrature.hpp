#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace qilab {

using Integrand = std::function<double(double)>;

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  std::size_t max_subdivisions = 1'000'000;
  /// Mandatory panel boundaries, strictly increasing. Points outside (a, b) are ignored.
  std::vector<double> breakpoints;

  bool operator==(const QuadratureConfig&) const = default;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// Throws ConfigError unless tolerances are positive and breakpoints strictly increasing.
void validate_config(const QuadratureConfig& cfg);

/// Globally adaptive 7/15-point Gauss-Kronrod integration of f over [a, b].
///
/// Panels are split at every breakpoint inside (a, b). A segment with 0 < lo and
/// hi / lo > 1e3 starts from log-spaced panels (four per decade). On success the
/// returned error estimate is <= max(rel_tol |value|, abs_tol); otherwise
/// ToleranceNotMet is thrown with the best estimate.
QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureConfig& cfg = {});

/// Prepared Legendre-Filon rule for integrals \int_a^b f(k) e^{i omega k} dk.
///
/// The envelope f is expanded once in Legendre polynomials on adaptively refined
/// panels; the oscillatory factor is then integrated exactly via
/// \int_{-1}^{1} P_n(x) e^{i kappa x} dx = 2 i^n j_n(kappa), so any number of
/// frequencies can be evaluated without touching f again. Refinement stops when the
/// tail-coefficient bound is <= max(rel_tol \int|f|, abs_tol); the bound holds for
/// every omega.
class OscillatoryIntegral {
 public:
  static constexpr int kOrder = 24;

  OscillatoryIntegral(const Integrand& envelope, double a, double b, const QuadratureConfig& cfg = {});

  /// \int_a^b f(k) e^{i omega k} dk.
  std::complex<double> transform(double omega) const;
  /// \int_a^b f(k) cos(omega k) dk with the prepared error bound.
  QuadratureResult cosine(double omega) const;

  double error_bound() const noexcept { return error_; }
  double envelope_l1() const noexcept { return l1_; }
  std::size_t evaluations() const noexcept { return evaluations_; }
  std::size_t panel_count() const noexcept { return panels_.size(); }

 private:
  struct Panel {
    double mid;
    double half_width;
    std::array<double, kOrder> coeffs;
  };

  std::vector<Panel> panels_;
  double error_ = 0.0;
  double l1_ = 0.0;
  std::size_t evaluations_ = 0;
};

/// \int_a^b f(k) cos(omega k) dk. Convenience wrapper over OscillatoryIntegral.
QuadratureResult integrate_oscillatory(const Integrand& envelope, double omega, double a, double b,
                                       const QuadratureConfig& cfg = {});

/// Spherical Bessel functions j_0..j_{out.size()-1} at x >= 0.
void spherical_bessel_j(double x, std::span<double> out);

}  // namespace qilab
