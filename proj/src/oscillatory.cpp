#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "panels.hpp"
#include "qilab/errors.hpp"
#include "qilab/quadrature.hpp"

namespace qilab {

namespace {

constexpr int kOrder = OscillatoryIntegral::kOrder;
constexpr int kTail = 4;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct LegendreRule {
  std::array<double, kOrder> nodes{};
  std::array<double, kOrder> weights{};
  // projection[n][j] = (2n + 1) / 2 * w_j * P_n(x_j)
  std::array<std::array<double, kOrder>, kOrder> projection{};

  LegendreRule() {
    using std::numbers::pi;
    for (int i = 0; i < kOrder; ++i) {
      double x = std::cos(pi * (i + 0.75) / (kOrder + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0;
        double p1 = x;
        for (int n = 2; n <= kOrder; ++n) {
          const double p2 = ((2 * n - 1) * x * p1 - (n - 1) * p0) / n;
          p0 = p1;
          p1 = p2;
        }
        dp = kOrder * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      nodes[i] = x;
      weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    for (int j = 0; j < kOrder; ++j) {
      double p0 = 1.0;
      double p1 = nodes[j];
      projection[0][j] = 0.5 * weights[j];
      projection[1][j] = 1.5 * weights[j] * p1;
      for (int n = 2; n < kOrder; ++n) {
        const double p2 = ((2 * n - 1) * nodes[j] * p1 - (n - 1) * p0) / n;
        p0 = p1;
        p1 = p2;
        projection[n][j] = 0.5 * (2 * n + 1) * weights[j] * p2;
      }
    }
  }
};

const LegendreRule& rule() {
  static const LegendreRule r;
  return r;
}

struct Candidate {
  double lo;
  double hi;
  std::array<double, kOrder> coeffs;
  double error;
  double resabs;

  bool operator<(const Candidate& other) const { return error < other.error; }
};

Candidate expand(const Integrand& f, double lo, double hi) {
  const LegendreRule& r = rule();
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  std::array<double, kOrder> values{};
  double resabs = 0.0;
  for (int j = 0; j < kOrder; ++j) {
    values[j] = f(mid + half * r.nodes[j]);
    resabs += r.weights[j] * std::abs(values[j]);
  }
  resabs *= half;

  Candidate c{lo, hi, {}, 0.0, resabs};
  for (int n = 0; n < kOrder; ++n) {
    double s = 0.0;
    for (int j = 0; j < kOrder; ++j) s += r.projection[n][j] * values[j];
    c.coeffs[n] = s;
  }
  // |\int P_n e^{i kappa x}| <= 2, so the discarded tail contributes at most
  // 2 * half * sum|c_n| over the last coefficients; the last four stand in for it.
  double tail = 0.0;
  for (int n = kOrder - kTail; n < kOrder; ++n) tail += std::abs(c.coeffs[n]);
  c.error = 2.0 * half * tail + 10.0 * kEps * resabs;
  if (!std::isfinite(c.error)) c.error = std::numeric_limits<double>::infinity();
  return c;
}

}  // namespace

void spherical_bessel_j(double x, std::span<double> out) {
  const int nmax = static_cast<int>(out.size()) - 1;
  if (nmax < 0) return;
  if (x == 0.0) {
    std::fill(out.begin(), out.end(), 0.0);
    out[0] = 1.0;
    return;
  }
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double j0 = x < 1e-4 ? 1.0 - x * x / 6.0 : s / x;
  double j1;
  if (x < 0.1) {
    const double x2 = x * x;
    j1 = x / 3.0 * (1.0 - x2 / 10.0 * (1.0 - x2 / 28.0 * (1.0 - x2 / 54.0)));
  } else {
    j1 = (s / x - c) / x;
  }
  out[0] = j0;
  if (nmax == 0) return;
  out[1] = j1;

  if (x > nmax) {
    // Upward recurrence is stable while n < x.
    for (int n = 1; n < nmax; ++n) out[n + 1] = (2 * n + 1) / x * out[n] - out[n - 1];
    return;
  }

  // Miller's downward recurrence, normalized against whichever of j0, j1 is larger.
  const int start = nmax + 40;
  double above = 0.0;
  double here = 1e-30;
  for (int n = start; n >= 1; --n) {
    const double below = (2 * n + 1) / x * here - above;
    above = here;
    here = below;
    if (n - 1 <= nmax) out[n - 1] = here;
    if (n <= nmax) out[n] = above;
    if (std::abs(here) > 1e250) {
      here *= 1e-250;
      above *= 1e-250;
      for (int m = std::max(n - 1, 0); m <= nmax; ++m) out[m] *= 1e-250;
    }
  }
  const double scale = std::abs(j0) >= std::abs(j1) ? j0 / out[0] : j1 / out[1];
  for (double& v : out) v *= scale;
}

OscillatoryIntegral::OscillatoryIntegral(const Integrand& envelope, double a, double b,
                                         const QuadratureConfig& cfg) {
  validate_config(cfg);
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw ConfigError("integrate_oscillatory: limits must be finite with a < b");
  }

  std::vector<Candidate> heap;
  std::vector<Candidate> frozen;
  for (const auto& [lo, hi] : detail::initial_panels(a, b, cfg.breakpoints)) {
    heap.push_back(expand(envelope, lo, hi));
    evaluations_ += kOrder;
  }
  std::make_heap(heap.begin(), heap.end());

  double error = 0.0;
  double l1 = 0.0;
  auto resum = [&] {
    error = 0.0;
    l1 = 0.0;
    for (const auto* group : {&heap, &frozen}) {
      for (const Candidate& c : *group) {
        error += c.error;
        l1 += c.resabs;
      }
    }
  };
  auto target = [&] { return std::max(cfg.rel_tol * l1, cfg.abs_tol); };

  resum();
  std::size_t splits = 0;
  while (!heap.empty() && splits < cfg.max_subdivisions) {
    if (error <= target()) {
      resum();
      if (error <= target()) break;
    }
    std::pop_heap(heap.begin(), heap.end());
    const Candidate worst = heap.back();
    heap.pop_back();
    if (!detail::splittable(worst.lo, worst.hi)) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    Candidate left = expand(envelope, worst.lo, mid);
    Candidate right = expand(envelope, mid, worst.hi);
    evaluations_ += 2 * kOrder;
    ++splits;
    error += left.error + right.error - worst.error;
    l1 += left.resabs + right.resabs - worst.resabs;
    heap.push_back(std::move(left));
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(std::move(right));
    std::push_heap(heap.begin(), heap.end());
  }
  resum();

  frozen.insert(frozen.end(), heap.begin(), heap.end());
  std::sort(frozen.begin(), frozen.end(), [](const Candidate& x, const Candidate& y) { return x.lo < y.lo; });
  panels_.reserve(frozen.size());
  for (const Candidate& c : frozen) {
    panels_.push_back(Panel{0.5 * (c.lo + c.hi), 0.5 * (c.hi - c.lo), c.coeffs});
  }
  error_ = error;
  l1_ = l1;
  if (!(error <= target())) {
    double value = 0.0;
    for (const Panel& p : panels_) value += 2.0 * p.half_width * p.coeffs[0];
    throw ToleranceNotMet("integrate_oscillatory: tolerance not met after " + std::to_string(splits) +
                              " subdivisions (error bound " + detail::sci(error) + ")",
                          value, error);
  }
}

std::complex<double> OscillatoryIntegral::transform(double omega) const {
  std::array<double, kOrder> jn{};
  double re = 0.0;
  double im = 0.0;
  for (const Panel& p : panels_) {
    spherical_bessel_j(std::abs(omega * p.half_width), jn);
    // \int_{-1}^{1} P_n(x) e^{i kappa x} dx = 2 i^n j_n(kappa); j_n(-x) = (-1)^n j_n(x).
    const double sign = omega < 0.0 ? -1.0 : 1.0;
    double even = 0.0;
    double odd = 0.0;
    for (int n = 0; n < kOrder; n += 2) {
      const double term = 2.0 * jn[n] * p.coeffs[n];
      even += (n / 2) % 2 == 0 ? term : -term;
    }
    for (int n = 1; n < kOrder; n += 2) {
      const double term = 2.0 * jn[n] * p.coeffs[n];
      odd += ((n - 1) / 2) % 2 == 0 ? term : -term;
    }
    odd *= sign;
    const double phase = omega * p.mid;
    const double c = std::cos(phase);
    const double s = std::sin(phase);
    re += p.half_width * (c * even - s * odd);
    im += p.half_width * (s * even + c * odd);
  }
  return {re, im};
}

QuadratureResult OscillatoryIntegral::cosine(double omega) const {
  return QuadratureResult{transform(omega).real(), error_, evaluations_};
}

QuadratureResult integrate_oscillatory(const Integrand& envelope, double omega, double a, double b,
                                       const QuadratureConfig& cfg) {
  return OscillatoryIntegral(envelope, a, b, cfg).cosine(omega);
}

}  // namespace qilab
