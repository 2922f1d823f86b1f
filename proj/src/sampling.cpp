#include "qilab/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qilab/errors.hpp"

namespace qilab {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ConfigError(std::string(name) + ": must be finite and > 0, got " + std::to_string(v));
  }
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

TwoSidedExponential::TwoSidedExponential(double lambda1, double lambda2)
    : lambda1_(lambda1), lambda2_(lambda2) {
  require_positive(lambda1, "sampler.lambda1");
  require_positive(lambda2, "sampler.lambda2");
}

Lorentzian::Lorentzian(double t0) : t0_(t0) { require_positive(t0, "sampler.t0"); }

Gaussian::Gaussian(double tau) : tau_(tau) { require_positive(tau, "sampler.tau"); }

double sampler_eval(const SamplingFunction& s, double t) {
  using std::numbers::pi;
  return std::visit(
      overloaded{
          [t](const TwoSidedExponential& e) {
            const double a = e.amplitude();
            return t < 0.0 ? a * std::exp(e.lambda1() * t) : a * std::exp(-e.lambda2() * t);
          },
          [t](const Lorentzian& l) { return l.t0() / (pi * (t * t + l.t0() * l.t0())); },
          [t](const Gaussian& g) {
            const double x = t / g.tau();
            return std::exp(-0.5 * x * x) / (g.tau() * std::sqrt(2.0 * pi));
          },
      },
      s);
}

std::complex<double> sampler_transform(const SamplingFunction& s, double omega) {
  return std::visit(
      overloaded{
          [omega](const TwoSidedExponential& e) {
            using C = std::complex<double>;
            const double l1 = e.lambda1();
            const double l2 = e.lambda2();
            const double w2 = omega * omega;
            const C left = C(l1, omega) / (l1 * l1 + w2);
            const C right = C(l2, -omega) / (l2 * l2 + w2);
            return e.amplitude() * (left + right);
          },
          [omega](const Lorentzian& l) {
            return std::complex<double>(std::exp(-l.t0() * std::abs(omega)), 0.0);
          },
          [omega](const Gaussian& g) {
            const double x = omega * g.tau();
            return std::complex<double>(std::exp(-0.5 * x * x), 0.0);
          },
      },
      s);
}

double sampler_transform_real(const SamplingFunction& s, double omega) {
  if (const auto* e = std::get_if<TwoSidedExponential>(&s)) {
    const double l1 = e->lambda1();
    const double l2 = e->lambda2();
    const double w2 = omega * omega;
    return e->amplitude() * (l1 / (l1 * l1 + w2) + l2 / (l2 * l2 + w2));
  }
  return sampler_transform(s, omega).real();
}

double sampler_tail_mass(const SamplingFunction& s, double window) {
  using std::numbers::pi;
  if (window <= 0.0) return 1.0;
  return std::visit(
      overloaded{
          [window](const TwoSidedExponential& e) {
            const double a = e.amplitude();
            return a * (std::exp(-e.lambda1() * window) / e.lambda1() +
                        std::exp(-e.lambda2() * window) / e.lambda2());
          },
          [window](const Lorentzian& l) { return 2.0 / pi * std::atan(l.t0() / window); },
          [window](const Gaussian& g) { return std::erfc(window / (g.tau() * std::sqrt(2.0))); },
      },
      s);
}

double sampler_support_radius(const SamplingFunction& s, double level) {
  using std::numbers::pi;
  if (!(level > 0.0)) return std::numeric_limits<double>::infinity();
  return std::visit(
      overloaded{
          [level](const TwoSidedExponential& e) {
            const double a = e.amplitude();
            if (level >= a) return 0.0;
            const double lmin = std::min(e.lambda1(), e.lambda2());
            return std::log(a / level) / lmin;
          },
          [level](const Lorentzian& l) {
            const double peak = 1.0 / (pi * l.t0());
            if (level >= peak) return 0.0;
            return l.t0() * std::sqrt(peak / level - 1.0);
          },
          [level](const Gaussian& g) {
            const double peak = 1.0 / (g.tau() * std::sqrt(2.0 * pi));
            if (level >= peak) return 0.0;
            return g.tau() * std::sqrt(2.0 * std::log(peak / level));
          },
      },
      s);
}

std::string_view sampler_kind(const SamplingFunction& s) {
  return std::visit(overloaded{
                        [](const TwoSidedExponential&) { return std::string_view("two_sided_exponential"); },
                        [](const Lorentzian&) { return std::string_view("lorentzian"); },
                        [](const Gaussian&) { return std::string_view("gaussian"); },
                    },
                    s);
}

}  // namespace qilab
