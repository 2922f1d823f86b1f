#pragma once

#include <complex>
#include <string_view>
#include <variant>

namespace qilab {

/// Two-sided exponential weight: A e^{lambda1 t} for t < 0, A e^{-lambda2 t} for t >= 0,
/// with A = lambda1 lambda2 / (lambda1 + lambda2) fixed by unit normalization.
class TwoSidedExponential {
 public:
  TwoSidedExponential(double lambda1, double lambda2);

  double lambda1() const noexcept { return lambda1_; }
  double lambda2() const noexcept { return lambda2_; }
  double amplitude() const noexcept { return lambda1_ * lambda2_ / (lambda1_ + lambda2_); }

  bool operator==(const TwoSidedExponential&) const = default;

 private:
  double lambda1_;
  double lambda2_;
};

/// s(t) = t0 / (pi (t^2 + t0^2)).
class Lorentzian {
 public:
  explicit Lorentzian(double t0);
  double t0() const noexcept { return t0_; }
  bool operator==(const Lorentzian&) const = default;

 private:
  double t0_;
};

/// s(t) = exp(-t^2 / 2 tau^2) / (tau sqrt(2 pi)).
class Gaussian {
 public:
  explicit Gaussian(double tau);
  double tau() const noexcept { return tau_; }
  bool operator==(const Gaussian&) const = default;

 private:
  double tau_;
};

using SamplingFunction = std::variant<TwoSidedExponential, Lorentzian, Gaussian>;

double sampler_eval(const SamplingFunction& s, double t);

/// Fourier transform s^(omega) = \int s(t) e^{-i omega t} dt, in closed form.
std::complex<double> sampler_transform(const SamplingFunction& s, double omega);

/// Re s^(omega). For the two-sided exponential this is
/// A (lambda1 / (lambda1^2 + omega^2) + lambda2 / (lambda2^2 + omega^2)).
double sampler_transform_real(const SamplingFunction& s, double omega);

/// Mass of s outside [-window, window].
double sampler_tail_mass(const SamplingFunction& s, double window);

/// Smallest |t| beyond which s(t) <= level (s is even-peaked and monotone in |t| on each side).
double sampler_support_radius(const SamplingFunction& s, double level);

std::string_view sampler_kind(const SamplingFunction& s);

}  // namespace qilab
