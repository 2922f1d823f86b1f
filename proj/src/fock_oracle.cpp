#include "qilab/fock_oracle.hpp"

#include <cmath>
#include <string>

#include "qilab/errors.hpp"

namespace qilab {

namespace {

double norm1(const Eigen::MatrixXcd& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); }

Eigen::MatrixXcd exp_kernel(const Eigen::MatrixXcd& m) {
  const Eigen::Index n = m.rows();
  const double nrm = norm1(m);
  int squarings = 0;
  if (nrm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
  const Eigen::MatrixXcd x = m / std::ldexp(1.0, squarings);

  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(n, n);
  for (int k = 1; k <= 40; ++k) {
    term = term * x / static_cast<double>(k);
    sum += term;
    if (norm1(term) <= 1e-18 * norm1(sum)) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

}  // namespace

std::pair<FockOperator, FockOperator> build_ladder(int dim) {
  if (dim < 2) throw DimensionTooSmall("fock dimension must be >= 2, got " + std::to_string(dim));
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return {FockOperator{a}, FockOperator{a.adjoint()}};
}

FockOperator build_squeeze_generator(double f, int dim) {
  const auto [a, ad] = build_ladder(dim);
  return FockOperator{0.5 * f * (ad.matrix * ad.matrix - a.matrix * a.matrix)};
}

FockOperator matrix_exp(const FockOperator& m) {
  if (!m.matrix.allFinite()) throw ConvergenceFailure("matrix_exp: non-finite entries");
  const Eigen::Index n = m.matrix.rows();
  Eigen::MatrixXcd e = exp_kernel(m.matrix);
  const Eigen::MatrixXcd inv = exp_kernel(-m.matrix);
  const double residual = norm1(e * inv - Eigen::MatrixXcd::Identity(n, n));
  if (!(residual <= 1e-10)) {
    throw ConvergenceFailure("matrix_exp: residual ||exp(M)exp(-M) - I|| = " + std::to_string(residual));
  }
  return FockOperator{std::move(e)};
}

FockOperator commutator(const FockOperator& x, const FockOperator& y) {
  return FockOperator{x.matrix * y.matrix - y.matrix * x.matrix};
}

bool truncation_admissible(double f, int dim) {
  return std::pow(std::tanh(std::abs(f)), dim) < 1e-12;
}

BogoliubovExpectations bogoliubov_expectations(double f, int dim) {
  if (dim < 2) throw DimensionTooSmall("fock dimension must be >= 2, got " + std::to_string(dim));
  if (!truncation_admissible(f, dim)) {
    throw TruncationError("squeeze f = " + std::to_string(f) + " leaks (tanh|f|)^N = " +
                          std::to_string(std::pow(std::tanh(std::abs(f)), dim)) +
                          " >= 1e-12 past N = " + std::to_string(dim));
  }
  const auto [a, ad] = build_ladder(dim);
  const FockOperator u = matrix_exp(build_squeeze_generator(f, dim));

  Eigen::VectorXcd vacuum = Eigen::VectorXcd::Zero(dim);
  vacuum(0) = 1.0;
  const Eigen::VectorXcd omega = u.matrix * vacuum;

  const Eigen::VectorXcd a_omega = a.matrix * omega;
  const std::complex<double> aa = omega.dot(a.matrix * a_omega);

  BogoliubovExpectations out;
  out.n_expect = a_omega.squaredNorm();
  out.aa_expect = aa.real();
  out.aa_imag = aa.imag();
  out.norm = omega.squaredNorm();
  return out;
}

}  // namespace qilab
