#pragma once

#include <Eigen/Dense>
#include <utility>

namespace qilab {

/// Dense operator on the single-mode Fock space truncated to levels |0>..|N-1>.
struct FockOperator {
  Eigen::MatrixXcd matrix;

  int dim() const noexcept { return static_cast<int>(matrix.rows()); }
  FockOperator adjoint() const { return {matrix.adjoint()}; }
};

/// Annihilation a (a[n-1, n] = sqrt(n)) and creation a^dagger. Throws DimensionTooSmall for N < 2.
std::pair<FockOperator, FockOperator> build_ladder(int dim);

/// C = (f/2)(a^dagger a^dagger - a a); anti-Hermitian on the truncated space.
FockOperator build_squeeze_generator(double f, int dim);

/// exp(M) by scaling and squaring with a Taylor kernel. Throws ConvergenceFailure unless
/// ||exp(M) exp(-M) - I||_1 <= 1e-10.
FockOperator matrix_exp(const FockOperator& m);

/// [x, y] = xy - yx.
FockOperator commutator(const FockOperator& x, const FockOperator& y);

/// True when (tanh|f|)^N < 1e-12, i.e. the squeezed vacuum leaks negligibly past level N.
bool truncation_admissible(double f, int dim);

struct BogoliubovExpectations {
  double n_expect = 0.0;   // <Omega| a^dagger a |Omega>
  double aa_expect = 0.0;  // Re <Omega| a a |Omega>
  double aa_imag = 0.0;    // Im <Omega| a a |Omega>, zero up to rounding
  double norm = 1.0;       // <Omega|Omega>
};

/// Builds |Omega> = exp(C)|0> and measures the pair expectations. Analytically
/// n_expect = sinh^2 f and aa_expect = cosh f sinh f. Throws TruncationError when
/// truncation_admissible(f, N) fails.
BogoliubovExpectations bogoliubov_expectations(double f, int dim);

}  // namespace qilab
