#pragma once

#include <cstddef>
#include <vector>

#include "cframe/dense.hpp"

namespace cframe {

/// Default tolerances, all relative to the norm of the object under test.
inline constexpr double kHermitianTol = 1e-9;
inline constexpr double kEigenTol = 1e-10;
inline constexpr double kPositivityTol = 1e-9;

/// Block dimensions (n_1, ..., n_k) of A = M_{n_1}(C) + ... + M_{n_k}(C).
/// A commutative algebra C(X) sampled at m points is m blocks of size 1.
class AlgebraSpec {
 public:
  explicit AlgebraSpec(std::vector<std::size_t> blocks);

  static AlgebraSpec commutative(std::size_t points);

  const std::vector<std::size_t>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  std::size_t block_dim(std::size_t i) const { return blocks_.at(i); }
  /// Dimension of the faithful representation, sum of n_i.
  std::size_t dimension() const noexcept;
  bool is_commutative() const noexcept;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;

 private:
  std::vector<std::size_t> blocks_;
};

void require_same_spec(const AlgebraSpec& a, const AlgebraSpec& b);

class AlgebraElement {
 public:
  AlgebraElement(AlgebraSpec spec, std::vector<CMatrix> blocks);

  static AlgebraElement zero(const AlgebraSpec& spec);
  static AlgebraElement identity(const AlgebraSpec& spec);
  static AlgebraElement scalar(const AlgebraSpec& spec, Complex value);

  const AlgebraSpec& spec() const noexcept { return spec_; }
  const CMatrix& block(std::size_t i) const { return blocks_.at(i); }
  const std::vector<CMatrix>& blocks() const noexcept { return blocks_; }

  AlgebraElement adjoint() const;

  /// Largest entry modulus over all blocks; a cheap size measure.
  double max_abs() const;

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  AlgebraElement& operator*=(Complex s);

 private:
  AlgebraSpec spec_;
  std::vector<CMatrix> blocks_;
};

AlgebraElement operator+(AlgebraElement lhs, const AlgebraElement& rhs);
AlgebraElement operator-(AlgebraElement lhs, const AlgebraElement& rhs);
AlgebraElement operator*(const AlgebraElement& lhs, const AlgebraElement& rhs);
AlgebraElement operator*(Complex s, AlgebraElement a);

enum class ArithmeticKind { add, sub, mul, adjoint, scalar };

/// Single entry point for the elementwise operations. `b` is ignored for
/// adjoint and scalar; `lambda` is used only by scalar.
AlgebraElement element_arithmetic(const AlgebraElement& a, const AlgebraElement& b,
                                  ArithmeticKind kind, Complex lambda = 1.0);

/// C*-norm: the largest singular value over all blocks.
double operator_norm(const AlgebraElement& a);

struct SelfAdjointSpectrum {
  std::vector<std::vector<double>> eigenvalues;  // per block, ascending
  std::vector<CMatrix> eigenvectors;             // per block, unitary

  double min() const;
  double max() const;
  AlgebraElement reconstruct(const AlgebraSpec& spec) const;
};

/// Throws NotSelfAdjoint when ||a - a*|| > kHermitianTol * ||a||.
SelfAdjointSpectrum hermitian_eigen(const AlgebraElement& a);

bool is_positive(const AlgebraElement& a, double tol = kPositivityTol);

enum class SpectralFunction {
  sqrt,
  inv,
  inv_sqrt,
  support_projection,
  /// Pseudo-inverse: eigenvalues above the cutoff are inverted, the rest map to 0.
  pinv,
  /// Pseudo-inverse square root, same convention as pinv.
  pinv_sqrt,
};

/// Continuous functional calculus through the eigen decomposition. The
/// cutoff is absolute. inv and inv_sqrt throw SingularBelowCutoff when some
/// eigenvalue is not above it; every function requires a positive argument.
AlgebraElement functional_calculus(const AlgebraElement& a, SpectralFunction fn, double cutoff);

}  // namespace cframe
