#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cframe/frame.hpp"

namespace cframe {

/// Sum_j <x_j, x_j> for a normalized tight frame over a commutative algebra;
/// each component must be a non-negative integer (the pointwise rank).
std::vector<std::int64_t> magic_sum(const ModuleFrame& frame);

/// Sum_j <T(x_j), T(x_j)> with T compressed to the module, commutative A only.
AlgebraElement hs_sum(const ModuleOperator& t, const ModuleFrame& frame);

enum class ExpectationKind { normalized_trace, unnormalized_trace, diagonal };

/// E: M_n(C) -> A. The trace kinds map onto the scalars, diagonal onto the
/// diagonal subalgebra. Values are returned inside M_n(C).
class ConditionalExpectation {
 public:
  ConditionalExpectation(ExpectationKind kind, std::size_t n);

  ExpectationKind kind() const noexcept { return kind_; }
  std::size_t n() const noexcept { return n_; }

  CMatrix operator()(const CMatrix& x) const;
  /// Block structure of the range algebra: C for traces, C^n for diagonal.
  AlgebraSpec range_spec() const;
  /// E(x) as an element of the range algebra.
  AlgebraElement to_range(const CMatrix& x) const;

 private:
  ExpectationKind kind_;
  std::size_t n_;
};

/// x = sum_i u_i E(v_i x).
struct QuasiBasis {
  std::vector<CMatrix> u;
  std::vector<CMatrix> v;
};

/// Matrix units e_ij in row-major order (index i*n + j).
std::vector<CMatrix> matrix_units(std::size_t n);

/// Matrix units for diagonal and unnormalized trace, sqrt(n) e_ij for the
/// normalized trace; v_i = u_i*. Throws IdentityFailed if the identity fails
/// on a fixed random probe.
QuasiBasis quasi_basis(const ConditionalExpectation& e);

/// || x - sum_i u_i E(v_i x) ||, Frobenius.
double quasi_basis_residual(const ConditionalExpectation& e, const QuasiBasis& qb, const CMatrix& x);

/// M_n(C) as a Hilbert module over the range of E. It is encoded through
/// x -> x*, so that the right quasi-basis identity becomes a left
/// reconstruction: a·x = x a* and <x, y> = E(x* y). Diagonal E gives the
/// free module (C^n)^n with coordinate b at point k equal to conj(x_bk);
/// the trace kinds give C^{n^2}, scaled by n^{-1/2} for the normalized trace.
ModuleElement encode_expectation_element(const ConditionalExpectation& e, const CMatrix& x);

/// Any family of matrices as a frame of the encoded module.
ModuleFrame expectation_frame(const ConditionalExpectation& e, const std::vector<CMatrix>& family);

/// The quasi-basis u as a frame.
ModuleFrame expectation_module_frame(const ConditionalExpectation& e);

/// The dual family. Under the encoding the partner of u_i is v_i*.
ModuleFrame expectation_dual_frame(const ConditionalExpectation& e);

/// x_j(t) on (0, 1]:
///   x_1(t) = sqrt(2t - 1) on [1/2, 1],
///   x_j(t) = sqrt(j(j+1)t - j) on [1/(j+1), 1/j] and sqrt(-j(j-1)t + j) on [1/j, 1/(j-1)],
/// zero elsewhere. Sum_j x_j(t)^2 = 1 for every t > 0.
double interval_frame_value(std::size_t j, double t);

/// Smallest J covering every grid point, ceil(1 / min(grid)).
std::size_t required_interval_terms(const std::vector<double>& grid);

/// {x_1, ..., x_J} sampled on the grid, over C^{|grid|}. The grid must be
/// strictly increasing inside (0, 1] (GridOutOfRange) and J large enough
/// (InsufficientJ).
ModuleFrame sampled_interval_frame(const std::vector<double>& grid, std::size_t j);

}  // namespace cframe
