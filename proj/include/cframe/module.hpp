#pragma once

#include <cstddef>
#include <vector>

#include "cframe/algebra.hpp"

namespace cframe {

inline constexpr double kProjectionTol = 1e-9;
inline constexpr double kMembershipTol = 1e-9;

class ModuleOperator;

/// Row vector (a_1, ..., a_N) in the free module A^N.
///
/// Storage is per algebra block: block i is an n_i x (N n_i) complex matrix
/// whose k-th n_i x n_i slice is block i of a_k. Left multiplication by an
/// algebra element and right multiplication by an operator matrix are then
/// plain block products.
class ModuleElement {
 public:
  ModuleElement(AlgebraSpec spec, std::size_t length, std::vector<CMatrix> blocks);

  static ModuleElement zero(const AlgebraSpec& spec, std::size_t length);
  static ModuleElement from_entries(const AlgebraSpec& spec, const std::vector<AlgebraElement>& entries);
  /// Unit tuple with 1_A at position `index`.
  static ModuleElement unit(const AlgebraSpec& spec, std::size_t length, std::size_t index);

  const AlgebraSpec& spec() const noexcept { return spec_; }
  std::size_t length() const noexcept { return length_; }
  const CMatrix& block(std::size_t i) const { return blocks_.at(i); }
  const std::vector<CMatrix>& blocks() const noexcept { return blocks_; }

  AlgebraElement entry(std::size_t k) const;
  std::vector<AlgebraElement> entries() const;

  ModuleOperator as_row_operator() const;

  ModuleElement& operator+=(const ModuleElement& rhs);
  ModuleElement& operator-=(const ModuleElement& rhs);
  ModuleElement& operator*=(Complex s);

 private:
  AlgebraSpec spec_;
  std::size_t length_;
  std::vector<CMatrix> blocks_;
};

ModuleElement operator+(ModuleElement lhs, const ModuleElement& rhs);
ModuleElement operator-(ModuleElement lhs, const ModuleElement& rhs);
ModuleElement operator*(Complex s, ModuleElement x);
/// Left module action a·x.
ModuleElement operator*(const AlgebraElement& a, const ModuleElement& x);

/// N x M matrix over A; acts on row vectors from the right, x -> x·T, giving
/// an adjointable A-linear map A^N -> A^M. Block i of the storage is the
/// (N n_i) x (M n_i) complex matrix assembled from block i of every entry,
/// so a square operator is literally an element of M_N(A) = sum M_{N n_i}(C).
class ModuleOperator {
 public:
  ModuleOperator(AlgebraSpec spec, std::size_t rows, std::size_t cols, std::vector<CMatrix> blocks);

  static ModuleOperator zero(const AlgebraSpec& spec, std::size_t rows, std::size_t cols);
  static ModuleOperator identity(const AlgebraSpec& spec, std::size_t n);
  static ModuleOperator diagonal(const AlgebraSpec& spec, const std::vector<AlgebraElement>& diag);
  static ModuleOperator from_entries(const AlgebraSpec& spec,
                                     const std::vector<std::vector<AlgebraElement>>& entries);
  /// Stacks row vectors of equal length into a |rows| x N operator.
  static ModuleOperator from_rows(const AlgebraSpec& spec, std::size_t length,
                                  const std::vector<ModuleElement>& rows);
  /// Reads a square operator back from its amplified algebra element.
  static ModuleOperator from_algebra_element(const AlgebraElement& amplified, const AlgebraSpec& spec,
                                             std::size_t n);

  const AlgebraSpec& spec() const noexcept { return spec_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const CMatrix& block(std::size_t i) const { return blocks_.at(i); }
  const std::vector<CMatrix>& blocks() const noexcept { return blocks_; }

  AlgebraElement entry(std::size_t r, std::size_t c) const;
  ModuleElement row(std::size_t r) const;

  ModuleOperator adjoint() const;
  /// The same operator viewed as an element of M_N(A), over blocks (N n_i).
  AlgebraElement as_algebra_element() const;
  /// Operator norm of the represented map.
  double norm() const;

  ModuleOperator& operator+=(const ModuleOperator& rhs);
  ModuleOperator& operator-=(const ModuleOperator& rhs);
  ModuleOperator& operator*=(Complex s);

 private:
  AlgebraSpec spec_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<CMatrix> blocks_;
};

ModuleOperator operator+(ModuleOperator lhs, const ModuleOperator& rhs);
ModuleOperator operator-(ModuleOperator lhs, const ModuleOperator& rhs);
ModuleOperator operator*(Complex s, ModuleOperator t);
/// Matrix product. Under the row-vector action, x·(S·T) applies S first.
ModuleOperator operator*(const ModuleOperator& lhs, const ModuleOperator& rhs);

/// <x, y> = sum_i x_i y_i*.
AlgebraElement inner_product(const ModuleElement& x, const ModuleElement& y);
/// ||x|| = ||<x, x>||^{1/2}.
double module_norm(const ModuleElement& x);

ModuleElement apply_operator(const ModuleOperator& t, const ModuleElement& x);
ModuleOperator operator_adjoint(const ModuleOperator& t);
bool operator_is_positive(const ModuleOperator& t, double tol = kPositivityTol);

/// H = P·A^N for an orthogonal projection P in M_N(A).
class ProjectiveModule {
 public:
  const AlgebraSpec& spec() const noexcept { return projection_.spec(); }
  std::size_t ambient_rank() const noexcept { return projection_.rows(); }
  const ModuleOperator& projection() const noexcept { return projection_; }

  bool contains(const ModuleElement& x, double tol = kMembershipTol) const;
  ModuleElement project(const ModuleElement& x) const;
  bool is_zero() const;

 private:
  friend ProjectiveModule make_projective_module(const ModuleOperator&, double);
  explicit ProjectiveModule(ModuleOperator p) : projection_(std::move(p)) {}

  ModuleOperator projection_;
};

/// Validates P = P* = P^2 relative to max(1, ||P||); throws NotAProjection
/// naming the larger residual.
ProjectiveModule make_projective_module(const ModuleOperator& p, double tol = kProjectionTol);
ProjectiveModule free_module(const AlgebraSpec& spec, std::size_t n);

/// e_1, ..., e_N of A^N.
std::vector<ModuleElement> orthonormal_basis(std::size_t n, const AlgebraSpec& spec);

}  // namespace cframe
