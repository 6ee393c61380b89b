#pragma once

#include <cstddef>
#include <vector>

#include "cframe/module.hpp"

namespace cframe {

/// Default tolerance for classification flags and dual-pair checks.
inline constexpr double kFrameTol = 1e-9;
/// Spectral pseudo-inverse cutoff, relative to ||G||.
inline constexpr double kPseudoInverseCutoff = 1e-10;

/// Finite family {x_j} inside a projective module.
class ModuleFrame {
 public:
  /// Throws ElementOutsideModule if some x_j is not fixed by the projection.
  ModuleFrame(ProjectiveModule module, std::vector<ModuleElement> elements, double tol = kMembershipTol);

  const ProjectiveModule& module() const noexcept { return module_; }
  const AlgebraSpec& spec() const noexcept { return module_.spec(); }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t ambient_rank() const noexcept { return module_.ambient_rank(); }
  const ModuleElement& element(std::size_t j) const { return elements_.at(j); }
  const std::vector<ModuleElement>& elements() const noexcept { return elements_; }

  /// |J| x N operator whose j-th row is x_j; coefficients a -> a·X synthesize.
  ModuleOperator synthesis_matrix() const;
  /// G = X*X, the matrix of theta* theta on A^N (zero off the module).
  ModuleOperator gram_operator() const;

 private:
  ProjectiveModule module_;
  std::vector<ModuleElement> elements_;
};

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

struct FrameAnalysis {
  FrameBounds bounds;
  /// Zero module: every inequality holds trivially and bounds are reported as (0, 0).
  bool is_vacuous = false;
  bool is_frame = false;
  bool is_tight = false;
  bool is_normalized_tight = false;
  bool is_orthogonal = false;
  bool inner_products_are_projections = false;
  bool is_riesz_basis = false;
  bool is_orthonormal_basis = false;
};

/// Optimal constants in the order of A: the extreme eigenvalues of G
/// restricted to the range of P. The lower bound is reported as 0 when some
/// module direction falls below the pseudo-inverse cutoff.
FrameBounds frame_bounds(const ModuleFrame& frame);

FrameAnalysis classify_frame(const ModuleFrame& frame, double tol = kFrameTol);

/// Analysis operator theta (N x |J|, entries ((x_j)_i)*), G = theta* theta
/// and its pseudo-inverse S on the module, all computed on construction.
class FrameTransform {
 public:
  explicit FrameTransform(const ModuleFrame& frame);

  const ModuleOperator& theta() const noexcept { return theta_; }
  const ModuleOperator& gram_operator() const noexcept { return gram_; }
  const ModuleOperator& frame_operator() const noexcept { return frame_operator_; }
  const ModuleOperator& projection() const noexcept { return projection_; }
  std::size_t size() const noexcept { return theta_.cols(); }

  /// theta(x) = (<x, x_j>)_j.
  ModuleElement analyze(const ModuleElement& x) const;

 private:
  ModuleOperator theta_;
  ModuleOperator gram_;
  ModuleOperator frame_operator_;
  ModuleOperator projection_;
};

/// Throws NotAFrame unless the lower bound is positive (or the module is zero).
FrameTransform frame_transform(const ModuleFrame& frame);

/// theta*(a) = sum_j a_j x_j.
ModuleElement synthesis(const FrameTransform& transform, const ModuleElement& coeffs);

/// {S(x_j)}.
ModuleFrame canonical_dual(const ModuleFrame& frame);

struct Reconstruction {
  ModuleElement estimate;
  double error;
};

/// x_hat = sum_j <x, dual_j> x_j and error = ||x - x_hat||.
Reconstruction reconstruct(const ModuleFrame& frame, const ModuleFrame& dual, const ModuleElement& x);

/// {G^{-1/2}(x_j)}, a normalized tight frame of the same module.
ModuleFrame tighten(const ModuleFrame& frame);

/// ||theta_g* theta_f - P|| <= tol.
bool is_dual_pair(const ModuleFrame& f, const ModuleFrame& g, double tol = kFrameTol);

/// sum_j a_j a_j* - sum_j c_j c_j* with c_j = <x, S(x_j)>, for a decomposition
/// x = sum_j a_j x_j. Throws NotADecomposition if the synthesis misses x by
/// more than tol * max(1, ||x||).
AlgebraElement dual_optimality_gap(const ModuleFrame& frame, const ModuleElement& x,
                                   const ModuleElement& alt_coeffs, double tol = 1e-8);

/// Coefficients <x, S(x_j)> of the canonical decomposition.
ModuleElement canonical_coefficients(const ModuleFrame& frame, const ModuleElement& x);

/// Frame bounds with respect to <x, y>_W = <x·W, y>, W positive and
/// invertible on the module (it is compressed to P W P).
FrameBounds frame_bounds_under(const ModuleFrame& frame, const ModuleOperator& w);

/// Whether the normalized tight frame stays normalized tight under the
/// inner product defined by W. Since that forces W = P on the module, the
/// answer is true exactly when the two inner products coincide there.
bool inner_product_uniqueness_check(const ModuleFrame& frame, const ModuleOperator& w, double tol = kFrameTol);

/// Extreme eigenvalues of a self-adjoint operator restricted to range(P);
/// `empty` is set when P is zero.
struct RestrictedSpectrum {
  bool empty = true;
  double min = 0.0;
  double max = 0.0;
};
RestrictedSpectrum restricted_spectrum(const ModuleOperator& op, const ModuleOperator& projection);

}  // namespace cframe
