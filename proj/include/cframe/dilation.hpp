#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cframe/frame.hpp"

namespace cframe {

/// Projections are isolated, so classes are compared with a loose tolerance.
inline constexpr double kProjectionCompareTol = 1e-8;

/// A frame of H transported into A^{|J|} and completed by a frame of the
/// complementary module.
struct DilationResult {
  /// P·A^{|J|}, where P is the range projection of the (tightened) transform.
  ProjectiveModule ambient;
  ModuleFrame embedded;
  /// Lives in (I - P)·A^{|J|}.
  ModuleFrame complement;
  /// x_j + y_j as a family of the free module A^{|J|}.
  ModuleFrame combined;
  /// ||Gram(combined) - I||; zero up to rounding for complement_frame.
  double gram_residual = 0.0;
  FrameBounds combined_bounds;
};

/// Normalized tight frames only. y_j = (I - P)(e_j) with P = theta theta*.
DilationResult complement_frame(const ModuleFrame& frame);

/// Any frame: x_j -> (x_j)·theta_t for the tightened frame t, plus a scaled
/// complement c·(I - P)(e_j). The combined family is a Riesz basis of
/// A^{|J|} with the same bounds as the input; c^2 is 1 clamped into [C, D].
DilationResult riesz_dilation(const ModuleFrame& frame);

/// theta S theta*, the range projection of the analysis map in A^{|J|}.
ModuleOperator similarity_projection(const ModuleFrame& frame);

enum class EquivalenceMode { unitary, similar };

bool are_equivalent(const ModuleFrame& f, const ModuleFrame& g, EquivalenceMode mode);

/// b1_j = P(e_j) + (I - P)(e_j) and b2_j = (2P - I)(e_j); their average is
/// theta(x_j).
std::pair<std::vector<ModuleElement>, std::vector<ModuleElement>> average_of_bases(const ModuleFrame& frame);

/// {V(b_j)} as a frame of V(H). The basis (of H inside A^N) must be
/// orthogonal with projection-valued inner products; V is N x M and must be
/// a partial isometry A^N -> A^M whose initial space sits inside H.
ModuleFrame compress_by_partial_isometry(const std::vector<ModuleElement>& basis, const ModuleOperator& v);

}  // namespace cframe
