#pragma once

#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

#include "cframe/frame.hpp"
#include "cframe/random.hpp"

namespace cframe::oracle {

/// Faithful representation on C^d, d = sum n_i. Elements are block
/// diagonal; an N x M operator is the (N d) x (M d) matrix of represented
/// entries; a module element is the d x (N d) row of represented entries.
Eigen::MatrixXcd represent(const AlgebraElement& a);
Eigen::MatrixXcd represent(const ModuleOperator& t);
Eigen::MatrixXcd represent(const ModuleElement& x);

/// Frame bounds from the spectrum of rep(G) on range(rep(P)), computed with
/// Eigen independently of the library's Jacobi solver. Same lower-bound
/// cutoff convention as frame_bounds.
FrameBounds brute_force_bounds(const ModuleFrame& frame);

/// Smallest eigenvalue of rep(a) for self-adjoint a.
double min_eigenvalue(const AlgebraElement& a);

struct Limits {
  std::size_t max_blocks = 3;
  std::size_t max_block_dim = 3;
  std::size_t max_rank = 4;
  std::size_t max_frame_size = 6;
};

struct Instance {
  AlgebraSpec spec;
  ProjectiveModule module;
  ModuleFrame frame;
};

/// Deterministic random frame. The projection is a random Hermitian matrix
/// with its eigenvalues rounded at 1/2, redrawn when zero or when it needs
/// more elements than the limit allows; elements are redrawn until the
/// lower bound exceeds 0.01. Throws DegenerateInstance after 100 attempts.
Instance random_instance(std::uint64_t seed, const Limits& limits);

AlgebraSpec random_spec(SplitMix64& rng, std::size_t max_blocks, std::size_t max_block_dim);
AlgebraElement random_element(SplitMix64& rng, const AlgebraSpec& spec);
AlgebraElement random_positive_element(SplitMix64& rng, const AlgebraSpec& spec);
ModuleElement random_module_element(SplitMix64& rng, const AlgebraSpec& spec, std::size_t length);
ModuleOperator random_operator(SplitMix64& rng, const AlgebraSpec& spec, std::size_t rows, std::size_t cols);
/// Random orthogonal projection in M_n(A); may be zero.
ModuleOperator random_projection(SplitMix64& rng, const AlgebraSpec& spec, std::size_t n);
/// Random element projected into the module.
ModuleElement random_module_vector(SplitMix64& rng, const ProjectiveModule& module);
/// `size` random elements of the module; a frame only when size is large enough.
ModuleFrame random_frame(SplitMix64& rng, const ProjectiveModule& module, std::size_t size);

}  // namespace cframe::oracle
