#include "cframe/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "cframe/error.hpp"

namespace cframe::oracle {

namespace {

constexpr int kMaxAttempts = 100;

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

CMatrix from_eigen(const Eigen::MatrixXcd& m) {
  CMatrix out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

CMatrix random_block(SplitMix64& rng, std::size_t rows, std::size_t cols) {
  CMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Complex(rng.symmetric(), rng.symmetric());
  return m;
}

Eigen::MatrixXcd range_basis(const Eigen::MatrixXcd& p) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (p + p.adjoint()));
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
    if (es.eigenvalues()(k) > 0.5) keep.push_back(k);
  Eigen::MatrixXcd q(p.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) q.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(keep[c]);
  return q;
}

std::size_t min_frame_size(const ModuleOperator& p) {
  std::size_t need = 0;
  for (std::size_t i = 0; i < p.blocks().size(); ++i) {
    const auto rank = static_cast<std::size_t>(std::llround(to_eigen(p.block(i)).trace().real()));
    const auto n = p.spec().block_dim(i);
    need = std::max(need, (rank + n - 1) / n);
  }
  return need;
}

}  // namespace

Eigen::MatrixXcd represent(const AlgebraElement& a) {
  const auto d = static_cast<Eigen::Index>(a.spec().dimension());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  Eigen::Index off = 0;
  for (const auto& b : a.blocks()) {
    const auto n = static_cast<Eigen::Index>(b.rows());
    out.block(off, off, n, n) = to_eigen(b);
    off += n;
  }
  return out;
}

Eigen::MatrixXcd represent(const ModuleOperator& t) {
  const auto d = static_cast<Eigen::Index>(t.spec().dimension());
  Eigen::MatrixXcd out(d * static_cast<Eigen::Index>(t.rows()), d * static_cast<Eigen::Index>(t.cols()));
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t c = 0; c < t.cols(); ++c)
      out.block(static_cast<Eigen::Index>(r) * d, static_cast<Eigen::Index>(c) * d, d, d) = represent(t.entry(r, c));
  return out;
}

Eigen::MatrixXcd represent(const ModuleElement& x) {
  const auto d = static_cast<Eigen::Index>(x.spec().dimension());
  Eigen::MatrixXcd out(d, d * static_cast<Eigen::Index>(x.length()));
  for (std::size_t k = 0; k < x.length(); ++k) out.block(0, static_cast<Eigen::Index>(k) * d, d, d) = represent(x.entry(k));
  return out;
}

FrameBounds brute_force_bounds(const ModuleFrame& frame) {
  if (frame.size() == 0) throw Error(ErrorKind::EmptyFrame, "frame has no elements");
  const Eigen::MatrixXcd p = represent(frame.module().projection());
  const Eigen::MatrixXcd q = range_basis(p);
  if (q.cols() == 0) return {0.0, 0.0};
  // rep(G) = sum_j rep(x_j)* rep(x_j), built directly from the elements.
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(p.rows(), p.cols());
  for (const auto& x : frame.elements()) {
    const Eigen::MatrixXcd rx = represent(x);
    g += rx.adjoint() * rx;
  }
  const Eigen::MatrixXcd pgp = p * g * p;
  const Eigen::MatrixXcd restricted = q.adjoint() * pgp * q;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (restricted + restricted.adjoint()), Eigen::EigenvaluesOnly);
  FrameBounds b{es.eigenvalues().minCoeff(), std::max(0.0, es.eigenvalues().maxCoeff())};
  if (b.upper <= 0.0 || b.lower < kPseudoInverseCutoff * b.upper) b.lower = 0.0;
  return b;
}

double min_eigenvalue(const AlgebraElement& a) {
  const Eigen::MatrixXcd r = represent(a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (r + r.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

AlgebraSpec random_spec(SplitMix64& rng, std::size_t max_blocks, std::size_t max_block_dim) {
  const std::size_t k = 1 + rng.below(max_blocks);
  std::vector<std::size_t> blocks;
  for (std::size_t i = 0; i < k; ++i) blocks.push_back(1 + rng.below(max_block_dim));
  return AlgebraSpec(std::move(blocks));
}

AlgebraElement random_element(SplitMix64& rng, const AlgebraSpec& spec) {
  std::vector<CMatrix> blocks;
  for (auto n : spec.blocks()) blocks.push_back(random_block(rng, n, n));
  return AlgebraElement(spec, std::move(blocks));
}

AlgebraElement random_positive_element(SplitMix64& rng, const AlgebraSpec& spec) {
  const auto a = random_element(rng, spec);
  return a * a.adjoint();
}

ModuleElement random_module_element(SplitMix64& rng, const AlgebraSpec& spec, std::size_t length) {
  std::vector<CMatrix> blocks;
  for (auto n : spec.blocks()) blocks.push_back(random_block(rng, n, length * n));
  return ModuleElement(spec, length, std::move(blocks));
}

ModuleOperator random_operator(SplitMix64& rng, const AlgebraSpec& spec, std::size_t rows, std::size_t cols) {
  std::vector<CMatrix> blocks;
  for (auto n : spec.blocks()) blocks.push_back(random_block(rng, rows * n, cols * n));
  return ModuleOperator(spec, rows, cols, std::move(blocks));
}

ModuleOperator random_projection(SplitMix64& rng, const AlgebraSpec& spec, std::size_t n) {
  std::vector<CMatrix> blocks;
  for (auto bn : spec.blocks()) {
    const Eigen::MatrixXcd h0 = to_eigen(random_block(rng, n * bn, n * bn));
    const Eigen::MatrixXcd h = 0.5 * (h0 + h0.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXd rounded = (es.eigenvalues().array() > 0.5).cast<double>();
    const Eigen::MatrixXcd p = es.eigenvectors() * rounded.cast<std::complex<double>>().asDiagonal() *
                               es.eigenvectors().adjoint();
    blocks.push_back(from_eigen(0.5 * (p + p.adjoint())));
  }
  return ModuleOperator(spec, n, n, std::move(blocks));
}

ModuleElement random_module_vector(SplitMix64& rng, const ProjectiveModule& module) {
  return module.project(random_module_element(rng, module.spec(), module.ambient_rank()));
}

ModuleFrame random_frame(SplitMix64& rng, const ProjectiveModule& module, std::size_t size) {
  std::vector<ModuleElement> xs;
  for (std::size_t j = 0; j < size; ++j) xs.push_back(random_module_vector(rng, module));
  return ModuleFrame(module, std::move(xs));
}

Instance random_instance(std::uint64_t seed, const Limits& limits) {
  if (limits.max_blocks == 0 || limits.max_block_dim == 0 || limits.max_rank == 0 || limits.max_frame_size == 0) {
    throw Error(ErrorKind::ShapeMismatch, "limits must be positive");
  }
  SplitMix64 rng{seed};
  const auto spec = random_spec(rng, limits.max_blocks, limits.max_block_dim);
  const std::size_t n = 1 + rng.below(limits.max_rank);

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const auto p = random_projection(rng, spec, n);
    const auto module = make_projective_module(p);
    const std::size_t need = min_frame_size(p);
    if (module.is_zero() || need > limits.max_frame_size) continue;

    const std::size_t lo = std::max(need, std::min<std::size_t>(2, limits.max_frame_size));
    const std::size_t size = lo + rng.below(limits.max_frame_size - lo + 1);
    for (int draw = 0; draw < kMaxAttempts; ++draw) {
      auto frame = random_frame(rng, module, size);
      if (brute_force_bounds(frame).lower > 0.01) return {spec, module, std::move(frame)};
    }
    break;
  }
  throw Error(ErrorKind::DegenerateInstance, "no usable instance for seed " + std::to_string(seed));
}

}  // namespace cframe::oracle
