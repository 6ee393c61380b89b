#include "cframe/frame.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cframe/error.hpp"

namespace cframe {

namespace {

/// Orthonormal columns spanning the range of a (numerical) projection block.
CMatrix range_basis(const CMatrix& projection_block) {
  const auto eig = jacobi_eigen(projection_block);
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < eig.values.size(); ++k)
    if (eig.values[k] > 0.5) keep.push_back(k);
  CMatrix basis(projection_block.rows(), keep.size());
  for (std::size_t c = 0; c < keep.size(); ++c)
    for (std::size_t r = 0; r < basis.rows(); ++r) basis(r, c) = eig.vectors(r, keep[c]);
  return basis;
}

std::size_t numerical_rank(const CMatrix& m, double cutoff) {
  if (m.empty()) return 0;
  const CMatrix gram = m.rows() <= m.cols() ? m * m.adjoint() : m.adjoint() * m;
  const auto eig = jacobi_eigen(gram);
  return static_cast<std::size_t>(
      std::count_if(eig.values.begin(), eig.values.end(), [&](double v) { return v > cutoff; }));
}

ModuleOperator spectral_operator(const ModuleOperator& op, SpectralFunction fn, double cutoff) {
  return ModuleOperator::from_algebra_element(functional_calculus(op.as_algebra_element(), fn, cutoff), op.spec(),
                                              op.rows());
}

double gram_cutoff(const ModuleOperator& gram) { return kPseudoInverseCutoff * gram.norm(); }

void require_compatible(const ModuleFrame& f, const ModuleFrame& g) {
  require_same_spec(f.spec(), g.spec());
  if (f.size() != g.size() || f.ambient_rank() != g.ambient_rank()) {
    throw Error(ErrorKind::LengthMismatch, "frames differ in length or ambient rank");
  }
}

std::vector<ModuleElement> apply_to_all(const ModuleOperator& t, const std::vector<ModuleElement>& xs) {
  std::vector<ModuleElement> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(apply_operator(t, x));
  return out;
}

}  // namespace

// ------------------------------------------------------------------ frames

ModuleFrame::ModuleFrame(ProjectiveModule module, std::vector<ModuleElement> elements, double tol)
    : module_(std::move(module)), elements_(std::move(elements)) {
  for (std::size_t j = 0; j < elements_.size(); ++j) {
    const auto& x = elements_[j];
    require_same_spec(x.spec(), module_.spec());
    if (x.length() != module_.ambient_rank()) {
      throw Error(ErrorKind::ShapeMismatch, "element " + std::to_string(j) + " has length " +
                                                std::to_string(x.length()) + ", module rank is " +
                                                std::to_string(module_.ambient_rank()));
    }
    if (!module_.contains(x, tol)) {
      throw Error(ErrorKind::ElementOutsideModule, "element " + std::to_string(j) + " is not in the module");
    }
  }
}

ModuleOperator ModuleFrame::synthesis_matrix() const {
  return ModuleOperator::from_rows(spec(), ambient_rank(), elements_);
}

ModuleOperator ModuleFrame::gram_operator() const {
  const auto x = synthesis_matrix();
  return x.adjoint() * x;
}

RestrictedSpectrum restricted_spectrum(const ModuleOperator& op, const ModuleOperator& projection) {
  require_same_spec(op.spec(), projection.spec());
  RestrictedSpectrum out;
  out.min = std::numeric_limits<double>::infinity();
  out.max = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < op.blocks().size(); ++i) {
    const CMatrix basis = range_basis(projection.block(i));
    if (basis.cols() == 0) continue;
    const auto eig = jacobi_eigen(basis.adjoint() * op.block(i) * basis);
    out.empty = false;
    out.min = std::min(out.min, eig.values.front());
    out.max = std::max(out.max, eig.values.back());
  }
  if (out.empty) out.min = out.max = 0.0;
  return out;
}

FrameBounds frame_bounds(const ModuleFrame& frame) {
  if (frame.size() == 0) throw Error(ErrorKind::EmptyFrame, "frame has no elements");
  const auto spectrum = restricted_spectrum(frame.gram_operator(), frame.module().projection());
  if (spectrum.empty) return {0.0, 0.0};
  FrameBounds b{spectrum.min, std::max(0.0, spectrum.max)};
  if (b.upper <= 0.0 || b.lower < kPseudoInverseCutoff * b.upper) b.lower = 0.0;
  return b;
}

FrameAnalysis classify_frame(const ModuleFrame& frame, double tol) {
  FrameAnalysis a;
  a.bounds = frame_bounds(frame);
  if (frame.module().is_zero()) {
    a.is_vacuous = true;
    a.is_frame = a.is_tight = a.is_normalized_tight = true;
    a.is_orthogonal = a.inner_products_are_projections = true;
    a.is_riesz_basis = a.is_orthonormal_basis = true;
    return a;
  }
  const double c = a.bounds.lower;
  const double d = a.bounds.upper;
  a.is_frame = c > 0.0;
  a.is_tight = a.is_frame && std::abs(c - d) <= tol * d;
  a.is_normalized_tight = a.is_tight && std::abs(c - 1.0) <= tol && std::abs(d - 1.0) <= tol;

  const double scale = std::max(1.0, d);
  const auto& xs = frame.elements();
  a.is_orthogonal = true;
  for (std::size_t i = 0; i < xs.size() && a.is_orthogonal; ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (inner_product(xs[i], xs[j]).max_abs() > tol * scale && operator_norm(inner_product(xs[i], xs[j])) > tol * scale) {
        a.is_orthogonal = false;
        break;
      }

  a.inner_products_are_projections = true;
  for (const auto& x : xs) {
    const auto q = inner_product(x, x);
    const double qn = operator_norm(q);
    if (operator_norm(q * q - q) > tol * std::max(1.0, qn * qn)) {
      a.inner_products_are_projections = false;
      break;
    }
  }

  // Riesz: the kernel of the synthesis map must only contain coefficient
  // tuples with a_j x_j = 0 for every j. Both subspaces split over blocks and
  // rows, and the containment holds iff the row spaces of the x_j are
  // independent, i.e. rank(X_i) = sum_j rank(x_j,i) in every block.
  if (a.is_frame) {
    const double cutoff = kPseudoInverseCutoff * d;
    const auto x = frame.synthesis_matrix();
    a.is_riesz_basis = true;
    for (std::size_t i = 0; i < x.blocks().size() && a.is_riesz_basis; ++i) {
      std::size_t separate = 0;
      for (const auto& xj : xs) separate += numerical_rank(xj.block(i), cutoff);
      a.is_riesz_basis = numerical_rank(x.block(i), cutoff) == separate;
    }
  }
  a.is_orthonormal_basis = a.is_riesz_basis && a.is_normalized_tight;
  return a;
}

// --------------------------------------------------------------- transform

FrameTransform::FrameTransform(const ModuleFrame& frame)
    : theta_(frame.synthesis_matrix().adjoint()),
      gram_(theta_ * theta_.adjoint()),
      frame_operator_(spectral_operator(gram_, SpectralFunction::pinv, gram_cutoff(gram_))),
      projection_(frame.module().projection()) {}

ModuleElement FrameTransform::analyze(const ModuleElement& x) const { return apply_operator(theta_, x); }

FrameTransform frame_transform(const ModuleFrame& frame) {
  const auto b = frame_bounds(frame);
  if (b.lower <= 0.0 && !frame.module().is_zero()) {
    throw Error(ErrorKind::NotAFrame, "lower frame bound is zero (upper bound " + std::to_string(b.upper) + ")");
  }
  return FrameTransform(frame);
}

ModuleElement synthesis(const FrameTransform& transform, const ModuleElement& coeffs) {
  if (coeffs.length() != transform.size()) {
    throw Error(ErrorKind::ShapeMismatch, "coefficient tuple has length " + std::to_string(coeffs.length()) +
                                              ", frame has " + std::to_string(transform.size()) + " elements");
  }
  return apply_operator(transform.theta().adjoint(), coeffs);
}

ModuleFrame canonical_dual(const ModuleFrame& frame) {
  const auto t = frame_transform(frame);
  return ModuleFrame(frame.module(), apply_to_all(t.frame_operator(), frame.elements()));
}

Reconstruction reconstruct(const ModuleFrame& frame, const ModuleFrame& dual, const ModuleElement& x) {
  if (frame.size() != dual.size()) throw Error(ErrorKind::LengthMismatch, "frame and dual differ in length");
  require_same_spec(frame.spec(), dual.spec());
  auto estimate = ModuleElement::zero(frame.spec(), frame.ambient_rank());
  for (std::size_t j = 0; j < frame.size(); ++j) estimate += inner_product(x, dual.element(j)) * frame.element(j);
  const double error = module_norm(x - estimate);
  return {std::move(estimate), error};
}

ModuleFrame tighten(const ModuleFrame& frame) {
  const auto t = frame_transform(frame);
  const auto root = spectral_operator(t.gram_operator(), SpectralFunction::pinv_sqrt, gram_cutoff(t.gram_operator()));
  return ModuleFrame(frame.module(), apply_to_all(root, frame.elements()));
}

bool is_dual_pair(const ModuleFrame& f, const ModuleFrame& g, double tol) {
  require_compatible(f, g);
  const auto composite = f.synthesis_matrix().adjoint() * g.synthesis_matrix();
  return (composite - f.module().projection()).norm() <= tol;
}

ModuleElement canonical_coefficients(const ModuleFrame& frame, const ModuleElement& x) {
  const auto t = frame_transform(frame);
  return t.analyze(apply_operator(t.frame_operator(), x));
}

AlgebraElement dual_optimality_gap(const ModuleFrame& frame, const ModuleElement& x, const ModuleElement& alt_coeffs,
                                   double tol) {
  const auto t = frame_transform(frame);
  const double miss = module_norm(synthesis(t, alt_coeffs) - x);
  if (miss > tol * std::max(1.0, module_norm(x))) {
    throw Error(ErrorKind::NotADecomposition, "coefficients synthesize to an element " + std::to_string(miss) +
                                                  " away from x");
  }
  const auto canonical = t.analyze(apply_operator(t.frame_operator(), x));
  return inner_product(alt_coeffs, alt_coeffs) - inner_product(canonical, canonical);
}

FrameBounds frame_bounds_under(const ModuleFrame& frame, const ModuleOperator& w) {
  const auto& p = frame.module().projection();
  if (!w.is_square() || w.rows() != p.rows()) throw Error(ErrorKind::ShapeMismatch, "W must act on the ambient module");
  const auto compressed = p * w * p;
  const auto w_spectrum = restricted_spectrum(compressed, p);
  if (!w_spectrum.empty && w_spectrum.min <= kPseudoInverseCutoff * std::max(1.0, w_spectrum.max)) {
    throw Error(ErrorKind::NotPositive, "W is not invertible on the module");
  }
  const auto root = spectral_operator(compressed, SpectralFunction::sqrt, 0.0);
  const auto spectrum = restricted_spectrum(root * frame.gram_operator() * root, p);
  return {spectrum.min, spectrum.max};
}

bool inner_product_uniqueness_check(const ModuleFrame& frame, const ModuleOperator& w, double tol) {
  if (!classify_frame(frame, tol).is_normalized_tight) {
    throw Error(ErrorKind::NotNormalizedTight, "frame is not normalized tight for the module inner product");
  }
  const auto b = frame_bounds_under(frame, w);
  return std::abs(b.lower - 1.0) <= tol && std::abs(b.upper - 1.0) <= tol;
}

}  // namespace cframe
