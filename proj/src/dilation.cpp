#include "cframe/dilation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cframe/error.hpp"

namespace cframe {

namespace {

ModuleOperator repair_projection(const ModuleOperator& p) {
  return ModuleOperator::from_algebra_element(
      functional_calculus(p.as_algebra_element(), SpectralFunction::support_projection, 0.5), p.spec(), p.rows());
}

std::vector<ModuleElement> rows_of(const ModuleOperator& t) {
  std::vector<ModuleElement> out;
  out.reserve(t.rows());
  for (std::size_t r = 0; r < t.rows(); ++r) out.push_back(t.row(r));
  return out;
}

void require_normalized_tight(const ModuleFrame& frame) {
  if (!classify_frame(frame).is_normalized_tight) {
    throw Error(ErrorKind::NotNormalizedTight, "frame is not normalized tight");
  }
}

double gram_residual(const ModuleFrame& f) {
  const auto x = f.synthesis_matrix();
  return (x * x.adjoint() - ModuleOperator::identity(f.spec(), f.size())).norm();
}

// Assembles the result once the embedded rows and the complement rows are known.
DilationResult assemble(const ModuleOperator& p, const ModuleOperator& embedded_rows,
                        const ModuleOperator& complement_rows) {
  const auto& spec = p.spec();
  const std::size_t n = p.rows();
  const auto id = ModuleOperator::identity(spec, n);
  auto ambient = make_projective_module(p);
  auto complement_module = make_projective_module(repair_projection(id - p));
  ModuleFrame embedded(ambient, rows_of(embedded_rows));
  ModuleFrame complement(complement_module, rows_of(complement_rows));
  ModuleFrame combined(free_module(spec, n), rows_of(embedded_rows + complement_rows));
  const double residual = gram_residual(combined);
  const auto bounds = frame_bounds(combined);
  return {std::move(ambient), std::move(embedded), std::move(complement), std::move(combined), residual, bounds};
}

}  // namespace

DilationResult complement_frame(const ModuleFrame& frame) {
  require_normalized_tight(frame);
  const auto x = frame.synthesis_matrix();
  const auto p = repair_projection(x * x.adjoint());
  const auto id = ModuleOperator::identity(frame.spec(), frame.size());
  auto result = assemble(p, p, id - p);
  if (result.gram_residual > kProjectionCompareTol) {
    throw Error(ErrorKind::IdentityFailed,
                "combined family is not orthonormal, residual " + std::to_string(result.gram_residual));
  }
  return result;
}

DilationResult riesz_dilation(const ModuleFrame& frame) {
  const auto bounds = frame_bounds(frame);
  if (frame.module().is_zero()) return complement_frame(frame);
  if (bounds.lower <= 0.0) throw Error(ErrorKind::NotAFrame, "lower frame bound is zero");

  const auto t = tighten(frame).synthesis_matrix();
  const auto p = repair_projection(t * t.adjoint());
  const auto id = ModuleOperator::identity(frame.spec(), frame.size());
  const double c = std::sqrt(std::clamp(1.0, bounds.lower, bounds.upper));
  auto result = assemble(p, frame.synthesis_matrix() * t.adjoint(), Complex(c) * (id - p));

  const double scale = std::max(1.0, bounds.upper);
  const bool same_bounds = std::abs(result.combined_bounds.lower - bounds.lower) <= kProjectionCompareTol * scale &&
                           std::abs(result.combined_bounds.upper - bounds.upper) <= kProjectionCompareTol * scale;
  if (!same_bounds || !classify_frame(result.combined).is_riesz_basis) {
    throw Error(ErrorKind::IdentityFailed, "dilated family is not a Riesz basis with the input bounds");
  }
  return result;
}

ModuleOperator similarity_projection(const ModuleFrame& frame) {
  const auto t = frame_transform(frame);
  const auto p = t.theta().adjoint() * t.frame_operator() * t.theta();
  return make_projective_module(p).projection();
}

bool are_equivalent(const ModuleFrame& f, const ModuleFrame& g, EquivalenceMode mode) {
  require_same_spec(f.spec(), g.spec());
  if (f.size() != g.size()) {
    throw Error(ErrorKind::LengthMismatch, "frames have " + std::to_string(f.size()) + " and " +
                                               std::to_string(g.size()) + " elements");
  }
  if (mode == EquivalenceMode::unitary) {
    require_normalized_tight(f);
    require_normalized_tight(g);
  }
  return (similarity_projection(f) - similarity_projection(g)).norm() <= kProjectionCompareTol;
}

std::pair<std::vector<ModuleElement>, std::vector<ModuleElement>> average_of_bases(const ModuleFrame& frame) {
  require_normalized_tight(frame);
  const auto x = frame.synthesis_matrix();
  const auto p = repair_projection(x * x.adjoint());
  const auto id = ModuleOperator::identity(frame.spec(), frame.size());
  return {rows_of(p + (id - p)), rows_of(Complex(2.0) * p - id)};
}

ModuleFrame compress_by_partial_isometry(const std::vector<ModuleElement>& basis, const ModuleOperator& v) {
  if (basis.empty()) throw Error(ErrorKind::EmptyFrame, "basis has no elements");
  const auto& spec = basis.front().spec();
  const std::size_t n = basis.front().length();
  require_same_spec(spec, v.spec());
  if (v.rows() != n) throw Error(ErrorKind::ShapeMismatch, "V must act on the basis module");

  const auto x = ModuleOperator::from_rows(spec, n, basis);
  const auto gram = x * x.adjoint();
  const auto diag = [&] {
    std::vector<AlgebraElement> d;
    for (std::size_t j = 0; j < basis.size(); ++j) d.push_back(gram.entry(j, j));
    return ModuleOperator::diagonal(spec, d);
  }();
  const double tol = kProjectionTol * std::max(1.0, gram.norm());
  if ((gram - diag).norm() > tol || (diag * diag - diag).norm() > tol) {
    throw Error(ErrorKind::NotOrthonormalBasis, "basis elements are not orthogonal with projection-valued inner products");
  }

  const auto initial = v * v.adjoint();
  const auto final_ = v.adjoint() * v;
  const double vtol = kProjectionTol * std::max(1.0, initial.norm());
  if ((initial * initial - initial).norm() > vtol || (final_ * final_ - final_).norm() > vtol) {
    throw Error(ErrorKind::NotAPartialIsometry, "V*V and VV* must be projections");
  }
  const auto h = x.adjoint() * x;
  if ((initial * h - initial).norm() > vtol) {
    throw Error(ErrorKind::NotAPartialIsometry, "initial space of V is not contained in the basis module");
  }

  std::vector<ModuleElement> images;
  images.reserve(basis.size());
  for (const auto& b : basis) images.push_back(apply_operator(v, b));
  return ModuleFrame(make_projective_module(repair_projection(final_)), std::move(images));
}

}  // namespace cframe
