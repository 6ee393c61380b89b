#include "cframe/module.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cframe/error.hpp"

namespace cframe {

namespace {

void require_block_shapes(const AlgebraSpec& spec, const std::vector<CMatrix>& blocks, std::size_t rows,
                          std::size_t cols) {
  if (blocks.size() != spec.block_count()) {
    throw Error(ErrorKind::SpecMismatch, "block count does not match the algebra");
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto n = spec.block_dim(i);
    if (blocks[i].rows() != rows * n || blocks[i].cols() != cols * n) {
      throw Error(ErrorKind::ShapeMismatch, "block " + std::to_string(i) + " has the wrong shape");
    }
  }
}

}  // namespace

// ---------------------------------------------------------------- elements

ModuleElement::ModuleElement(AlgebraSpec spec, std::size_t length, std::vector<CMatrix> blocks)
    : spec_(std::move(spec)), length_(length), blocks_(std::move(blocks)) {
  require_block_shapes(spec_, blocks_, 1, length_);
}

ModuleElement ModuleElement::zero(const AlgebraSpec& spec, std::size_t length) {
  std::vector<CMatrix> blocks;
  for (auto n : spec.blocks()) blocks.emplace_back(n, length * n);
  return ModuleElement(spec, length, std::move(blocks));
}

ModuleElement ModuleElement::from_entries(const AlgebraSpec& spec, const std::vector<AlgebraElement>& entries) {
  auto out = zero(spec, entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    require_same_spec(spec, entries[k].spec());
    for (std::size_t i = 0; i < spec.block_count(); ++i) {
      out.blocks_[i].set_block(0, k * spec.block_dim(i), entries[k].block(i));
    }
  }
  return out;
}

ModuleElement ModuleElement::unit(const AlgebraSpec& spec, std::size_t length, std::size_t index) {
  auto out = zero(spec, length);
  for (std::size_t i = 0; i < spec.block_count(); ++i) {
    const auto n = spec.block_dim(i);
    out.blocks_[i].set_block(0, index * n, CMatrix::identity(n));
  }
  return out;
}

AlgebraElement ModuleElement::entry(std::size_t k) const {
  if (k >= length_) throw Error(ErrorKind::ShapeMismatch, "entry index out of range");
  std::vector<CMatrix> blocks;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const auto n = spec_.block_dim(i);
    blocks.push_back(blocks_[i].block(0, k * n, n, n));
  }
  return AlgebraElement(spec_, std::move(blocks));
}

std::vector<AlgebraElement> ModuleElement::entries() const {
  std::vector<AlgebraElement> out;
  out.reserve(length_);
  for (std::size_t k = 0; k < length_; ++k) out.push_back(entry(k));
  return out;
}

ModuleOperator ModuleElement::as_row_operator() const { return ModuleOperator(spec_, 1, length_, blocks_); }

ModuleElement& ModuleElement::operator+=(const ModuleElement& rhs) {
  require_same_spec(spec_, rhs.spec_);
  if (length_ != rhs.length_) throw Error(ErrorKind::LengthMismatch, "module elements differ in length");
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] += rhs.blocks_[i];
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& rhs) {
  require_same_spec(spec_, rhs.spec_);
  if (length_ != rhs.length_) throw Error(ErrorKind::LengthMismatch, "module elements differ in length");
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] -= rhs.blocks_[i];
  return *this;
}

ModuleElement& ModuleElement::operator*=(Complex s) {
  for (auto& b : blocks_) b *= s;
  return *this;
}

ModuleElement operator+(ModuleElement lhs, const ModuleElement& rhs) { return lhs += rhs; }
ModuleElement operator-(ModuleElement lhs, const ModuleElement& rhs) { return lhs -= rhs; }
ModuleElement operator*(Complex s, ModuleElement x) { return x *= s; }

ModuleElement operator*(const AlgebraElement& a, const ModuleElement& x) {
  require_same_spec(a.spec(), x.spec());
  std::vector<CMatrix> blocks;
  blocks.reserve(x.blocks().size());
  for (std::size_t i = 0; i < x.blocks().size(); ++i) blocks.push_back(a.block(i) * x.block(i));
  return ModuleElement(x.spec(), x.length(), std::move(blocks));
}

// --------------------------------------------------------------- operators

ModuleOperator::ModuleOperator(AlgebraSpec spec, std::size_t rows, std::size_t cols, std::vector<CMatrix> blocks)
    : spec_(std::move(spec)), rows_(rows), cols_(cols), blocks_(std::move(blocks)) {
  require_block_shapes(spec_, blocks_, rows_, cols_);
}

ModuleOperator ModuleOperator::zero(const AlgebraSpec& spec, std::size_t rows, std::size_t cols) {
  std::vector<CMatrix> blocks;
  for (auto n : spec.blocks()) blocks.emplace_back(rows * n, cols * n);
  return ModuleOperator(spec, rows, cols, std::move(blocks));
}

ModuleOperator ModuleOperator::identity(const AlgebraSpec& spec, std::size_t n) {
  std::vector<CMatrix> blocks;
  for (auto d : spec.blocks()) blocks.push_back(CMatrix::identity(n * d));
  return ModuleOperator(spec, n, n, std::move(blocks));
}

ModuleOperator ModuleOperator::diagonal(const AlgebraSpec& spec, const std::vector<AlgebraElement>& diag) {
  auto out = zero(spec, diag.size(), diag.size());
  for (std::size_t k = 0; k < diag.size(); ++k) {
    require_same_spec(spec, diag[k].spec());
    for (std::size_t i = 0; i < spec.block_count(); ++i) {
      const auto n = spec.block_dim(i);
      out.blocks_[i].set_block(k * n, k * n, diag[k].block(i));
    }
  }
  return out;
}

ModuleOperator ModuleOperator::from_entries(const AlgebraSpec& spec,
                                            const std::vector<std::vector<AlgebraElement>>& entries) {
  const std::size_t rows = entries.size();
  const std::size_t cols = rows == 0 ? 0 : entries.front().size();
  auto out = zero(spec, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (entries[r].size() != cols) throw Error(ErrorKind::ShapeMismatch, "ragged operator literal");
    for (std::size_t c = 0; c < cols; ++c) {
      require_same_spec(spec, entries[r][c].spec());
      for (std::size_t i = 0; i < spec.block_count(); ++i) {
        const auto n = spec.block_dim(i);
        out.blocks_[i].set_block(r * n, c * n, entries[r][c].block(i));
      }
    }
  }
  return out;
}

ModuleOperator ModuleOperator::from_rows(const AlgebraSpec& spec, std::size_t length,
                                         const std::vector<ModuleElement>& rows) {
  auto out = zero(spec, rows.size(), length);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_spec(spec, rows[r].spec());
    if (rows[r].length() != length) throw Error(ErrorKind::LengthMismatch, "rows differ in length");
    for (std::size_t i = 0; i < spec.block_count(); ++i) {
      out.blocks_[i].set_block(r * spec.block_dim(i), 0, rows[r].block(i));
    }
  }
  return out;
}

ModuleOperator ModuleOperator::from_algebra_element(const AlgebraElement& amplified, const AlgebraSpec& spec,
                                                    std::size_t n) {
  if (amplified.spec().block_count() != spec.block_count()) {
    throw Error(ErrorKind::SpecMismatch, "amplified element has the wrong block count");
  }
  return ModuleOperator(spec, n, n, amplified.blocks());
}

AlgebraElement ModuleOperator::entry(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw Error(ErrorKind::ShapeMismatch, "operator index out of range");
  std::vector<CMatrix> blocks;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const auto n = spec_.block_dim(i);
    blocks.push_back(blocks_[i].block(r * n, c * n, n, n));
  }
  return AlgebraElement(spec_, std::move(blocks));
}

ModuleElement ModuleOperator::row(std::size_t r) const {
  if (r >= rows_) throw Error(ErrorKind::ShapeMismatch, "row index out of range");
  std::vector<CMatrix> blocks;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const auto n = spec_.block_dim(i);
    blocks.push_back(blocks_[i].block(r * n, 0, n, cols_ * n));
  }
  return ModuleElement(spec_, cols_, std::move(blocks));
}

ModuleOperator ModuleOperator::adjoint() const {
  std::vector<CMatrix> blocks;
  blocks.reserve(blocks_.size());
  for (const auto& b : blocks_) blocks.push_back(b.adjoint());
  return ModuleOperator(spec_, cols_, rows_, std::move(blocks));
}

AlgebraElement ModuleOperator::as_algebra_element() const {
  if (!is_square()) throw Error(ErrorKind::ShapeMismatch, "only square operators form an algebra");
  std::vector<std::size_t> dims;
  for (auto n : spec_.blocks()) dims.push_back(n * rows_);
  if (rows_ == 0) throw Error(ErrorKind::ShapeMismatch, "empty operator");
  return AlgebraElement(AlgebraSpec(std::move(dims)), blocks_);
}

double ModuleOperator::norm() const {
  double m = 0.0;
  for (const auto& b : blocks_) m = std::max(m, spectral_norm(b));
  return m;
}

ModuleOperator& ModuleOperator::operator+=(const ModuleOperator& rhs) {
  require_same_spec(spec_, rhs.spec_);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorKind::ShapeMismatch, "operator shapes differ");
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] += rhs.blocks_[i];
  return *this;
}

ModuleOperator& ModuleOperator::operator-=(const ModuleOperator& rhs) {
  require_same_spec(spec_, rhs.spec_);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorKind::ShapeMismatch, "operator shapes differ");
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] -= rhs.blocks_[i];
  return *this;
}

ModuleOperator& ModuleOperator::operator*=(Complex s) {
  for (auto& b : blocks_) b *= s;
  return *this;
}

ModuleOperator operator+(ModuleOperator lhs, const ModuleOperator& rhs) { return lhs += rhs; }
ModuleOperator operator-(ModuleOperator lhs, const ModuleOperator& rhs) { return lhs -= rhs; }
ModuleOperator operator*(Complex s, ModuleOperator t) { return t *= s; }

ModuleOperator operator*(const ModuleOperator& lhs, const ModuleOperator& rhs) {
  require_same_spec(lhs.spec(), rhs.spec());
  if (lhs.cols() != rhs.rows()) throw Error(ErrorKind::ShapeMismatch, "operator product shapes differ");
  std::vector<CMatrix> blocks;
  blocks.reserve(lhs.blocks().size());
  for (std::size_t i = 0; i < lhs.blocks().size(); ++i) blocks.push_back(lhs.block(i) * rhs.block(i));
  return ModuleOperator(lhs.spec(), lhs.rows(), rhs.cols(), std::move(blocks));
}

// ------------------------------------------------------------ free functions

AlgebraElement inner_product(const ModuleElement& x, const ModuleElement& y) {
  require_same_spec(x.spec(), y.spec());
  if (x.length() != y.length()) throw Error(ErrorKind::LengthMismatch, "inner product of different lengths");
  std::vector<CMatrix> blocks;
  blocks.reserve(x.blocks().size());
  for (std::size_t i = 0; i < x.blocks().size(); ++i) blocks.push_back(x.block(i) * y.block(i).adjoint());
  return AlgebraElement(x.spec(), std::move(blocks));
}

double module_norm(const ModuleElement& x) { return std::sqrt(operator_norm(inner_product(x, x))); }

ModuleElement apply_operator(const ModuleOperator& t, const ModuleElement& x) {
  require_same_spec(t.spec(), x.spec());
  if (x.length() != t.rows()) {
    throw Error(ErrorKind::ShapeMismatch, "element length " + std::to_string(x.length()) +
                                              " does not match operator rows " + std::to_string(t.rows()));
  }
  std::vector<CMatrix> blocks;
  blocks.reserve(x.blocks().size());
  for (std::size_t i = 0; i < x.blocks().size(); ++i) blocks.push_back(x.block(i) * t.block(i));
  return ModuleElement(x.spec(), t.cols(), std::move(blocks));
}

ModuleOperator operator_adjoint(const ModuleOperator& t) { return t.adjoint(); }

bool operator_is_positive(const ModuleOperator& t, double tol) {
  if (!t.is_square()) throw Error(ErrorKind::ShapeMismatch, "positivity needs a square operator");
  if (t.rows() == 0) return true;
  return is_positive(t.as_algebra_element(), tol);
}

// ------------------------------------------------------- projective modules

bool ProjectiveModule::contains(const ModuleElement& x, double tol) const {
  if (!(x.spec() == spec()) || x.length() != ambient_rank()) return false;
  const double residual = module_norm(apply_operator(projection_, x) - x);
  return residual <= tol * std::max(1.0, module_norm(x));
}

ModuleElement ProjectiveModule::project(const ModuleElement& x) const { return apply_operator(projection_, x); }

bool ProjectiveModule::is_zero() const { return projection_.norm() < 0.5; }

ProjectiveModule make_projective_module(const ModuleOperator& p, double tol) {
  if (!p.is_square()) throw Error(ErrorKind::NotAProjection, "projection must be square");
  const double scale = std::max(1.0, p.norm());
  const double self_adjoint_residual = (p - p.adjoint()).norm();
  const double idempotent_residual = (p * p - p).norm();
  const double residual = std::max(self_adjoint_residual, idempotent_residual);
  if (residual > tol * scale) {
    throw Error(ErrorKind::NotAProjection, "residual " + std::to_string(residual) + " (||P - P*|| = " +
                                               std::to_string(self_adjoint_residual) + ", ||P^2 - P|| = " +
                                               std::to_string(idempotent_residual) + ")");
  }
  return ProjectiveModule(p);
}

ProjectiveModule free_module(const AlgebraSpec& spec, std::size_t n) {
  return make_projective_module(ModuleOperator::identity(spec, n));
}

std::vector<ModuleElement> orthonormal_basis(std::size_t n, const AlgebraSpec& spec) {
  std::vector<ModuleElement> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(ModuleElement::unit(spec, n, k));
  return out;
}

}  // namespace cframe
