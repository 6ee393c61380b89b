#include "cframe/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "cframe/error.hpp"

namespace cframe {

AlgebraSpec::AlgebraSpec(std::vector<std::size_t> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw Error(ErrorKind::SpecMismatch, "algebra needs at least one block");
  for (auto n : blocks_) {
    if (n == 0) throw Error(ErrorKind::SpecMismatch, "block dimensions must be positive");
  }
}

AlgebraSpec AlgebraSpec::commutative(std::size_t points) {
  return AlgebraSpec(std::vector<std::size_t>(points, 1));
}

std::size_t AlgebraSpec::dimension() const noexcept {
  return std::accumulate(blocks_.begin(), blocks_.end(), std::size_t{0});
}

bool AlgebraSpec::is_commutative() const noexcept {
  return std::all_of(blocks_.begin(), blocks_.end(), [](std::size_t n) { return n == 1; });
}

void require_same_spec(const AlgebraSpec& a, const AlgebraSpec& b) {
  if (!(a == b)) throw Error(ErrorKind::SpecMismatch, "operands live over different algebras");
}

AlgebraElement::AlgebraElement(AlgebraSpec spec, std::vector<CMatrix> blocks)
    : spec_(std::move(spec)), blocks_(std::move(blocks)) {
  if (blocks_.size() != spec_.block_count()) {
    throw Error(ErrorKind::SpecMismatch, "block count does not match the algebra");
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const auto n = spec_.block_dim(i);
    if (blocks_[i].rows() != n || blocks_[i].cols() != n) {
      throw Error(ErrorKind::SpecMismatch, "block " + std::to_string(i) + " must be " +
                                               std::to_string(n) + "x" + std::to_string(n));
    }
  }
}

AlgebraElement AlgebraElement::zero(const AlgebraSpec& spec) {
  std::vector<CMatrix> blocks;
  for (auto n : spec.blocks()) blocks.emplace_back(n, n);
  return AlgebraElement(spec, std::move(blocks));
}

AlgebraElement AlgebraElement::identity(const AlgebraSpec& spec) { return scalar(spec, 1.0); }

AlgebraElement AlgebraElement::scalar(const AlgebraSpec& spec, Complex value) {
  std::vector<CMatrix> blocks;
  for (auto n : spec.blocks()) blocks.push_back(value * CMatrix::identity(n));
  return AlgebraElement(spec, std::move(blocks));
}

AlgebraElement AlgebraElement::adjoint() const {
  std::vector<CMatrix> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.push_back(b.adjoint());
  return AlgebraElement(spec_, std::move(out));
}

double AlgebraElement::max_abs() const {
  double m = 0.0;
  for (const auto& b : blocks_) m = std::max(m, b.max_abs());
  return m;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  require_same_spec(spec_, rhs.spec_);
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] += rhs.blocks_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  require_same_spec(spec_, rhs.spec_);
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] -= rhs.blocks_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(Complex s) {
  for (auto& b : blocks_) b *= s;
  return *this;
}

AlgebraElement operator+(AlgebraElement lhs, const AlgebraElement& rhs) { return lhs += rhs; }
AlgebraElement operator-(AlgebraElement lhs, const AlgebraElement& rhs) { return lhs -= rhs; }
AlgebraElement operator*(Complex s, AlgebraElement a) { return a *= s; }

AlgebraElement operator*(const AlgebraElement& lhs, const AlgebraElement& rhs) {
  require_same_spec(lhs.spec(), rhs.spec());
  std::vector<CMatrix> out;
  out.reserve(lhs.blocks().size());
  for (std::size_t i = 0; i < lhs.blocks().size(); ++i) out.push_back(lhs.block(i) * rhs.block(i));
  return AlgebraElement(lhs.spec(), std::move(out));
}

AlgebraElement element_arithmetic(const AlgebraElement& a, const AlgebraElement& b,
                                  ArithmeticKind kind, Complex lambda) {
  switch (kind) {
    case ArithmeticKind::add: return a + b;
    case ArithmeticKind::sub: return a - b;
    case ArithmeticKind::mul: return a * b;
    case ArithmeticKind::adjoint: return a.adjoint();
    case ArithmeticKind::scalar: return lambda * a;
  }
  return a;
}

double operator_norm(const AlgebraElement& a) {
  double m = 0.0;
  for (const auto& b : a.blocks()) m = std::max(m, spectral_norm(b));
  return m;
}

double SelfAdjointSpectrum::min() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& ev : eigenvalues)
    if (!ev.empty()) m = std::min(m, ev.front());
  return m;
}

double SelfAdjointSpectrum::max() const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& ev : eigenvalues)
    if (!ev.empty()) m = std::max(m, ev.back());
  return m;
}

AlgebraElement SelfAdjointSpectrum::reconstruct(const AlgebraSpec& spec) const {
  std::vector<CMatrix> blocks;
  for (std::size_t i = 0; i < eigenvectors.size(); ++i) {
    const auto& u = eigenvectors[i];
    CMatrix d(u.cols(), u.cols());
    for (std::size_t k = 0; k < u.cols(); ++k) d(k, k) = eigenvalues[i][k];
    blocks.push_back(u * d * u.adjoint());
  }
  return AlgebraElement(spec, std::move(blocks));
}

SelfAdjointSpectrum hermitian_eigen(const AlgebraElement& a) {
  const double scale = operator_norm(a);
  const double skew = operator_norm(a - a.adjoint());
  if (skew > kHermitianTol * scale) {
    throw Error(ErrorKind::NotSelfAdjoint,
                "||a - a*|| = " + std::to_string(skew) + " exceeds tolerance");
  }
  SelfAdjointSpectrum out;
  for (const auto& b : a.blocks()) {
    auto eig = jacobi_eigen(b);
    out.eigenvalues.push_back(std::move(eig.values));
    out.eigenvectors.push_back(std::move(eig.vectors));
  }
  return out;
}

bool is_positive(const AlgebraElement& a, double tol) {
  const double scale = std::max(1.0, operator_norm(a));
  if (operator_norm(a - a.adjoint()) > tol * scale) return false;
  for (const auto& b : a.blocks()) {
    const auto eig = jacobi_eigen(b);
    if (!eig.values.empty() && eig.values.front() < -tol * scale) return false;
  }
  return true;
}

AlgebraElement functional_calculus(const AlgebraElement& a, SpectralFunction fn, double cutoff) {
  if (!is_positive(a)) throw Error(ErrorKind::NotPositive, "functional calculus needs a positive element");
  const auto spectrum = hermitian_eigen(a);
  if (fn == SpectralFunction::inv || fn == SpectralFunction::inv_sqrt) {
    if (spectrum.min() <= cutoff) {
      throw Error(ErrorKind::SingularBelowCutoff,
                  "smallest eigenvalue " + std::to_string(spectrum.min()) + " is not above the cutoff");
    }
  }
  auto apply = [&](double x) -> double {
    switch (fn) {
      case SpectralFunction::sqrt: return std::sqrt(std::max(0.0, x));
      case SpectralFunction::inv: return 1.0 / x;
      case SpectralFunction::inv_sqrt: return 1.0 / std::sqrt(x);
      case SpectralFunction::support_projection: return x > cutoff ? 1.0 : 0.0;
      case SpectralFunction::pinv: return x > cutoff ? 1.0 / x : 0.0;
      case SpectralFunction::pinv_sqrt: return x > cutoff ? 1.0 / std::sqrt(x) : 0.0;
    }
    return x;
  };
  SelfAdjointSpectrum mapped = spectrum;
  for (auto& ev : mapped.eigenvalues)
    for (auto& x : ev) x = apply(x);
  return mapped.reconstruct(a.spec());
}

}  // namespace cframe
