#include "cframe/applications.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cframe/error.hpp"
#include "cframe/random.hpp"

namespace cframe {

namespace {

constexpr double kIntegerTol = 1e-6;
constexpr double kQuasiBasisTol = 1e-10;

void require_commutative(const AlgebraSpec& spec) {
  if (!spec.is_commutative()) throw Error(ErrorKind::NotCommutative, "operation needs a commutative algebra");
}

void require_normalized_tight(const ModuleFrame& frame) {
  if (!classify_frame(frame).is_normalized_tight) {
    throw Error(ErrorKind::NotNormalizedTight, "frame is not normalized tight");
  }
}

AlgebraElement self_inner_sum(const std::vector<ModuleElement>& xs, const AlgebraSpec& spec) {
  auto sum = AlgebraElement::zero(spec);
  for (const auto& x : xs) sum += inner_product(x, x);
  return sum;
}

}  // namespace

std::vector<std::int64_t> magic_sum(const ModuleFrame& frame) {
  require_commutative(frame.spec());
  require_normalized_tight(frame);
  const auto sum = self_inner_sum(frame.elements(), frame.spec());
  std::vector<std::int64_t> out;
  out.reserve(sum.blocks().size());
  for (std::size_t k = 0; k < sum.blocks().size(); ++k) {
    const Complex v = sum.block(k)(0, 0);
    const double r = std::round(v.real());
    if (std::abs(v - Complex(r)) > kIntegerTol || r < 0.0) {
      throw Error(ErrorKind::NotInteger, "component " + std::to_string(k) + " is " + std::to_string(v.real()));
    }
    out.push_back(static_cast<std::int64_t>(r));
  }
  return out;
}

AlgebraElement hs_sum(const ModuleOperator& t, const ModuleFrame& frame) {
  require_commutative(frame.spec());
  require_normalized_tight(frame);
  const auto& p = frame.module().projection();
  if (!t.is_square() || t.rows() != p.rows()) throw Error(ErrorKind::ShapeMismatch, "T must act on the ambient module");
  const auto compressed = p * t * p;
  std::vector<ModuleElement> images;
  for (const auto& x : frame.elements()) images.push_back(apply_operator(compressed, x));
  return self_inner_sum(images, frame.spec());
}

// ------------------------------------------------------------ expectations

ConditionalExpectation::ConditionalExpectation(ExpectationKind kind, std::size_t n) : kind_(kind), n_(n) {
  if (n == 0) throw Error(ErrorKind::ShapeMismatch, "matrix size must be positive");
}

CMatrix ConditionalExpectation::operator()(const CMatrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) throw Error(ErrorKind::ShapeMismatch, "argument must be n x n");
  CMatrix out(n_, n_);
  if (kind_ == ExpectationKind::diagonal) {
    for (std::size_t k = 0; k < n_; ++k) out(k, k) = x(k, k);
    return out;
  }
  Complex tr = 0.0;
  for (std::size_t k = 0; k < n_; ++k) tr += x(k, k);
  if (kind_ == ExpectationKind::normalized_trace) tr /= static_cast<double>(n_);
  for (std::size_t k = 0; k < n_; ++k) out(k, k) = tr;
  return out;
}

AlgebraSpec ConditionalExpectation::range_spec() const {
  return kind_ == ExpectationKind::diagonal ? AlgebraSpec::commutative(n_) : AlgebraSpec({1});
}

AlgebraElement ConditionalExpectation::to_range(const CMatrix& x) const {
  const auto ex = (*this)(x);
  std::vector<CMatrix> blocks;
  if (kind_ == ExpectationKind::diagonal) {
    for (std::size_t k = 0; k < n_; ++k) blocks.emplace_back(1, 1, std::vector<Complex>{ex(k, k)});
  } else {
    blocks.emplace_back(1, 1, std::vector<Complex>{ex(0, 0)});
  }
  return AlgebraElement(range_spec(), std::move(blocks));
}

std::vector<CMatrix> matrix_units(std::size_t n) {
  std::vector<CMatrix> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CMatrix e(n, n);
      e(i, j) = 1.0;
      out.push_back(std::move(e));
    }
  return out;
}

double quasi_basis_residual(const ConditionalExpectation& e, const QuasiBasis& qb, const CMatrix& x) {
  if (qb.u.size() != qb.v.size()) throw Error(ErrorKind::LengthMismatch, "u and v differ in length");
  CMatrix sum(e.n(), e.n());
  for (std::size_t i = 0; i < qb.u.size(); ++i) sum += qb.u[i] * e(qb.v[i] * x);
  return (x - sum).frobenius_norm();
}

QuasiBasis quasi_basis(const ConditionalExpectation& e) {
  QuasiBasis qb;
  qb.u = matrix_units(e.n());
  if (e.kind() == ExpectationKind::normalized_trace) {
    for (auto& u : qb.u) u *= std::sqrt(static_cast<double>(e.n()));
  }
  for (const auto& u : qb.u) qb.v.push_back(u.adjoint());

  SplitMix64 rng{0x5eedULL + e.n()};
  CMatrix probe(e.n(), e.n());
  for (std::size_t r = 0; r < e.n(); ++r)
    for (std::size_t c = 0; c < e.n(); ++c) probe(r, c) = Complex(rng.symmetric(), rng.symmetric());
  const double residual = quasi_basis_residual(e, qb, probe);
  if (residual > kQuasiBasisTol * std::max(1.0, probe.frobenius_norm())) {
    throw Error(ErrorKind::IdentityFailed, "quasi-basis residual " + std::to_string(residual));
  }
  return qb;
}

ModuleElement encode_expectation_element(const ConditionalExpectation& e, const CMatrix& x) {
  const std::size_t n = e.n();
  if (x.rows() != n || x.cols() != n) throw Error(ErrorKind::ShapeMismatch, "element must be n x n");
  const auto spec = e.range_spec();
  if (e.kind() == ExpectationKind::diagonal) {
    // Point k carries the row vector (conj(x_0k), ..., conj(x_{n-1,k})).
    std::vector<CMatrix> blocks;
    for (std::size_t k = 0; k < n; ++k) {
      CMatrix b(1, n);
      for (std::size_t r = 0; r < n; ++r) b(0, r) = std::conj(x(r, k));
      blocks.push_back(std::move(b));
    }
    return ModuleElement(spec, n, std::move(blocks));
  }
  const double scale = e.kind() == ExpectationKind::normalized_trace ? 1.0 / std::sqrt(static_cast<double>(n)) : 1.0;
  CMatrix b(1, n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) b(0, r * n + c) = scale * std::conj(x(r, c));
  return ModuleElement(spec, n * n, {std::move(b)});
}

ModuleFrame expectation_frame(const ConditionalExpectation& e, const std::vector<CMatrix>& family) {
  std::vector<ModuleElement> xs;
  xs.reserve(family.size());
  for (const auto& x : family) xs.push_back(encode_expectation_element(e, x));
  const std::size_t rank = e.kind() == ExpectationKind::diagonal ? e.n() : e.n() * e.n();
  return ModuleFrame(free_module(e.range_spec(), rank), std::move(xs));
}

ModuleFrame expectation_module_frame(const ConditionalExpectation& e) { return expectation_frame(e, quasi_basis(e).u); }

ModuleFrame expectation_dual_frame(const ConditionalExpectation& e) {
  const auto qb = quasi_basis(e);
  std::vector<CMatrix> partners;
  partners.reserve(qb.v.size());
  for (const auto& v : qb.v) partners.push_back(v.adjoint());
  return expectation_frame(e, partners);
}

// ---------------------------------------------------------------- interval

double interval_frame_value(std::size_t j, double t) {
  if (j == 0) throw Error(ErrorKind::ShapeMismatch, "interval frame index starts at 1");
  const double jd = static_cast<double>(j);
  double sq = 0.0;
  if (j == 1) {
    if (t >= 0.5 && t <= 1.0) sq = 2.0 * t - 1.0;
  } else if (t >= 1.0 / (jd + 1.0) && t <= 1.0 / jd) {
    sq = jd * (jd + 1.0) * t - jd;
  } else if (t >= 1.0 / jd && t <= 1.0 / (jd - 1.0)) {
    sq = -jd * (jd - 1.0) * t + jd;
  }
  return std::sqrt(std::max(0.0, sq));
}

std::size_t required_interval_terms(const std::vector<double>& grid) {
  if (grid.empty()) throw Error(ErrorKind::GridOutOfRange, "grid is empty");
  const double lo = *std::min_element(grid.begin(), grid.end());
  if (!(lo > 0.0)) throw Error(ErrorKind::GridOutOfRange, "grid points must be positive");
  return static_cast<std::size_t>(std::ceil(1.0 / lo - 1e-12));
}

ModuleFrame sampled_interval_frame(const std::vector<double>& grid, std::size_t j) {
  if (grid.empty()) throw Error(ErrorKind::GridOutOfRange, "grid is empty");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!(grid[k] > 0.0 && grid[k] <= 1.0)) {
      throw Error(ErrorKind::GridOutOfRange, "grid point " + std::to_string(grid[k]) + " is outside (0, 1]");
    }
    if (k > 0 && !(grid[k] > grid[k - 1])) {
      throw Error(ErrorKind::GridOutOfRange, "grid must be strictly increasing");
    }
  }
  const std::size_t needed = required_interval_terms(grid);
  if (j < needed) {
    throw Error(ErrorKind::InsufficientJ, "J = " + std::to_string(j) + " but the grid needs " + std::to_string(needed));
  }
  const auto spec = AlgebraSpec::commutative(grid.size());
  std::vector<ModuleElement> xs;
  for (std::size_t idx = 1; idx <= j; ++idx) {
    std::vector<CMatrix> blocks;
    for (double t : grid) blocks.emplace_back(1, 1, std::vector<Complex>{interval_frame_value(idx, t)});
    xs.emplace_back(spec, 1, std::move(blocks));
  }
  return ModuleFrame(free_module(spec, 1), std::move(xs));
}

}  // namespace cframe
