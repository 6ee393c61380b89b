#include "cframe/dense.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "cframe/error.hpp"

namespace cframe {

namespace {

constexpr double kJacobiThreshold = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

void require_same_shape(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::ShapeMismatch, "matrix shapes differ");
  }
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw Error(ErrorKind::ShapeMismatch, "matrix data length does not match shape");
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

CMatrix CMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  assert(r0 + nr <= rows_ && c0 + nc <= cols_);
  CMatrix out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

void CMatrix::set_block(std::size_t r0, std::size_t c0, const CMatrix& src) {
  assert(r0 + src.rows() <= rows_ && c0 + src.cols() <= cols_);
  for (std::size_t r = 0; r < src.rows(); ++r)
    for (std::size_t c = 0; c < src.cols(); ++c) (*this)(r0 + r, c0 + c) = src(r, c);
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
  require_same_shape(*this, rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
  require_same_shape(*this, rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }
CMatrix operator*(Complex s, CMatrix m) { return m *= s; }

CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw Error(ErrorKind::ShapeMismatch, "inner dimensions differ in matrix product");
  }
  CMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex a = lhs(r, k);
      if (a == Complex{}) continue;
      for (std::size_t c = 0; c < rhs.cols(); ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

HermitianEigen jacobi_eigen(const CMatrix& input) {
  if (!input.is_square()) throw Error(ErrorKind::ShapeMismatch, "eigen decomposition needs a square matrix");
  const std::size_t n = input.rows();
  CMatrix a = input + input.adjoint();
  a *= 0.5;
  CMatrix v = CMatrix::identity(n);

  const double threshold = kJacobiThreshold * a.frobenius_norm();
  auto max_off = [&] {
    double m = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) m = std::max(m, std::abs(a(p, q)));
    return m;
  };

  int sweep = 0;
  while (max_off() > threshold) {
    if (++sweep > kJacobiMaxSweeps) {
      throw Error(ErrorKind::NoConvergence, "Jacobi iteration exceeded the sweep cap");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mod = std::abs(apq);
        if (mod == 0.0) continue;
        const Complex phase = apq / mod;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mod);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // J = diag(1, conj(phase)) * [[c, s], [-s, c]]
        const Complex jpp = c;
        const Complex jpq = s;
        const Complex jqp = -s * std::conj(phase);
        const Complex jqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigen out;
  out.values.reserve(n);
  out.vectors = CMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values.push_back(a(order[k], order[k]).real());
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

double spectral_norm(const CMatrix& a) {
  if (a.empty()) return 0.0;
  const CMatrix gram = a.rows() <= a.cols() ? a * a.adjoint() : a.adjoint() * a;
  const auto eig = jacobi_eigen(gram);
  return std::sqrt(std::max(0.0, eig.values.back()));
}

}  // namespace cframe
