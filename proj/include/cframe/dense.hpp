#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cframe {

using Complex = std::complex<double>;

/// Small dense complex matrix, row-major. This is the storage unit for every
/// block of every algebra element and module operator; sizes in this library
/// stay in the tens, so no blocking or BLAS.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

  static CMatrix identity(std::size_t n);
  static CMatrix zeros(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> data() const noexcept { return data_; }

  CMatrix adjoint() const;
  CMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const CMatrix& src);

  double frobenius_norm() const;
  double max_abs() const;

  CMatrix& operator+=(const CMatrix& rhs);
  CMatrix& operator-=(const CMatrix& rhs);
  CMatrix& operator*=(Complex s);

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

CMatrix operator+(CMatrix lhs, const CMatrix& rhs);
CMatrix operator-(CMatrix lhs, const CMatrix& rhs);
CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs);
CMatrix operator*(Complex s, CMatrix m);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // columns are eigenvectors
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix. The input is
/// symmetrized as (a + a*)/2 first. Sweeps stop once every off-diagonal
/// modulus is below 1e-13 times the Frobenius norm; more than 100 sweeps
/// throws NoConvergence.
HermitianEigen jacobi_eigen(const CMatrix& a);

/// Largest singular value.
double spectral_norm(const CMatrix& a);

}  // namespace cframe
