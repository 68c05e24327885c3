#ifndef MRFFT_OPERATORS_HPP
#define MRFFT_OPERATORS_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "mrfft/radix.hpp"

namespace mrfft {

using Complex = std::complex<double>;

/// Row-major dense complex matrix. Used by the oracle side of the project;
/// the execution path never materializes an N-by-N operator.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Complex* row(std::size_t r) { return data_.data() + r * cols_; }
  const Complex* row(std::size_t r) const { return data_.data() + r * cols_; }

  std::span<const Complex> data() const { return data_; }
  bool is_finite() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Complex> data_;
};

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
std::vector<Complex> matvec(const DenseMatrix& a, std::span<const Complex> v);
DenseMatrix transpose(const DenseMatrix& a);
DenseMatrix conjugate(const DenseMatrix& a);
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// Unit-modulus diagonal. Every entry is a root of unity exp(-2*pi*i*e/modulus);
/// the integer exponents are kept alongside the materialized values so plans
/// can be serialized exactly.
class TwiddleDiagonal {
 public:
  /// Exponents are reduced mod modulus; modulus must be >= 1.
  TwiddleDiagonal(std::size_t modulus, std::vector<std::int64_t> exponents);

  static TwiddleDiagonal identity(std::size_t n);

  std::size_t size() const { return values_.size(); }
  std::size_t modulus() const { return modulus_; }
  const Complex& value(std::size_t i) const { return values_[i]; }
  const std::vector<Complex>& values() const { return values_; }
  const std::vector<std::int64_t>& exponents() const { return exponents_; }

  bool is_identity() const;

 private:
  std::size_t modulus_;
  std::vector<std::int64_t> exponents_;
  std::vector<Complex> values_;
};

/// d repeated `copies` times along the diagonal.
TwiddleDiagonal tiled(const TwiddleDiagonal& d, std::size_t copies);

/// exp(-2*pi*i/n); the clockwise primitive n-th root of unity.
Complex omega(std::size_t n);

/// n-by-n matrix with entry (k, l) = omega(n)^(k*l). Symmetric.
DenseMatrix dft_matrix(std::size_t n);

/// Diagonal of length n = k*m with entry omega(n)^(i*j) at index i*m+j,
/// 0 <= i < k, 0 <= j < m. Throws std::domain_error unless m divides n.
TwiddleDiagonal twiddle_w(std::size_t n, std::size_t m);

/// Diagonal of length k*m*n with entry omega(k*m*n)^(i*(l*m+j)) at index
/// (i*m+j)*n+l, for 0 <= i < k, 0 <= j < m, 0 <= l < n.
TwiddleDiagonal twiddle_v(std::size_t k, std::size_t m, std::size_t n);

/// Stage diagonal for decimation in time: twiddle_w(N_k, n_k) tiled over
/// the whole length.
TwiddleDiagonal stage_twiddle_dit(const RadixTuple& alpha, std::size_t k);

/// Stage diagonal for decimation in frequency: twiddle_w(M_k, m_k) tiled.
TwiddleDiagonal stage_twiddle_dif(const RadixTuple& beta, std::size_t k);

/// The DIF stage diagonal commuted through the following stage permutation,
/// for the twiddle-before-butterfly variant: twiddle_v(m_k, M_{k+2}, m_{k+1})
/// tiled, with m_{K+1} = M_{K+2} = 1 (so k = K yields the identity).
TwiddleDiagonal stage_twiddle_difw(const RadixTuple& beta, std::size_t k);

/// 0/1 matrix with column n carrying a one at row p(n).
DenseMatrix dense_of_permutation(const IndexPermutation& p);
DenseMatrix dense_of_diagonal(const TwiddleDiagonal& d);

void apply_diagonal_inplace(std::span<Complex> v, const TwiddleDiagonal& d);
void apply_permutation_inplace(std::vector<Complex>& v, const IndexPermutation& p);

}  // namespace mrfft

#endif  // MRFFT_OPERATORS_HPP
