#include "mrfft/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mrfft {

namespace {

Complex unit_root(std::size_t modulus, std::size_t exponent) {
  if (exponent == 0) return {1.0, 0.0};
  const double angle =
      -2.0 * std::numbers::pi * static_cast<double>(exponent) / static_cast<double>(modulus);
  return {std::cos(angle), std::sin(angle)};
}

std::size_t mulmod(std::size_t a, std::size_t b, std::size_t m) {
  return (a % m) * (b % m) % m;
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

bool DenseMatrix::is_finite() const {
  for (const Complex& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw std::domain_error("matmul size mismatch");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a.at(i, k);
      if (aik == Complex{}) continue;
      const Complex* brow = b.row(k);
      Complex* crow = c.row(i);
      for (std::size_t j = 0; j < b.cols(); ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

std::vector<Complex> matvec(const DenseMatrix& a, std::span<const Complex> v) {
  if (a.cols() != v.size()) throw std::domain_error("matvec size mismatch");
  std::vector<Complex> out(a.rows(), Complex{});
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex acc{};
    const Complex* arow = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) acc += arow[j] * v[j];
    out[i] = acc;
  }
  return out;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  return t;
}

DenseMatrix conjugate(const DenseMatrix& a) {
  DenseMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = std::conj(a.at(i, j));
  return c;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a.at(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          c.at(i * b.rows() + p, j * b.cols() + q) = aij * b.at(p, q);
    }
  return c;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::domain_error("matrix size mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      worst = std::max(worst, std::abs(a.at(i, j) - b.at(i, j)));
  return worst;
}

TwiddleDiagonal::TwiddleDiagonal(std::size_t modulus, std::vector<std::int64_t> exponents)
    : modulus_(modulus), exponents_(std::move(exponents)) {
  if (modulus_ == 0) throw std::domain_error("twiddle modulus must be >= 1");
  values_.reserve(exponents_.size());
  const auto mod = static_cast<std::int64_t>(modulus_);
  for (std::int64_t& e : exponents_) {
    e %= mod;
    if (e < 0) e += mod;
    values_.push_back(unit_root(modulus_, static_cast<std::size_t>(e)));
  }
}

TwiddleDiagonal TwiddleDiagonal::identity(std::size_t n) {
  return TwiddleDiagonal(1, std::vector<std::int64_t>(n, 0));
}

bool TwiddleDiagonal::is_identity() const {
  for (std::int64_t e : exponents_)
    if (e != 0) return false;
  return true;
}

TwiddleDiagonal tiled(const TwiddleDiagonal& d, std::size_t copies) {
  std::vector<std::int64_t> exps;
  exps.reserve(d.size() * copies);
  for (std::size_t c = 0; c < copies; ++c)
    exps.insert(exps.end(), d.exponents().begin(), d.exponents().end());
  return TwiddleDiagonal(d.modulus(), std::move(exps));
}

Complex omega(std::size_t n) {
  if (n == 0) throw std::domain_error("omega undefined for n = 0");
  return unit_root(n, 1);
}

DenseMatrix dft_matrix(std::size_t n) {
  if (n == 0) throw std::domain_error("dft_matrix undefined for n = 0");
  DenseMatrix f(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) f.at(k, l) = unit_root(n, mulmod(k, l, n));
  return f;
}

TwiddleDiagonal twiddle_w(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0 || n % m != 0)
    throw std::domain_error("twiddle_w requires m dividing n");
  const std::size_t k = n / m;
  std::vector<std::int64_t> exps(n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m; ++j)
      exps[i * m + j] = static_cast<std::int64_t>(mulmod(i, j, n));
  return TwiddleDiagonal(n, std::move(exps));
}

TwiddleDiagonal twiddle_v(std::size_t k, std::size_t m, std::size_t n) {
  if (k == 0 || m == 0 || n == 0) throw std::domain_error("twiddle_v requires positive sizes");
  const std::size_t total = k * m * n;
  std::vector<std::int64_t> exps(total);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < n; ++l)
        exps[(i * m + j) * n + l] = static_cast<std::int64_t>(mulmod(i, l * m + j, total));
  return TwiddleDiagonal(total, std::move(exps));
}

TwiddleDiagonal stage_twiddle_dit(const RadixTuple& alpha, std::size_t k) {
  const std::size_t block = alpha.prefix_product(k);  // throws on bad k
  return tiled(twiddle_w(block, alpha.radix(k)), alpha.total() / block);
}

TwiddleDiagonal stage_twiddle_dif(const RadixTuple& beta, std::size_t k) {
  if (k >= beta.stage_count()) throw std::domain_error("stage index out of range");
  const std::size_t block = beta.suffix_product(k);
  return tiled(twiddle_w(block, beta.radix(k)), beta.total() / block);
}

TwiddleDiagonal stage_twiddle_difw(const RadixTuple& beta, std::size_t k) {
  if (k >= beta.stage_count()) throw std::domain_error("stage index out of range");
  const std::size_t K = beta.top_stage();
  const std::size_t next_radix = (k + 1 <= K) ? beta.radix(k + 1) : 1;
  const std::size_t block = beta.suffix_product(k);
  return tiled(twiddle_v(beta.radix(k), beta.suffix_product(k + 2), next_radix),
               beta.total() / block);
}

DenseMatrix dense_of_permutation(const IndexPermutation& p) {
  DenseMatrix m(p.size(), p.size());
  for (std::size_t n = 0; n < p.size(); ++n) m.at(p(n), n) = 1.0;
  return m;
}

DenseMatrix dense_of_diagonal(const TwiddleDiagonal& d) {
  DenseMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d.value(i);
  return m;
}

void apply_diagonal_inplace(std::span<Complex> v, const TwiddleDiagonal& d) {
  if (v.size() != d.size()) throw std::domain_error("diagonal size mismatch");
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= d.value(i);
}

void apply_permutation_inplace(std::vector<Complex>& v, const IndexPermutation& p) {
  if (v.size() != p.size()) throw std::domain_error("permutation size mismatch");
  std::vector<bool> moved(v.size(), false);
  for (std::size_t n = 0; n < v.size(); ++n) {
    if (moved[n] || p(n) == n) continue;
    Complex carry = v[n];
    std::size_t dst = p(n);
    while (dst != n) {
      std::swap(carry, v[dst]);
      moved[dst] = true;
      dst = p(dst);
    }
    v[n] = carry;
    moved[n] = true;
  }
}

}  // namespace mrfft
