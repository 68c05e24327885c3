#ifndef MRFFT_RADIX_HPP
#define MRFFT_RADIX_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace mrfft {

/// Ordered tuple of stage radices, most significant first, generating a
/// mixed-radix numbering system on 0..N-1 with N the product of all radices.
///
/// With radices (n_K, ..., n_0), an index n decomposes into digits
/// (p_K, ..., p_0) via
///
///   n = p_0 + n_0*(p_1 + n_1*(p_2 + ... + n_{K-1}*p_K ...)),
///
/// so p_0 is the least significant digit and its radix n_0 is the *last*
/// element of the tuple as listed. Radix 1 is allowed and contributes a
/// digit that is always zero.
class RadixTuple {
 public:
  /// Radices listed most significant first; must be nonempty, each >= 1.
  explicit RadixTuple(std::vector<std::size_t> radices);

  /// Number of digit positions, K+1.
  std::size_t stage_count() const { return radices_.size(); }

  /// Highest stage index K.
  std::size_t top_stage() const { return radices_.size() - 1; }

  /// Radix n_k; k = 0 addresses the least significant position.
  std::size_t radix(std::size_t k) const;

  /// N, the number of values representable in this system.
  std::size_t total() const { return total_; }

  /// The tuple with positions reversed (an involution).
  RadixTuple reversed() const;

  /// Prefix product n_0 * n_1 * ... * n_k.
  std::size_t prefix_product(std::size_t k) const;

  /// Suffix product n_k * ... * n_K; returns 1 for k > K.
  std::size_t suffix_product(std::size_t k) const;

  /// Stored order: most significant first (n_K, ..., n_0).
  const std::vector<std::size_t>& values() const { return radices_; }

  bool operator==(const RadixTuple&) const = default;

 private:
  std::vector<std::size_t> radices_;
  std::size_t total_ = 1;
};

/// Digit expansion of one index, stored most significant first to match
/// the RadixTuple it was decoded against.
struct DigitVector {
  std::vector<std::size_t> digits;

  /// Digit p_j; j = 0 addresses the least significant position.
  std::size_t digit(std::size_t j) const { return digits[digits.size() - 1 - j]; }
  std::size_t size() const { return digits.size(); }

  bool operator==(const DigitVector&) const = default;
};

/// A bijection on 0..N-1, materialized as its forward image array.
/// As a linear operator it sends basis vector e_n to e_{forward(n)}.
class IndexPermutation {
 public:
  /// Takes the forward image array; throws std::domain_error unless it is
  /// a bijection on 0..size-1.
  explicit IndexPermutation(std::vector<std::size_t> forward);

  static IndexPermutation identity(std::size_t n);

  std::size_t size() const { return forward_.size(); }
  std::size_t operator()(std::size_t n) const { return forward_[n]; }
  const std::vector<std::size_t>& forward() const { return forward_; }

  IndexPermutation inverted() const;
  bool is_identity() const;

  bool operator==(const IndexPermutation&) const = default;

 private:
  struct unchecked_tag {};
  IndexPermutation(std::vector<std::size_t> forward, unchecked_tag)
      : forward_(std::move(forward)) {}

  std::vector<std::size_t> forward_;
};

/// Matrix product p * q as index maps: (p*q)(n) = p(q(n)).
IndexPermutation compose(const IndexPermutation& p, const IndexPermutation& q);

/// I_copies (x) p : index i*p.size()+j maps to i*p.size()+p(j).
IndexPermutation identity_kron(std::size_t copies, const IndexPermutation& p);

/// Digits of n in the system generated by alpha. Throws std::domain_error
/// if n >= alpha.total().
DigitVector digit_decode(std::size_t n, const RadixTuple& alpha);

/// Inverse of digit_decode. Throws std::domain_error on any digit out of
/// range for its position.
std::size_t digit_encode(const DigitVector& p, const RadixTuple& alpha);

/// Digit-reversal permutation: n, read in the system generated by the
/// reversed tuple, maps to the index whose alpha-digits are those digits
/// reversed. Generalizes bit reversal; for a pair (m, n) it equals
/// stride_perm(m*n, n).
IndexPermutation digit_reverse_perm(const RadixTuple& alpha);

/// Stride permutation of size n with divisor k: i*m+j -> j*k+i for
/// 0 <= i < k, 0 <= j < m = n/k. Transposes a k-by-m array stored flat.
/// Throws std::domain_error unless k divides n.
IndexPermutation stride_perm(std::size_t n, std::size_t k);

/// Stage permutation for decimation-in-time stage k: within each
/// consecutive block of length N_k = prefix_product(k), apply
/// stride_perm(N_k, n_k); blocks repeat N/N_k times.
IndexPermutation stage_perm_a(const RadixTuple& alpha, std::size_t k);

/// Decimation-in-frequency counterpart built on suffix products:
/// blocks of length M_k = suffix_product(k) carry stride_perm(M_k, m_k).
IndexPermutation stage_perm_b(const RadixTuple& beta, std::size_t k);

/// Cycle decomposition of a permutation, precomputed so that applying the
/// permutation (or its inverse) to a vector later allocates nothing.
class CycleDecomposition {
 public:
  explicit CycleDecomposition(const IndexPermutation& p);

  /// v <- P v, i.e. v[p(n)] gets the old v[n].
  template <class T>
  void apply_forward(std::span<T> v) const {
    for (std::size_t c = 0; c + 1 < starts_.size(); ++c) {
      const std::size_t lo = starts_[c], hi = starts_[c + 1];
      T saved = v[elems_[hi - 1]];
      for (std::size_t i = hi - 1; i > lo; --i) v[elems_[i]] = v[elems_[i - 1]];
      v[elems_[lo]] = saved;
    }
  }

  /// v <- P^{-1} v, i.e. v[n] gets the old v[p(n)].
  template <class T>
  void apply_inverse(std::span<T> v) const {
    for (std::size_t c = 0; c + 1 < starts_.size(); ++c) {
      const std::size_t lo = starts_[c], hi = starts_[c + 1];
      T saved = v[elems_[lo]];
      for (std::size_t i = lo; i + 1 < hi; ++i) v[elems_[i]] = v[elems_[i + 1]];
      v[elems_[hi - 1]] = saved;
    }
  }

  std::size_t cycle_count() const { return starts_.empty() ? 0 : starts_.size() - 1; }

 private:
  // Nontrivial cycles only, flattened; cycle c spans elems_[starts_[c]..starts_[c+1]).
  // Each cycle is listed in forward-chain order: elems_[i+1] == p(elems_[i]).
  std::vector<std::size_t> elems_;
  std::vector<std::size_t> starts_;
};

}  // namespace mrfft

#endif  // MRFFT_RADIX_HPP
