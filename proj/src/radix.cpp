#include "mrfft/radix.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mrfft {

namespace {

constexpr std::size_t kProductLimit = std::size_t{1} << 62;

}  // namespace

RadixTuple::RadixTuple(std::vector<std::size_t> radices) : radices_(std::move(radices)) {
  if (radices_.empty()) throw std::domain_error("radix tuple must be nonempty");
  for (std::size_t r : radices_) {
    if (r == 0) throw std::domain_error("radix must be >= 1");
    if (total_ > kProductLimit / r) throw std::domain_error("radix product overflows index range");
    total_ *= r;
  }
}

std::size_t RadixTuple::radix(std::size_t k) const {
  if (k >= radices_.size()) throw std::domain_error("stage index out of range");
  return radices_[radices_.size() - 1 - k];
}

RadixTuple RadixTuple::reversed() const {
  std::vector<std::size_t> rev(radices_.rbegin(), radices_.rend());
  return RadixTuple(std::move(rev));
}

std::size_t RadixTuple::prefix_product(std::size_t k) const {
  if (k >= radices_.size()) throw std::domain_error("stage index out of range");
  std::size_t p = 1;
  for (std::size_t j = 0; j <= k; ++j) p *= radix(j);
  return p;
}

std::size_t RadixTuple::suffix_product(std::size_t k) const {
  std::size_t p = 1;
  for (std::size_t j = k; j < radices_.size(); ++j) p *= radix(j);
  return p;
}

IndexPermutation::IndexPermutation(std::vector<std::size_t> forward) : forward_(std::move(forward)) {
  std::vector<bool> seen(forward_.size(), false);
  for (std::size_t image : forward_) {
    if (image >= forward_.size() || seen[image])
      throw std::domain_error("forward map is not a bijection");
    seen[image] = true;
  }
}

IndexPermutation IndexPermutation::identity(std::size_t n) {
  std::vector<std::size_t> fwd(n);
  std::iota(fwd.begin(), fwd.end(), std::size_t{0});
  return IndexPermutation(std::move(fwd), unchecked_tag{});
}

IndexPermutation IndexPermutation::inverted() const {
  std::vector<std::size_t> inv(forward_.size());
  for (std::size_t n = 0; n < forward_.size(); ++n) inv[forward_[n]] = n;
  return IndexPermutation(std::move(inv), unchecked_tag{});
}

bool IndexPermutation::is_identity() const {
  for (std::size_t n = 0; n < forward_.size(); ++n)
    if (forward_[n] != n) return false;
  return true;
}

IndexPermutation compose(const IndexPermutation& p, const IndexPermutation& q) {
  if (p.size() != q.size()) throw std::domain_error("permutation size mismatch");
  std::vector<std::size_t> fwd(p.size());
  for (std::size_t n = 0; n < q.size(); ++n) fwd[n] = p(q(n));
  return IndexPermutation(std::move(fwd));
}

IndexPermutation identity_kron(std::size_t copies, const IndexPermutation& p) {
  const std::size_t block = p.size();
  std::vector<std::size_t> fwd(copies * block);
  for (std::size_t b = 0; b < copies; ++b)
    for (std::size_t j = 0; j < block; ++j) fwd[b * block + j] = b * block + p(j);
  return IndexPermutation(std::move(fwd));
}

DigitVector digit_decode(std::size_t n, const RadixTuple& alpha) {
  if (n >= alpha.total())
    throw std::domain_error("index " + std::to_string(n) + " out of range for system of size " +
                            std::to_string(alpha.total()));
  std::vector<std::size_t> digits(alpha.stage_count());
  std::size_t rest = n;
  for (std::size_t j = 0; j < alpha.stage_count(); ++j) {
    const std::size_t r = alpha.radix(j);
    digits[alpha.stage_count() - 1 - j] = rest % r;
    rest /= r;
  }
  return DigitVector{std::move(digits)};
}

std::size_t digit_encode(const DigitVector& p, const RadixTuple& alpha) {
  if (p.size() != alpha.stage_count()) throw std::domain_error("digit count does not match tuple");
  std::size_t value = 0;
  for (std::size_t pos = 0; pos < p.size(); ++pos) {
    const std::size_t k = alpha.stage_count() - 1 - pos;  // positional subscript of digits[pos]
    if (p.digits[pos] >= alpha.radix(k)) throw std::domain_error("digit out of range");
    value = value * alpha.radix(k) + p.digits[pos];
  }
  return value;
}

IndexPermutation digit_reverse_perm(const RadixTuple& alpha) {
  const RadixTuple star = alpha.reversed();
  std::vector<std::size_t> fwd(alpha.total());
  for (std::size_t n = 0; n < alpha.total(); ++n) {
    DigitVector d = digit_decode(n, star);
    std::reverse(d.digits.begin(), d.digits.end());
    fwd[n] = digit_encode(d, alpha);
  }
  return IndexPermutation(std::move(fwd));
}

IndexPermutation stride_perm(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0 || n % k != 0)
    throw std::domain_error("stride divisor " + std::to_string(k) + " does not divide " +
                            std::to_string(n));
  const std::size_t m = n / k;
  std::vector<std::size_t> fwd(n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m; ++j) fwd[i * m + j] = j * k + i;
  return IndexPermutation(std::move(fwd));
}

IndexPermutation stage_perm_a(const RadixTuple& alpha, std::size_t k) {
  const std::size_t block = alpha.prefix_product(k);  // throws on bad k
  return identity_kron(alpha.total() / block, stride_perm(block, alpha.radix(k)));
}

IndexPermutation stage_perm_b(const RadixTuple& beta, std::size_t k) {
  if (k >= beta.stage_count()) throw std::domain_error("stage index out of range");
  const std::size_t block = beta.suffix_product(k);
  return identity_kron(beta.total() / block, stride_perm(block, beta.radix(k)));
}

CycleDecomposition::CycleDecomposition(const IndexPermutation& p) {
  std::vector<bool> visited(p.size(), false);
  starts_.push_back(0);
  for (std::size_t n = 0; n < p.size(); ++n) {
    if (visited[n] || p(n) == n) continue;
    std::size_t cur = n;
    while (!visited[cur]) {
      visited[cur] = true;
      elems_.push_back(cur);
      cur = p(cur);
    }
    starts_.push_back(elems_.size());
  }
}

}  // namespace mrfft
