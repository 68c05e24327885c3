#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "mrfft/radix.hpp"
#include "mrfft/rng.hpp"

using namespace mrfft;

namespace {

bool is_bijection(const IndexPermutation& p) {
  std::vector<std::size_t> image(p.forward());
  std::sort(image.begin(), image.end());
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != i) return false;
  return true;
}

RadixTuple random_tuple(Rng& rng, std::size_t max_total, std::size_t max_radix = 8) {
  std::vector<std::size_t> radices;
  std::size_t product = 1;
  const std::size_t len = 1 + rng.below(5);
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t r = 1 + rng.below(max_radix);
    if (product > max_total / r) break;
    radices.push_back(r);
    product *= r;
  }
  if (radices.empty()) radices.push_back(1 + rng.below(max_radix));
  return RadixTuple(radices);
}

}  // namespace

TEST_CASE("radix tuple basics") {
  const RadixTuple t({3, 2});
  CHECK(t.total() == 6);
  CHECK(t.stage_count() == 2);
  CHECK(t.radix(0) == 2);  // least significant
  CHECK(t.radix(1) == 3);
  CHECK(t.prefix_product(0) == 2);
  CHECK(t.prefix_product(1) == 6);
  CHECK(t.suffix_product(0) == 6);
  CHECK(t.suffix_product(1) == 3);
  CHECK(t.suffix_product(2) == 1);
  CHECK(t.suffix_product(5) == 1);
  CHECK_THROWS_AS(RadixTuple({2, 0}), std::domain_error);
  CHECK_THROWS_AS(RadixTuple({}), std::domain_error);
  CHECK_THROWS_AS(t.radix(2), std::domain_error);
}

TEST_CASE("radix tuple reversal is an involution") {
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    const RadixTuple t = random_tuple(rng, 4096);
    CHECK(t.reversed().reversed() == t);
    CHECK(t.reversed().total() == t.total());
  }
}

TEST_CASE("digit decode") {
  CHECK(digit_decode(5, RadixTuple({3, 2})) == DigitVector{{2, 1}});  // 5 = 1 + 2*2
  CHECK(digit_decode(0, RadixTuple({4, 3, 2})) == DigitVector{{0, 0, 0}});
  CHECK(digit_decode(7, RadixTuple({2, 2, 2})) == DigitVector{{1, 1, 1}});
  CHECK_THROWS_AS(digit_decode(6, RadixTuple({3, 2})), std::domain_error);
}

TEST_CASE("digit encode") {
  CHECK(digit_encode(DigitVector{{2, 1}}, RadixTuple({3, 2})) == 5);
  CHECK(digit_encode(DigitVector{{0, 0, 0}}, RadixTuple({5, 3, 2})) == 0);
  CHECK_THROWS_AS(digit_encode(DigitVector{{3, 0}}, RadixTuple({3, 2})), std::domain_error);
  CHECK_THROWS_AS(digit_encode(DigitVector{{1}}, RadixTuple({3, 2})), std::domain_error);
}

TEST_CASE("encode is the inverse of decode") {
  Rng rng(11);
  for (int i = 0; i < 10; ++i) {
    const RadixTuple t = random_tuple(rng, 1024);
    for (std::size_t n = 0; n < t.total(); ++n) {
      const DigitVector d = digit_decode(n, t);
      for (std::size_t j = 0; j < d.size(); ++j) CHECK(d.digit(j) < t.radix(j));
      CHECK(digit_encode(d, t) == n);
    }
  }
}

TEST_CASE("digit reversal permutation") {
  CHECK(digit_reverse_perm(RadixTuple({2, 2})).forward() ==
        std::vector<std::size_t>{0, 2, 1, 3});
  CHECK(digit_reverse_perm(RadixTuple({7})).is_identity());
  // 1 in the reversed system (3,2) has digits (0,1); re-encoded in (2,3) gives 3
  CHECK(digit_reverse_perm(RadixTuple({2, 3}))(1) == 3);
}

TEST_CASE("digit reversal against its reversed tuple is the identity") {
  Rng rng(13);
  for (int i = 0; i < 25; ++i) {
    const RadixTuple t = random_tuple(rng, 4096);
    const IndexPermutation composed =
        compose(digit_reverse_perm(t), digit_reverse_perm(t.reversed()));
    CHECK(composed.is_identity());
  }
}

TEST_CASE("digit reversal of a pair is a stride permutation") {
  for (std::size_t m : {2, 3, 4, 5})
    for (std::size_t n : {2, 3, 4, 7})
      CHECK(digit_reverse_perm(RadixTuple({m, n})) == stride_perm(m * n, n));
}

TEST_CASE("stride permutation") {
  CHECK(stride_perm(6, 2).forward() == std::vector<std::size_t>{0, 2, 4, 1, 3, 5});
  CHECK(stride_perm(6, 2)(4) == 3);  // 4 = 1*3+1 -> 1*2+1
  CHECK(stride_perm(8, 8).is_identity());
  CHECK(stride_perm(5, 1).is_identity());
  CHECK_THROWS_AS(stride_perm(6, 4), std::domain_error);
  CHECK_THROWS_AS(stride_perm(6, 0), std::domain_error);
}

TEST_CASE("stride permutation inverse swaps the factor pair") {
  for (std::size_t n = 1; n <= 256; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      if (n % k == 0) CHECK(stride_perm(n, k).inverted() == stride_perm(n, n / k));
}

TEST_CASE("stage permutations") {
  const RadixTuple alpha({2, 2});
  CHECK(stage_perm_a(alpha, 0).is_identity());
  CHECK(stage_perm_a(alpha, 1) == stride_perm(4, 2));
  CHECK_THROWS_AS(stage_perm_a(alpha, 2), std::domain_error);

  const RadixTuple beta({2, 2});
  CHECK(stage_perm_b(beta, 1).is_identity());
  CHECK(stage_perm_b(beta, 0) == stride_perm(4, 2));
  CHECK_THROWS_AS(stage_perm_b(beta, 2), std::domain_error);
}

TEST_CASE("dif stage permutation equals the mirrored dit one") {
  Rng rng(17);
  for (int i = 0; i < 15; ++i) {
    const RadixTuple beta = random_tuple(rng, 512);
    const RadixTuple alpha = beta.reversed();
    const std::size_t top = beta.top_stage();
    for (std::size_t k = 0; k <= top; ++k)
      CHECK(stage_perm_b(beta, k) == stage_perm_a(alpha, top - k));
  }
}

TEST_CASE("constructed permutations are bijections") {
  Rng rng(19);
  for (int i = 0; i < 10; ++i) {
    const RadixTuple t = random_tuple(rng, 1024);
    CHECK(is_bijection(digit_reverse_perm(t)));
    for (std::size_t k = 0; k <= t.top_stage(); ++k) {
      CHECK(is_bijection(stage_perm_a(t, k)));
      CHECK(is_bijection(stage_perm_b(t, k)));
    }
  }
  CHECK_THROWS_AS(IndexPermutation({0, 0, 1}), std::domain_error);
  CHECK_THROWS_AS(IndexPermutation({0, 3}), std::domain_error);
}

TEST_CASE("permutation composition and inversion") {
  const IndexPermutation p = stride_perm(6, 2);
  CHECK(compose(p.inverted(), p).is_identity());
  CHECK(compose(p, p.inverted()).is_identity());
  for (std::size_t n = 0; n < 6; ++n) CHECK(p.inverted()(p(n)) == n);
}

TEST_CASE("cycle decomposition applies permutations in place") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const RadixTuple t = random_tuple(rng, 256);
    const IndexPermutation p = digit_reverse_perm(t);
    const CycleDecomposition cycles(p);
    std::vector<std::size_t> v(p.size());
    std::iota(v.begin(), v.end(), std::size_t{0});

    std::vector<std::size_t> forward = v;
    cycles.apply_forward(std::span<std::size_t>(forward));
    for (std::size_t n = 0; n < p.size(); ++n) CHECK(forward[p(n)] == v[n]);

    cycles.apply_inverse(std::span<std::size_t>(forward));
    CHECK(forward == v);
  }
}
