#ifndef MRFFT_RNG_HPP
#define MRFFT_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "mrfft/operators.hpp"

namespace mrfft {

/// Seeded generator producing identical streams on every platform; the
/// double conversion avoids std::uniform_real_distribution, whose output
/// is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double symmetric() { return 2.0 * uniform() - 1.0; }

  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(gen_() % bound); }

  Complex complex_sample() {
    const double re = symmetric();
    return {re, symmetric()};
  }

  std::vector<Complex> complex_vector(std::size_t n) {
    std::vector<Complex> v(n);
    for (Complex& z : v) z = complex_sample();
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace mrfft

#endif  // MRFFT_RNG_HPP
