#ifndef MRFFT_VERIFY_HPP
#define MRFFT_VERIFY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mrfft/plan.hpp"

namespace mrfft {

namespace tol {
inline constexpr double dense = 1e-12;       // dense operator identities
inline constexpr double unit_modulus = 1e-12;
inline constexpr double exec_rel = 1e-9;     // executor vs oracle, relative L-inf
inline constexpr double cross_kind = 1e-10;  // plan kinds against each other
}  // namespace tol

/// Outcome of one named identity or oracle check.
struct CheckResult {
  std::string name;
  bool pass = true;
  double max_err = 0.0;
  std::size_t cases = 0;
  std::string detail;

  void merge_err(double err) { max_err = err > max_err ? err : max_err; }
  void fail(std::string why) {
    pass = false;
    if (detail.empty()) detail = std::move(why);
  }
};

/// All ordered radix tuples over the given set with total size in [2, max_total].
std::vector<RadixTuple> enumerate_radix_tuples(std::span<const std::size_t> radix_set,
                                               std::size_t max_total);

// Dense operator identities, checked for every factor pair of every n <= max_n.
CheckResult check_stride_inverse_transpose(std::size_t max_n);
CheckResult check_twiddle_exchange(std::size_t max_n);
CheckResult check_kron_commutation(std::size_t max_n);
CheckResult check_dft_splitting(std::size_t max_n);
CheckResult check_dft_splitting_symmetric(std::size_t max_n);

/// Digit-reversal recursion: prepending or appending one radix factors the
/// reversal permutation through a stride permutation. Integer-exact.
CheckResult check_digit_reversal_recursion(std::size_t max_total,
                                           std::span<const std::size_t> radix_set,
                                           std::span<const std::size_t> extensions);

/// Digit-rotation form of the DIT stage permutation, checked against
/// digit_decode/digit_encode for seeded random tuples, all stages, all
/// indices.
CheckResult check_stage_perm_digit_rotation(std::size_t max_total, std::size_t tuple_trials,
                                            std::uint64_t seed);

/// Dense plan assembly equals the DFT matrix for every tuple over the set.
CheckResult check_plan_dense(PlanKind kind, std::size_t max_total,
                             std::span<const std::size_t> radix_set, double tolerance);

/// The twiddle-rearrangement identity behind the before-butterfly variant,
/// compared exponent-by-exponent (integer-exact).
CheckResult check_twiddle_rearrangement(std::size_t max_total,
                                        std::span<const std::size_t> radix_set);

/// Stage-by-stage duality between the DIT plan of a tuple and the DIF plan
/// of its reversal.
CheckResult check_plan_duality(std::size_t max_total, std::span<const std::size_t> radix_set);

CheckResult check_twiddle_unit_modulus(std::size_t max_n);
CheckResult check_dft_unitarity(std::size_t max_n);

struct ExecCheckOptions {
  std::vector<std::size_t> sizes;
  std::vector<PlanKind> kinds{PlanKind::dit, PlanKind::dif, PlanKind::dif_w};
  std::size_t trials = 10;
  double tolerance = tol::exec_rel;
  std::uint64_t seed = 1;
  bool inject_fault = false;  // harness self-test: conjugates one twiddle entry
};

CheckResult check_executor_vs_oracle(const ExecCheckOptions& opts);
CheckResult check_cross_kind_agreement(std::span<const std::size_t> sizes, std::size_t trials,
                                       double tolerance, std::uint64_t seed);

struct VerifyOptions {
  std::size_t max_n = 64;
  std::vector<PlanKind> kinds{PlanKind::dit, PlanKind::dif, PlanKind::dif_w};
  std::uint64_t seed = 1;
  double exec_tolerance = tol::exec_rel;
  bool inject_fault = false;
};

/// Runs the whole named suite scaled to max_n; results come back in a fixed
/// order regardless of how checks are scheduled.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace mrfft

#endif  // MRFFT_VERIFY_HPP
