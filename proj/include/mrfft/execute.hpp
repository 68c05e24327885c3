#ifndef MRFFT_EXECUTE_HPP
#define MRFFT_EXECUTE_HPP

#include <span>
#include <vector>

#include "mrfft/plan.hpp"

namespace mrfft {

/// y = F_r x for one butterfly; out and in must both have kernel.rows()
/// elements and may not alias. Accumulation runs in ascending index order
/// so results are reproducible across runs.
void butterfly_apply(const DenseMatrix& kernel, std::span<const Complex> in,
                     std::span<Complex> out);

/// Applies one stage in place: pre permutation, twiddle (before or after
/// the butterflies per the stage), independent radix-r butterflies on
/// consecutive blocks, post permutation. Allocates nothing for radix <= 64.
void execute_stage(const StagePlan& stage, std::span<Complex> buf);

/// In-place transform: buf <- F_n buf per the plan. Throws
/// std::domain_error if buf.size() != plan.n. Auxiliary storage is bounded
/// by the largest stage radix, independent of n.
void execute(const FftPlan& plan, std::span<Complex> buf);

/// Direct quadratic-time DFT with compensated (Kahan) accumulation; the
/// reference the executor is tested against.
std::vector<Complex> dft_oracle(std::span<const Complex> x);

/// max_i |a_i - b_i| / max_i |b_i|; 0/0 counts as 0.
double rel_linf_error(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace mrfft

#endif  // MRFFT_EXECUTE_HPP
