#ifndef MRFFT_PLAN_HPP
#define MRFFT_PLAN_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mrfft/operators.hpp"
#include "mrfft/radix.hpp"

namespace mrfft {

enum class PlanKind { dit, dif, dif_w };

enum class TwiddlePosition { before_butterfly, after_butterfly };

enum class IoSide { input, output };

std::string to_string(PlanKind kind);
PlanKind plan_kind_from_string(const std::string& name);

/// One factorization stage: permute in, twiddle before or after the tiled
/// radix-r butterflies, permute back out. post_perm is always the inverse
/// of pre_perm, so a stage leaves data in natural order.
struct StagePlan {
  std::size_t stage_index = 0;
  std::size_t radix = 1;
  IndexPermutation pre_perm;
  IndexPermutation post_perm;
  TwiddleDiagonal twiddle;
  TwiddlePosition twiddle_position = TwiddlePosition::before_butterfly;
  std::size_t butterfly_count = 0;

  std::size_t perm_block = 1;    // pre_perm = I (x) stride_perm(perm_block, radix)
  std::size_t twiddle_tile = 1;  // twiddle repeats in tiles of this length

  DenseMatrix kernel;            // dft_matrix(radix), owned by the plan
  CycleDecomposition perm_cycles;
};

/// Ordered stage list plus the digit-reversal permutation on the input
/// (decimation in time) or output (decimation in frequency) side.
/// Stages are stored in application order; immutable once built.
struct FftPlan {
  std::size_t n = 1;
  PlanKind kind = PlanKind::dit;
  RadixTuple radices;
  std::vector<StagePlan> stages;
  IndexPermutation io_perm;
  IoSide io_side = IoSide::input;
  CycleDecomposition io_cycles;

  std::size_t stage_count() const { return stages.size(); }
  std::size_t max_radix() const;
};

/// Greedy factorization: prime factors assigned ascending to stages, so the
/// smallest prime lands at the least significant position.
RadixTuple factorize(std::size_t n);

/// User-supplied stage radices (most significant first). Throws
/// std::invalid_argument if the product is not n.
RadixTuple factorize(std::size_t n, const std::vector<std::size_t>& user_radices);

FftPlan plan_dit(const RadixTuple& alpha);
FftPlan plan_dif(const RadixTuple& beta);
FftPlan plan_dif_w(const RadixTuple& beta);

FftPlan make_plan(PlanKind kind, const RadixTuple& radices);

/// Multiplies out the io permutation and every stage factor in application
/// order into one dense n-by-n matrix; the oracle realization of the plan.
/// Throws std::length_error when n exceeds the cap.
DenseMatrix assemble_dense(const FftPlan& plan, std::size_t dense_cap = 4096);

/// JSON description of a plan: kind, radices, per-stage permutation
/// descriptors, and twiddles as integer exponent pairs of the unit root
/// (never floats). schema field is 1.
std::string plan_to_json(const FftPlan& plan, int indent = 2);

}  // namespace mrfft

#endif  // MRFFT_PLAN_HPP
