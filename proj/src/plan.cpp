#include "mrfft/plan.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace mrfft {

namespace {

StagePlan make_stage(std::size_t k, std::size_t radix, IndexPermutation pre,
                     TwiddleDiagonal twiddle, TwiddlePosition position, std::size_t perm_block,
                     std::size_t twiddle_tile, std::size_t n) {
  StagePlan stage{.stage_index = k,
                  .radix = radix,
                  .pre_perm = std::move(pre),
                  .post_perm = IndexPermutation::identity(0),
                  .twiddle = std::move(twiddle),
                  .twiddle_position = position,
                  .butterfly_count = n / radix,
                  .perm_block = perm_block,
                  .twiddle_tile = twiddle_tile,
                  .kernel = dft_matrix(radix),
                  .perm_cycles = CycleDecomposition(IndexPermutation::identity(0))};
  stage.post_perm = stage.pre_perm.inverted();
  stage.perm_cycles = CycleDecomposition(stage.pre_perm);
  return stage;
}

}  // namespace

std::string to_string(PlanKind kind) {
  switch (kind) {
    case PlanKind::dit: return "dit";
    case PlanKind::dif: return "dif";
    case PlanKind::dif_w: return "difw";
  }
  return "?";
}

PlanKind plan_kind_from_string(const std::string& name) {
  if (name == "dit") return PlanKind::dit;
  if (name == "dif") return PlanKind::dif;
  if (name == "difw" || name == "dif-w" || name == "dif_w") return PlanKind::dif_w;
  throw std::invalid_argument("unknown plan kind: " + name);
}

std::size_t FftPlan::max_radix() const {
  std::size_t r = 1;
  for (const StagePlan& s : stages) r = std::max(r, s.radix);
  return r;
}

RadixTuple factorize(std::size_t n) {
  if (n == 0) throw std::domain_error("cannot factorize 0");
  if (n == 1) return RadixTuple({1});
  std::vector<std::size_t> primes;  // ascending
  std::size_t rest = n;
  for (std::size_t p = 2; p * p <= rest; ++p) {
    while (rest % p == 0) {
      primes.push_back(p);
      rest /= p;
    }
  }
  if (rest > 1) primes.push_back(rest);
  // smallest prime is the least significant radix, i.e. last in stored order
  std::reverse(primes.begin(), primes.end());
  return RadixTuple(std::move(primes));
}

RadixTuple factorize(std::size_t n, const std::vector<std::size_t>& user_radices) {
  if (n == 0) throw std::domain_error("cannot factorize 0");
  RadixTuple tuple(user_radices);
  if (tuple.total() != n)
    throw std::invalid_argument("radix product " + std::to_string(tuple.total()) +
                                " does not equal n = " + std::to_string(n));
  return tuple;
}

FftPlan plan_dit(const RadixTuple& alpha) {
  const std::size_t n = alpha.total();
  FftPlan plan{.n = n,
               .kind = PlanKind::dit,
               .radices = alpha,
               .stages = {},
               .io_perm = digit_reverse_perm(alpha),
               .io_side = IoSide::input,
               .io_cycles = CycleDecomposition(IndexPermutation::identity(0))};
  plan.io_cycles = CycleDecomposition(plan.io_perm);
  for (std::size_t k = 0; k <= alpha.top_stage(); ++k) {
    const std::size_t block = alpha.prefix_product(k);
    plan.stages.push_back(make_stage(k, alpha.radix(k), stage_perm_a(alpha, k),
                                     stage_twiddle_dit(alpha, k),
                                     TwiddlePosition::before_butterfly, block, block, n));
  }
  return plan;
}

FftPlan plan_dif(const RadixTuple& beta) {
  const std::size_t n = beta.total();
  FftPlan plan{.n = n,
               .kind = PlanKind::dif,
               .radices = beta,
               .stages = {},
               .io_perm = digit_reverse_perm(beta),
               .io_side = IoSide::output,
               .io_cycles = CycleDecomposition(IndexPermutation::identity(0))};
  plan.io_cycles = CycleDecomposition(plan.io_perm);
  for (std::size_t k = 0; k <= beta.top_stage(); ++k) {
    const std::size_t block = beta.suffix_product(k);
    plan.stages.push_back(make_stage(k, beta.radix(k), stage_perm_b(beta, k),
                                     stage_twiddle_dif(beta, k),
                                     TwiddlePosition::after_butterfly, block, block, n));
  }
  return plan;
}

FftPlan plan_dif_w(const RadixTuple& beta) {
  const std::size_t n = beta.total();
  FftPlan plan{.n = n,
               .kind = PlanKind::dif_w,
               .radices = beta,
               .stages = {},
               .io_perm = digit_reverse_perm(beta),
               .io_side = IoSide::output,
               .io_cycles = CycleDecomposition(IndexPermutation::identity(0))};
  plan.io_cycles = CycleDecomposition(plan.io_perm);
  for (std::size_t k = 0; k <= beta.top_stage(); ++k) {
    const std::size_t block = beta.suffix_product(k);
    // Stage k multiplies by the previous stage's twiddle, commuted through
    // B_{k+1} B_k^{-1}; the first stage has nothing to absorb.
    TwiddleDiagonal twiddle =
        (k == 0) ? TwiddleDiagonal::identity(n) : stage_twiddle_difw(beta, k - 1);
    const std::size_t tile = (k == 0) ? 1 : beta.suffix_product(k - 1);
    plan.stages.push_back(make_stage(k, beta.radix(k), stage_perm_b(beta, k), std::move(twiddle),
                                     TwiddlePosition::before_butterfly, block, tile, n));
  }
  return plan;
}

FftPlan make_plan(PlanKind kind, const RadixTuple& radices) {
  switch (kind) {
    case PlanKind::dit: return plan_dit(radices);
    case PlanKind::dif: return plan_dif(radices);
    case PlanKind::dif_w: return plan_dif_w(radices);
  }
  throw std::invalid_argument("unknown plan kind");
}

namespace {

// Left-multiplication helpers for assemble_dense; m is updated in place.

void leftmul_permutation(DenseMatrix& m, const IndexPermutation& p, DenseMatrix& scratch) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    std::copy(m.row(i), m.row(i) + m.cols(), scratch.row(p(i)));
  std::swap(m, scratch);
}

void leftmul_diagonal(DenseMatrix& m, const TwiddleDiagonal& d) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Complex di = d.value(i);
    Complex* row = m.row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] *= di;
  }
}

void leftmul_butterflies(DenseMatrix& m, const DenseMatrix& kernel,
                         std::vector<Complex>& rowbuf) {
  const std::size_t r = kernel.rows();
  const std::size_t cols = m.cols();
  rowbuf.resize(r * cols);
  for (std::size_t base = 0; base < m.rows(); base += r) {
    for (std::size_t i = 0; i < r; ++i)
      std::copy(m.row(base + i), m.row(base + i) + cols, rowbuf.begin() + i * cols);
    for (std::size_t i = 0; i < r; ++i) {
      Complex* out = m.row(base + i);
      std::fill(out, out + cols, Complex{});
      for (std::size_t j = 0; j < r; ++j) {
        const Complex f = kernel.at(i, j);
        const Complex* in = rowbuf.data() + j * cols;
        for (std::size_t c = 0; c < cols; ++c) out[c] += f * in[c];
      }
    }
  }
}

}  // namespace

DenseMatrix assemble_dense(const FftPlan& plan, std::size_t dense_cap) {
  if (plan.n > dense_cap)
    throw std::length_error("plan size " + std::to_string(plan.n) +
                            " exceeds dense assembly cap " + std::to_string(dense_cap));
  DenseMatrix m = DenseMatrix::identity(plan.n);
  DenseMatrix scratch(plan.n, plan.n);
  std::vector<Complex> rowbuf;
  if (plan.io_side == IoSide::input) leftmul_permutation(m, plan.io_perm, scratch);
  for (const StagePlan& stage : plan.stages) {
    leftmul_permutation(m, stage.pre_perm, scratch);
    if (stage.twiddle_position == TwiddlePosition::before_butterfly)
      leftmul_diagonal(m, stage.twiddle);
    leftmul_butterflies(m, stage.kernel, rowbuf);
    if (stage.twiddle_position == TwiddlePosition::after_butterfly)
      leftmul_diagonal(m, stage.twiddle);
    leftmul_permutation(m, stage.post_perm, scratch);
  }
  if (plan.io_side == IoSide::output) leftmul_permutation(m, plan.io_perm, scratch);
  return m;
}

std::string plan_to_json(const FftPlan& plan, int indent) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["kind"] = to_string(plan.kind);
  doc["n"] = plan.n;
  doc["radices"] = plan.radices.values();
  doc["io_perm"] = {{"type", "digit_reversal"},
                    {"position", plan.io_side == IoSide::input ? "input" : "output"},
                    {"radices", plan.radices.values()}};
  nlohmann::ordered_json stages = nlohmann::ordered_json::array();
  for (const StagePlan& s : plan.stages) {
    nlohmann::ordered_json stage;
    stage["k"] = s.stage_index;
    stage["radix"] = s.radix;
    stage["butterflies"] = s.butterfly_count;
    // pre_perm = I_repeat (x) stride_perm(block, divisor); post_perm is its inverse
    stage["perm"] = {{"type", "block_stride"},
                     {"block", s.perm_block},
                     {"divisor", s.radix},
                     {"repeat", plan.n / s.perm_block}};
    std::vector<std::int64_t> tile(s.twiddle.exponents().begin(),
                                   s.twiddle.exponents().begin() +
                                       static_cast<std::ptrdiff_t>(s.twiddle_tile));
    stage["twiddle"] = {
        {"position",
         s.twiddle_position == TwiddlePosition::before_butterfly ? "before" : "after"},
        {"omega_den", s.twiddle.modulus()},
        {"omega_num", tile},
        {"repeat", plan.n / s.twiddle_tile}};
    stages.push_back(std::move(stage));
  }
  doc["stages"] = std::move(stages);
  return doc.dump(indent);
}

}  // namespace mrfft
