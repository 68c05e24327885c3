#include "mrfft/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "mrfft/execute.hpp"
#include "mrfft/rng.hpp"

namespace mrfft {

namespace {

std::string tuple_str(const RadixTuple& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.values().size(); ++i) {
    if (i) os << ',';
    os << t.values()[i];
  }
  os << ')';
  return os.str();
}

void enumerate_rec(std::span<const std::size_t> set, std::size_t max_total,
                   std::vector<std::size_t>& cur, std::size_t product,
                   std::vector<RadixTuple>& out) {
  if (cur.size() > 0 && product >= 2) out.emplace_back(cur);
  for (std::size_t r : set) {
    if (product > max_total / r) continue;
    cur.push_back(r);
    enumerate_rec(set, max_total, cur, product * r, out);
    cur.pop_back();
  }
}

const DenseMatrix& cached_dft(std::size_t n, std::map<std::size_t, DenseMatrix>& cache) {
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, dft_matrix(n)).first;
  return it->second;
}

}  // namespace

std::vector<RadixTuple> enumerate_radix_tuples(std::span<const std::size_t> radix_set,
                                               std::size_t max_total) {
  std::vector<RadixTuple> out;
  std::vector<std::size_t> cur;
  enumerate_rec(radix_set, max_total, cur, 1, out);
  return out;
}

CheckResult check_stride_inverse_transpose(std::size_t max_n) {
  CheckResult res;
  res.name = "stride_inverse_transpose";
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      if (n % k != 0) continue;
      const std::size_t m = n / k;
      const IndexPermutation lk = stride_perm(n, k);
      const IndexPermutation lm = stride_perm(n, m);
      ++res.cases;
      if (lk.inverted() != lm) res.fail("inverse mismatch at n=" + std::to_string(n) +
                                        " k=" + std::to_string(k));
      const double err =
          max_abs_diff(dense_of_permutation(lk), transpose(dense_of_permutation(lm)));
      res.merge_err(err);
      if (err > 0.0) res.fail("transpose mismatch at n=" + std::to_string(n) +
                              " k=" + std::to_string(k));
    }
  }
  return res;
}

CheckResult check_twiddle_exchange(std::size_t max_n) {
  CheckResult res;
  res.name = "twiddle_exchange";
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      const std::size_t k = n / m;
      const DenseMatrix lhs = dense_of_diagonal(twiddle_w(n, m));
      const DenseMatrix rhs =
          matmul(dense_of_permutation(stride_perm(n, m)),
                 matmul(dense_of_diagonal(twiddle_w(n, k)),
                        dense_of_permutation(stride_perm(n, k))));
      ++res.cases;
      const double err = max_abs_diff(lhs, rhs);
      res.merge_err(err);
      if (err > tol::dense)
        res.fail("n=" + std::to_string(n) + " m=" + std::to_string(m) +
                 " err=" + std::to_string(err));
    }
  }
  return res;
}

CheckResult check_kron_commutation(std::size_t max_n) {
  CheckResult res;
  res.name = "kron_commutation";
  std::map<std::size_t, DenseMatrix> cache;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      if (n % k != 0) continue;
      const std::size_t m = n / k;
      const DenseMatrix lhs =
          matmul(dense_of_permutation(stride_perm(n, k)),
                 matmul(kron(DenseMatrix::identity(k), cached_dft(m, cache)),
                        dense_of_permutation(stride_perm(n, m))));
      const DenseMatrix rhs = kron(cached_dft(m, cache), DenseMatrix::identity(k));
      ++res.cases;
      const double err = max_abs_diff(lhs, rhs);
      res.merge_err(err);
      if (err > tol::dense)
        res.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) +
                 " err=" + std::to_string(err));
    }
  }
  return res;
}

CheckResult check_dft_splitting(std::size_t max_n) {
  CheckResult res;
  res.name = "dft_splitting";
  std::map<std::size_t, DenseMatrix> cache;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      if (n % k != 0) continue;
      const std::size_t m = n / k;
      const DenseMatrix rhs =
          matmul(dense_of_permutation(stride_perm(n, k)),
                 matmul(kron(DenseMatrix::identity(k), cached_dft(m, cache)),
                        matmul(dense_of_diagonal(twiddle_w(n, m)),
                               kron(cached_dft(k, cache), DenseMatrix::identity(m)))));
      ++res.cases;
      const double err = max_abs_diff(cached_dft(n, cache), rhs);
      res.merge_err(err);
      if (err > tol::dense)
        res.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) +
                 " err=" + std::to_string(err));
    }
  }
  return res;
}

CheckResult check_dft_splitting_symmetric(std::size_t max_n) {
  CheckResult res;
  res.name = "dft_splitting_symmetric";
  std::map<std::size_t, DenseMatrix> cache;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      if (n % k != 0) continue;
      const std::size_t m = n / k;
      DenseMatrix rhs = dense_of_permutation(stride_perm(n, k));
      rhs = matmul(kron(DenseMatrix::identity(m), cached_dft(k, cache)), rhs);
      rhs = matmul(dense_of_permutation(stride_perm(n, m)), rhs);
      rhs = matmul(dense_of_diagonal(twiddle_w(n, m)), rhs);
      rhs = matmul(kron(DenseMatrix::identity(k), cached_dft(m, cache)), rhs);
      rhs = matmul(dense_of_permutation(stride_perm(n, k)), rhs);
      ++res.cases;
      const double err = max_abs_diff(cached_dft(n, cache), rhs);
      res.merge_err(err);
      if (err > tol::dense)
        res.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) +
                 " err=" + std::to_string(err));
    }
  }
  return res;
}

CheckResult check_digit_reversal_recursion(std::size_t max_total,
                                           std::span<const std::size_t> radix_set,
                                           std::span<const std::size_t> extensions) {
  CheckResult res;
  res.name = "digit_reversal_recursion";
  for (const RadixTuple& alpha : enumerate_radix_tuples(radix_set, max_total)) {
    const std::size_t n = alpha.total();
    const IndexPermutation s_alpha = digit_reverse_perm(alpha);
    for (std::size_t m : extensions) {
      if (m == 0 || n > max_total / m) continue;
      // prepend m as the new most significant radix
      std::vector<std::size_t> pre = {m};
      pre.insert(pre.end(), alpha.values().begin(), alpha.values().end());
      const IndexPermutation lhs_pre = digit_reverse_perm(RadixTuple(pre));
      const IndexPermutation rhs_pre =
          compose(identity_kron(m, s_alpha), stride_perm(n * m, n));
      // append m as the new least significant radix
      std::vector<std::size_t> post(alpha.values());
      post.push_back(m);
      const IndexPermutation lhs_post = digit_reverse_perm(RadixTuple(post));
      const IndexPermutation rhs_post =
          compose(stride_perm(n * m, m), identity_kron(m, s_alpha));
      ++res.cases;
      if (lhs_pre != rhs_pre)
        res.fail("prepend case alpha=" + tuple_str(alpha) + " M=" + std::to_string(m));
      if (lhs_post != rhs_post)
        res.fail("append case alpha=" + tuple_str(alpha) + " M=" + std::to_string(m));
    }
  }
  return res;
}

CheckResult check_stage_perm_digit_rotation(std::size_t max_total, std::size_t tuple_trials,
                                            std::uint64_t seed) {
  CheckResult res;
  res.name = "stage_perm_digit_rotation";
  Rng rng(seed);
  std::vector<RadixTuple> tuples;
  tuples.push_back(RadixTuple({1}));
  tuples.push_back(RadixTuple({2, 2}));
  tuples.push_back(RadixTuple({2, 3}));
  tuples.push_back(RadixTuple({3, 1, 4}));
  for (std::size_t t = 0; t < tuple_trials; ++t) {
    std::vector<std::size_t> radices;
    std::size_t product = 1;
    do {
      const std::size_t r = 1 + rng.below(8);
      if (product > max_total / r) break;
      radices.push_back(r);
      product *= r;
    } while (rng.below(5) != 0 || radices.size() < 2);
    if (radices.empty()) radices.push_back(2);
    tuples.emplace_back(std::move(radices));
  }

  for (const RadixTuple& alpha : tuples) {
    const std::size_t big_k = alpha.top_stage();
    const auto& a = alpha.values();  // a[i] = n_{K-i}
    if (!stage_perm_a(alpha, 0).is_identity()) {
      res.fail("stage 0 not identity for alpha=" + tuple_str(alpha));
    }
    ++res.cases;
    for (std::size_t k = 1; k <= big_k; ++k) {
      // numbering system before the stage: (n_K..n_k, n_0..n_{k-1})
      std::vector<std::size_t> before(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(big_k - k + 1));
      for (std::size_t j = 0; j < k; ++j) before.push_back(a[big_k - j]);
      // after the stage the k-th digit drops to the least significant slot
      std::vector<std::size_t> after(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(big_k - k));
      for (std::size_t j = 0; j <= k; ++j) after.push_back(a[big_k - j]);
      const RadixTuple sys_before(before), sys_after(after);
      const IndexPermutation ak = stage_perm_a(alpha, k);
      ++res.cases;
      for (std::size_t n = 0; n < alpha.total(); ++n) {
        DigitVector d = digit_decode(n, sys_before);
        std::vector<std::size_t> rotated(d.digits.begin(),
                                         d.digits.begin() + static_cast<std::ptrdiff_t>(big_k - k));
        rotated.insert(rotated.end(), d.digits.begin() + static_cast<std::ptrdiff_t>(big_k - k + 1),
                       d.digits.end());
        rotated.push_back(d.digits[big_k - k]);
        const std::size_t expected = digit_encode(DigitVector{std::move(rotated)}, sys_after);
        if (ak(n) != expected) {
          res.fail("alpha=" + tuple_str(alpha) + " k=" + std::to_string(k) +
                   " n=" + std::to_string(n) + ": got " + std::to_string(ak(n)) + ", digits say " +
                   std::to_string(expected));
          break;
        }
      }
    }
  }
  return res;
}

CheckResult check_plan_dense(PlanKind kind, std::size_t max_total,
                             std::span<const std::size_t> radix_set, double tolerance) {
  CheckResult res;
  res.name = "plan_dense_" + to_string(kind);
  std::map<std::size_t, DenseMatrix> cache;
  for (const RadixTuple& tuple : enumerate_radix_tuples(radix_set, max_total)) {
    const FftPlan plan = make_plan(kind, tuple);
    const double err = max_abs_diff(assemble_dense(plan), cached_dft(plan.n, cache));
    ++res.cases;
    res.merge_err(err);
    if (err > tolerance)
      res.fail("tuple=" + tuple_str(tuple) + " err=" + std::to_string(err));
  }
  return res;
}

CheckResult check_twiddle_rearrangement(std::size_t max_total,
                                        std::span<const std::size_t> radix_set) {
  CheckResult res;
  res.name = "twiddle_rearrangement";
  for (const RadixTuple& beta : enumerate_radix_tuples(radix_set, max_total)) {
    const std::size_t big_k = beta.top_stage();
    for (std::size_t k = 0; k + 1 <= big_k; ++k) {
      const TwiddleDiagonal w = stage_twiddle_dif(beta, k);
      const TwiddleDiagonal x = stage_twiddle_difw(beta, k);
      const IndexPermutation shuffle =
          compose(stage_perm_b(beta, k + 1), stage_perm_b(beta, k).inverted());
      ++res.cases;
      if (w.modulus() != x.modulus()) {
        res.fail("modulus mismatch beta=" + tuple_str(beta) + " k=" + std::to_string(k));
        continue;
      }
      for (std::size_t n = 0; n < beta.total(); ++n) {
        if (w.exponents()[n] != x.exponents()[shuffle(n)]) {
          res.fail("beta=" + tuple_str(beta) + " k=" + std::to_string(k) +
                   " n=" + std::to_string(n));
          break;
        }
      }
    }
  }
  return res;
}

CheckResult check_plan_duality(std::size_t max_total, std::span<const std::size_t> radix_set) {
  CheckResult res;
  res.name = "dit_dif_duality";
  for (const RadixTuple& beta : enumerate_radix_tuples(radix_set, max_total)) {
    const FftPlan dif = plan_dif(beta);
    const FftPlan dit = plan_dit(beta.reversed());
    const std::size_t big_k = beta.top_stage();
    ++res.cases;
    for (std::size_t k = 0; k <= big_k; ++k) {
      const StagePlan& s_dif = dif.stages[big_k - k];
      const StagePlan& s_dit = dit.stages[k];
      if (s_dif.pre_perm != s_dit.pre_perm || s_dif.radix != s_dit.radix ||
          s_dif.twiddle.modulus() != s_dit.twiddle.modulus() ||
          s_dif.twiddle.exponents() != s_dit.twiddle.exponents()) {
        res.fail("beta=" + tuple_str(beta) + " k=" + std::to_string(k));
        break;
      }
    }
  }
  return res;
}

CheckResult check_twiddle_unit_modulus(std::size_t max_n) {
  CheckResult res;
  res.name = "twiddle_unit_modulus";
  auto scan = [&res](const TwiddleDiagonal& d) {
    ++res.cases;
    for (const Complex& z : d.values()) res.merge_err(std::abs(std::abs(z) - 1.0));
  };
  for (std::size_t n = 1; n <= max_n; ++n)
    for (std::size_t m = 1; m <= n; ++m)
      if (n % m == 0) scan(twiddle_w(n, m));
  const std::size_t small = std::min<std::size_t>(max_n, 5);
  for (std::size_t k = 1; k <= small; ++k)
    for (std::size_t m = 1; m <= small; ++m)
      for (std::size_t l = 1; l <= small; ++l) scan(twiddle_v(k, m, l));
  if (res.max_err > tol::unit_modulus) res.fail("max deviation " + std::to_string(res.max_err));
  return res;
}

CheckResult check_dft_unitarity(std::size_t max_n) {
  CheckResult res;
  res.name = "dft_unitarity";
  for (std::size_t n = 1; n <= max_n; ++n) {
    const DenseMatrix f = dft_matrix(n);
    DenseMatrix scaled = DenseMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) scaled.at(i, i) = static_cast<double>(n);
    ++res.cases;
    const double err = max_abs_diff(matmul(f, conjugate(f)), scaled);
    res.merge_err(err);
    if (err > tol::dense * static_cast<double>(n))
      res.fail("n=" + std::to_string(n) + " err=" + std::to_string(err));
  }
  return res;
}

namespace {

// Conjugates the twiddle entry with the largest imaginary part anywhere in
// the plan; returns its coordinates, or an empty string if every twiddle is
// real (nothing worth corrupting).
std::string inject_twiddle_fault(FftPlan& plan) {
  std::size_t best_stage = 0, best_entry = 0;
  double best = 0.0;
  for (std::size_t k = 0; k < plan.stages.size(); ++k) {
    const auto& vals = plan.stages[k].twiddle.values();
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (std::abs(vals[i].imag()) > best) {
        best = std::abs(vals[i].imag());
        best_stage = k;
        best_entry = i;
      }
    }
  }
  if (best == 0.0) return "";
  const TwiddleDiagonal& d = plan.stages[best_stage].twiddle;
  std::vector<std::int64_t> exps = d.exponents();
  exps[best_entry] =
      static_cast<std::int64_t>(d.modulus()) - exps[best_entry];  // conjugate = sign swap
  plan.stages[best_stage].twiddle = TwiddleDiagonal(d.modulus(), std::move(exps));
  return "stage=" + std::to_string(best_stage) + " entry=" + std::to_string(best_entry);
}

}  // namespace

CheckResult check_executor_vs_oracle(const ExecCheckOptions& opts) {
  CheckResult res;
  res.name = "executor_vs_oracle";
  bool fault_armed = opts.inject_fault;
  for (std::size_t n : opts.sizes) {
    Rng rng(opts.seed ^ (0x9e3779b97f4a7c15ULL * n));
    std::vector<std::vector<Complex>> inputs;
    std::vector<std::vector<Complex>> expected;
    for (std::size_t t = 0; t < opts.trials; ++t) {
      inputs.push_back(rng.complex_vector(n));
      expected.push_back(dft_oracle(inputs.back()));
    }
    for (PlanKind kind : opts.kinds) {
      FftPlan plan = make_plan(kind, factorize(n));
      std::string fault_where;
      if (fault_armed) {
        fault_where = inject_twiddle_fault(plan);
        if (!fault_where.empty()) fault_armed = false;
      }
      for (std::size_t t = 0; t < opts.trials; ++t) {
        std::vector<Complex> buf = inputs[t];
        execute(plan, buf);
        const double err = rel_linf_error(buf, expected[t]);
        ++res.cases;
        res.merge_err(err);
        if (err > opts.tolerance) {
          std::string why = "kind=" + to_string(kind) + " n=" + std::to_string(n) +
                            " trial=" + std::to_string(t) + " err=" + std::to_string(err);
          if (!fault_where.empty()) why += " (fault injected at " + fault_where + ")";
          res.fail(why);
        }
      }
    }
  }
  return res;
}

CheckResult check_cross_kind_agreement(std::span<const std::size_t> sizes, std::size_t trials,
                                       double tolerance, std::uint64_t seed) {
  CheckResult res;
  res.name = "cross_kind_agreement";
  for (std::size_t n : sizes) {
    const RadixTuple tuple = factorize(n);
    const FftPlan dit = plan_dit(tuple);
    const FftPlan dif = plan_dif(tuple);
    const FftPlan difw = plan_dif_w(tuple);
    Rng rng(seed ^ (0xbf58476d1ce4e5b9ULL * n));
    for (std::size_t t = 0; t < trials; ++t) {
      const std::vector<Complex> x = rng.complex_vector(n);
      std::vector<Complex> a = x, b = x, c = x;
      execute(dit, a);
      execute(dif, b);
      execute(difw, c);
      const double err = std::max(rel_linf_error(b, a), rel_linf_error(c, a));
      ++res.cases;
      res.merge_err(err);
      if (err > tolerance)
        res.fail("n=" + std::to_string(n) + " trial=" + std::to_string(t) +
                 " err=" + std::to_string(err));
    }
  }
  return res;
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  const std::size_t idcap = std::min<std::size_t>(opts.max_n, 64);
  const std::size_t tuple_cap = std::min<std::size_t>(opts.max_n * 4, 256);
  const std::size_t rotation_cap = std::min<std::size_t>(opts.max_n * 16, 1024);
  static constexpr std::size_t kTupleRadices[] = {2, 3, 4, 5, 8};
  static constexpr std::size_t kRecursionRadices[] = {2, 3, 4, 5};
  static constexpr std::size_t kExtensions[] = {1, 2, 3, 4, 5};
  static constexpr std::size_t kExecSizes[] = {1,  2,  4,  6,  8,  9,   12,  16,  20,  24,
                                               30, 36, 48, 60, 64, 100, 120, 128, 240, 360,
                                               500, 512, 729, 1000, 1024};

  std::vector<std::size_t> exec_sizes;
  for (std::size_t n : kExecSizes)
    if (n <= opts.max_n) exec_sizes.push_back(n);
  if (exec_sizes.empty()) exec_sizes.push_back(1);

  std::vector<CheckResult> results;
  results.push_back(check_stride_inverse_transpose(idcap));
  results.push_back(check_twiddle_exchange(idcap));
  results.push_back(check_kron_commutation(idcap));
  results.push_back(check_dft_splitting(idcap));
  results.push_back(check_dft_splitting_symmetric(idcap));
  results.push_back(check_digit_reversal_recursion(tuple_cap, kRecursionRadices, kExtensions));
  results.push_back(check_stage_perm_digit_rotation(rotation_cap, 40, opts.seed));
  for (PlanKind kind : opts.kinds)
    results.push_back(check_plan_dense(kind, tuple_cap, kTupleRadices, tol::dense));
  results.push_back(check_twiddle_rearrangement(tuple_cap, kTupleRadices));
  results.push_back(check_plan_duality(tuple_cap, kTupleRadices));
  results.push_back(check_twiddle_unit_modulus(idcap));
  results.push_back(check_dft_unitarity(idcap));
  results.push_back(check_executor_vs_oracle(ExecCheckOptions{.sizes = exec_sizes,
                                                              .kinds = opts.kinds,
                                                              .trials = 3,
                                                              .tolerance = opts.exec_tolerance,
                                                              .seed = opts.seed,
                                                              .inject_fault = opts.inject_fault}));
  results.push_back(
      check_cross_kind_agreement(exec_sizes, 3, tol::cross_kind, opts.seed));
  return results;
}

}  // namespace mrfft
