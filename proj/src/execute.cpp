#include "mrfft/execute.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mrfft {

namespace {

constexpr std::size_t kStackRadixCap = 64;

void butterfly2(Complex* v) {
  const Complex a = v[0], b = v[1];
  v[0] = a + b;
  v[1] = a - b;
}

void butterfly3(const DenseMatrix& kernel, Complex* v) {
  const Complex w1 = kernel.at(1, 1), w2 = kernel.at(1, 2);
  const Complex a = v[0], b = v[1], c = v[2];
  v[0] = a + b + c;
  v[1] = a + w1 * b + w2 * c;
  v[2] = a + w2 * b + w1 * c;
}

void butterfly4(Complex* v) {
  const Complex a = v[0], b = v[1], c = v[2], d = v[3];
  const Complex ac_p = a + c, ac_m = a - c;
  const Complex bd_p = b + d;
  const Complex bd_m_rot{b.imag() - d.imag(), d.real() - b.real()};  // -i (b - d)
  v[0] = ac_p + bd_p;
  v[1] = ac_m + bd_m_rot;
  v[2] = ac_p - bd_p;
  v[3] = ac_m - bd_m_rot;
}

void butterfly_generic(const DenseMatrix& kernel, Complex* v, Complex* scratch) {
  const std::size_t r = kernel.rows();
  for (std::size_t i = 0; i < r; ++i) scratch[i] = v[i];
  for (std::size_t i = 0; i < r; ++i) {
    Complex acc{};
    const Complex* row = kernel.row(i);
    for (std::size_t j = 0; j < r; ++j) acc += row[j] * scratch[j];
    v[i] = acc;
  }
}

void run_butterflies(const StagePlan& stage, std::span<Complex> buf) {
  const std::size_t r = stage.radix;
  if (r == 1) return;
  if (r == 2) {
    for (std::size_t base = 0; base < buf.size(); base += 2) butterfly2(&buf[base]);
  } else if (r == 3) {
    for (std::size_t base = 0; base < buf.size(); base += 3)
      butterfly3(stage.kernel, &buf[base]);
  } else if (r == 4) {
    for (std::size_t base = 0; base < buf.size(); base += 4) butterfly4(&buf[base]);
  } else if (r <= kStackRadixCap) {
    std::array<Complex, kStackRadixCap> scratch;
    for (std::size_t base = 0; base < buf.size(); base += r)
      butterfly_generic(stage.kernel, &buf[base], scratch.data());
  } else {
    std::vector<Complex> scratch(r);
    for (std::size_t base = 0; base < buf.size(); base += r)
      butterfly_generic(stage.kernel, &buf[base], scratch.data());
  }
}

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

void butterfly_apply(const DenseMatrix& kernel, std::span<const Complex> in,
                     std::span<Complex> out) {
  if (in.size() != kernel.rows() || out.size() != kernel.rows())
    throw std::domain_error("butterfly block length does not match radix");
  for (std::size_t i = 0; i < kernel.rows(); ++i) {
    Complex acc{};
    const Complex* row = kernel.row(i);
    for (std::size_t j = 0; j < kernel.cols(); ++j) acc += row[j] * in[j];
    out[i] = acc;
  }
}

void execute_stage(const StagePlan& stage, std::span<Complex> buf) {
  if (buf.size() != stage.pre_perm.size())
    throw std::domain_error("buffer length does not match stage size");
  stage.perm_cycles.apply_forward(buf);
  if (stage.twiddle_position == TwiddlePosition::before_butterfly)
    apply_diagonal_inplace(buf, stage.twiddle);
  run_butterflies(stage, buf);
  if (stage.twiddle_position == TwiddlePosition::after_butterfly)
    apply_diagonal_inplace(buf, stage.twiddle);
  stage.perm_cycles.apply_inverse(buf);
}

void execute(const FftPlan& plan, std::span<Complex> buf) {
  if (buf.size() != plan.n) throw std::domain_error("buffer length does not match plan");
  if (plan.io_side == IoSide::input) plan.io_cycles.apply_forward(buf);
  for (const StagePlan& stage : plan.stages) execute_stage(stage, buf);
  if (plan.io_side == IoSide::output) plan.io_cycles.apply_forward(buf);
}

std::vector<Complex> dft_oracle(std::span<const Complex> x) {
  const std::size_t n = x.size();
  if (n == 0) throw std::domain_error("dft_oracle requires a nonempty input");
  std::vector<Complex> twiddle(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    twiddle[j] = {std::cos(angle), std::sin(angle)};
  }
  std::vector<Complex> y(n);
  for (std::size_t k = 0; k < n; ++k) {
    KahanSum re, im;
    for (std::size_t l = 0; l < n; ++l) {
      const Complex w = twiddle[k * l % n];
      re.add(w.real() * x[l].real() - w.imag() * x[l].imag());
      im.add(w.real() * x[l].imag() + w.imag() * x[l].real());
    }
    y[k] = {re.sum, im.sum};
  }
  return y;
}

double rel_linf_error(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw std::domain_error("length mismatch");
  double diff = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff = std::max(diff, std::abs(a[i] - b[i]));
    scale = std::max(scale, std::abs(b[i]));
  }
  if (diff == 0.0) return 0.0;
  return scale == 0.0 ? diff : diff / scale;
}

}  // namespace mrfft
