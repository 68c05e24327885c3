// Command-line front end: plan inspection, transform execution, identity
// verification, and accelerator access-pattern simulation.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mrfft/accel.hpp"
#include "mrfft/execute.hpp"
#include "mrfft/io.hpp"
#include "mrfft/plan.hpp"
#include "mrfft/verify.hpp"

namespace {

// Exit codes: 0 success, 2 flag parse error, 3 precondition or config
// violation, 4 verification failure, 5 I/O error.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitConfig = 3;
constexpr int kExitVerifyFailed = 4;
constexpr int kExitIo = 5;

double default_tolerance() {
  if (const char* env = std::getenv("MRFFT_TOLERANCE")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0) return v;
    std::cerr << "warning: ignoring malformed MRFFT_TOLERANCE='" << env << "'\n";
  }
  return mrfft::tol::exec_rel;
}

std::vector<mrfft::PlanKind> parse_kinds(const std::string& csv) {
  std::vector<mrfft::PlanKind> kinds;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = csv.find(',', pos);
    const std::string item = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!item.empty()) kinds.push_back(mrfft::plan_kind_from_string(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (kinds.empty()) throw std::invalid_argument("no plan kinds given");
  return kinds;
}

mrfft::RadixTuple tuple_for(std::size_t n, const std::vector<std::size_t>& radices) {
  return radices.empty() ? mrfft::factorize(n) : mrfft::factorize(n, radices);
}

struct PlanArgs {
  std::size_t n = 0;
  std::string kind = "dit";
  std::vector<std::size_t> radices;
};

int run_plan(const PlanArgs& args) {
  const mrfft::FftPlan plan =
      mrfft::make_plan(mrfft::plan_kind_from_string(args.kind), tuple_for(args.n, args.radices));
  std::cout << mrfft::plan_to_json(plan) << '\n';
  return kExitOk;
}

struct FftArgs {
  std::string input = "-";
  std::string output = "-";
  std::string kind = "dit";
  std::vector<std::size_t> radices;
  bool verify = false;
  double tolerance = 0.0;
};

int run_fft(const FftArgs& args) {
  const std::vector<mrfft::Complex> x = mrfft::read_vector_file(args.input);
  if (x.empty()) throw std::domain_error("input vector is empty");
  const mrfft::FftPlan plan =
      mrfft::make_plan(mrfft::plan_kind_from_string(args.kind), tuple_for(x.size(), args.radices));
  std::vector<mrfft::Complex> y = x;
  mrfft::execute(plan, y);
  mrfft::write_vector_file(args.output, y);
  if (args.verify) {
    const double err = mrfft::rel_linf_error(y, mrfft::dft_oracle(x));
    std::fprintf(stderr, "max_rel_error %.6e (tolerance %.6e)\n", err, args.tolerance);
    if (err > args.tolerance) return kExitVerifyFailed;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::size_t max_n = 64;
  std::string kinds = "dit,dif,difw";
  std::uint64_t seed = 1;
  double tolerance = 0.0;
  bool inject_fault = false;
};

int run_verify(const VerifyArgs& args) {
  const std::vector<mrfft::CheckResult> results =
      mrfft::run_verification(mrfft::VerifyOptions{.max_n = args.max_n,
                                                   .kinds = parse_kinds(args.kinds),
                                                   .seed = args.seed,
                                                   .exec_tolerance = args.tolerance,
                                                   .inject_fault = args.inject_fault});
  std::size_t failures = 0;
  for (const mrfft::CheckResult& r : results) {
    if (r.pass) {
      std::printf("PASS %-32s max_err=%.3e cases=%zu\n", r.name.c_str(), r.max_err, r.cases);
    } else {
      ++failures;
      std::printf("FAIL %-32s max_err=%.3e cases=%zu  %s\n", r.name.c_str(), r.max_err, r.cases,
                  r.detail.c_str());
    }
  }
  std::printf("%zu/%zu checks passed\n", results.size() - failures, results.size());
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

struct SimArgs {
  std::size_t n = 0;
  std::size_t banks = 0;
  std::string kind = "dit";
  std::string mapping = "digit-sum";
  std::size_t pipeline_depth = 0;
  bool no_overlap = false;
  std::string trace_path;
};

int run_sim(const SimArgs& args) {
  if (args.banks < 2) throw std::invalid_argument("--r must be >= 2");
  std::size_t q = 0, v = 1;
  while (v < args.n) {
    v *= args.banks;
    ++q;
  }
  if (v != args.n || q == 0)
    throw std::invalid_argument("--n must be a positive power of --r for simulation");
  const mrfft::RadixTuple radices(std::vector<std::size_t>(q, args.banks));
  const mrfft::FftPlan plan =
      mrfft::make_plan(mrfft::plan_kind_from_string(args.kind), radices);
  const mrfft::BankMapping mapping = args.mapping == "mod"
                                         ? mrfft::address_mod_mapping(args.banks)
                                         : mrfft::digit_sum_mapping(args.banks);
  const mrfft::AccelConfig cfg{
      .banks = args.banks, .pipeline_depth = args.pipeline_depth, .overlap = !args.no_overlap};
  const mrfft::SimulationResult result = mrfft::simulate(plan, cfg, mapping);
  if (!args.trace_path.empty()) {
    if (args.trace_path == "-") {
      mrfft::write_trace_jsonl(std::cout, result);
    } else {
      std::ofstream out(args.trace_path);
      if (!out) throw std::runtime_error("cannot open trace file: " + args.trace_path);
      mrfft::write_trace_jsonl(out, result);
    }
  }
  std::cout << mrfft::summary_to_json(result.summary) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mixed-radix FFT engine with dense-matrix verification and a "
               "bank-conflict access-pattern simulator"};
  app.require_subcommand(1);

  const double tolerance = default_tolerance();

  PlanArgs plan_args;
  CLI::App* plan_cmd = app.add_subcommand("plan", "print a factorization plan as JSON");
  plan_cmd->add_option("--n", plan_args.n, "transform length")->required();
  plan_cmd->add_option("--kind", plan_args.kind, "dit|dif|difw");
  plan_cmd->add_option("--radices", plan_args.radices,
                       "explicit stage radices, most significant first")
      ->delimiter(',');

  FftArgs fft_args;
  fft_args.tolerance = tolerance;
  CLI::App* fft_cmd = app.add_subcommand("fft", "transform a complex vector file in place");
  fft_cmd->add_option("--input", fft_args.input, "input file, '-' for stdin");
  fft_cmd->add_option("--output", fft_args.output, "output file, '-' for stdout");
  fft_cmd->add_option("--kind", fft_args.kind, "dit|dif|difw");
  fft_cmd->add_option("--radices", fft_args.radices, "explicit stage radices")->delimiter(',');
  fft_cmd->add_flag("--verify", fft_args.verify, "compare against the direct DFT");
  fft_cmd->add_option("--tolerance", fft_args.tolerance,
                      "relative error bound for --verify (env MRFFT_TOLERANCE)");

  VerifyArgs verify_args;
  verify_args.tolerance = tolerance;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the named identity and oracle suites");
  verify_cmd->add_option("--max-n", verify_args.max_n, "size ceiling for the suites");
  verify_cmd->add_option("--kinds", verify_args.kinds, "comma list of plan kinds");
  verify_cmd->add_option("--seed", verify_args.seed, "random seed");
  verify_cmd->add_option("--tolerance", verify_args.tolerance, "executor error bound");
  verify_cmd->add_flag("--inject-fault", verify_args.inject_fault,
                       "corrupt one twiddle to prove the harness detects it");

  SimArgs sim_args;
  CLI::App* sim_cmd = app.add_subcommand("sim", "simulate per-clock bank accesses");
  sim_cmd->add_option("--n", sim_args.n, "transform length (must be a power of --r)")->required();
  sim_cmd->add_option("--r", sim_args.banks, "butterfly radix = bank count")->required();
  sim_cmd->add_option("--kind", sim_args.kind, "dit|dif|difw");
  sim_cmd->add_option("--mapping", sim_args.mapping, "digit-sum|mod")
      ->check(CLI::IsMember({"digit-sum", "mod"}));
  sim_cmd->add_option("--cp", sim_args.pipeline_depth, "processing-unit pipeline depth");
  sim_cmd->add_flag("--no-overlap", sim_args.no_overlap, "reads and writes use separate clocks");
  sim_cmd->add_option("--trace", sim_args.trace_path, "JSONL trace output, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (plan_cmd->parsed()) return run_plan(plan_args);
    if (fft_cmd->parsed()) return run_fft(fft_args);
    if (verify_cmd->parsed()) return run_verify(verify_args);
    if (sim_cmd->parsed()) return run_sim(sim_args);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitParse;
}
