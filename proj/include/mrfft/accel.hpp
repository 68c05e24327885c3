#ifndef MRFFT_ACCEL_HPP
#define MRFFT_ACCEL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mrfft/plan.hpp"

namespace mrfft {

/// Only dual-port (one read, one write per clock) banks are modeled.
enum class MemoryKind { ram_1r1w };

/// Memory-side shape of the modeled accelerator: R parallel banks feeding a
/// radix-R processing unit that issues one butterfly per clock.
struct AccelConfig {
  std::size_t banks = 2;         // R: butterfly radix = number of banks
  std::size_t pipeline_depth = 0;  // C_p, added once to total latency
  MemoryKind memory_kind = MemoryKind::ram_1r1w;
  bool overlap = true;           // reads and writes share a clock
};

/// Pluggable address-to-bank assignment. The map must be total on 0..n-1
/// and return a bank id below the configured bank count.
struct BankMapping {
  std::string name;
  std::function<std::size_t(std::size_t address, std::size_t n)> map;
};

/// bank(a) = sum of the base-R digits of a, mod R. Conflict-free for the
/// stride access patterns of pure-radix plans (verified exhaustively in the
/// test suite, not assumed).
BankMapping digit_sum_mapping(std::size_t banks);

/// bank(a) = a mod R; the naive layout, which conflicts on stride stages.
BankMapping address_mod_mapping(std::size_t banks);

/// One issued butterfly: R reads and R writes in the same clock. Writes
/// target the read addresses (in-place operation).
struct TraceRecord {
  std::size_t stage = 0;
  std::size_t butterfly = 0;
  std::vector<std::size_t> reads;
  std::vector<std::size_t> writes;
  std::vector<std::size_t> read_banks;
  std::vector<std::size_t> write_banks;
  bool stall = false;
};

struct SimSummary {
  std::size_t n = 0;
  std::size_t banks = 0;
  std::size_t stage_count = 0;
  std::size_t issues = 0;
  std::size_t conflicts = 0;       // issues with a bank collision
  std::size_t cycles = 0;          // modeled total, one extra cycle per conflict
  std::size_t predicted_cycles = 0;  // (N/R) log_R N + C_p
  std::size_t pipeline_depth = 0;
  bool overlap = true;
  bool conflict_free = false;
  std::string mapping;
};

struct SimulationResult {
  std::vector<TraceRecord> trace;
  SimSummary summary;
};

struct ConflictReport {
  bool conflict_free = true;
  std::optional<TraceRecord> counterexample;  // first conflicting issue
};

/// Butterfly operand addresses for stage k, butterfly b: the preimages of
/// the b-th consecutive radix-block under the stage's pre permutation.
/// Reads and writes coincide; addresses within one butterfly are distinct.
struct ButterflyAddresses {
  std::vector<std::size_t> reads;
  std::vector<std::size_t> writes;
};
ButterflyAddresses stage_addresses(const FftPlan& plan, std::size_t k, std::size_t b);

/// Walks every butterfly of every stage in plan order, assigning banks via
/// the mapping. Requires every stage radix to equal cfg.banks (so n must be
/// a power of R); otherwise throws std::invalid_argument.
SimulationResult simulate(const FftPlan& plan, const AccelConfig& cfg, const BankMapping& mapping);

/// True iff no butterfly maps two of its operands to one bank; on failure
/// carries the first offending issue.
ConflictReport check_conflict_free(const FftPlan& plan, const AccelConfig& cfg,
                                   const BankMapping& mapping);

/// One JSON object per clock, newline separated.
void write_trace_jsonl(std::ostream& out, const SimulationResult& result);

std::string summary_to_json(const SimSummary& summary, int indent = 2);

}  // namespace mrfft

#endif  // MRFFT_ACCEL_HPP
