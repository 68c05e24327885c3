#include "mrfft/accel.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace mrfft {

namespace {

bool is_power_of(std::size_t n, std::size_t base, std::size_t& log_out) {
  if (base < 2) return false;
  std::size_t q = 0, v = 1;
  while (v < n) {
    v *= base;
    ++q;
  }
  log_out = q;
  return v == n;
}

void require_uniform_radix(const FftPlan& plan, std::size_t banks) {
  for (const StagePlan& s : plan.stages)
    if (s.radix != banks)
      throw std::invalid_argument(
          "stage radix " + std::to_string(s.radix) + " does not equal bank count " +
          std::to_string(banks) + "; mixed-radix scheduling is not supported");
}

bool has_bank_collision(const std::vector<std::size_t>& banks) {
  for (std::size_t i = 0; i < banks.size(); ++i)
    for (std::size_t j = i + 1; j < banks.size(); ++j)
      if (banks[i] == banks[j]) return true;
  return false;
}

TraceRecord make_record(const FftPlan& plan, std::size_t k, std::size_t b,
                        const BankMapping& mapping, std::size_t banks) {
  ButterflyAddresses addr = stage_addresses(plan, k, b);
  TraceRecord rec;
  rec.stage = k;
  rec.butterfly = b;
  rec.reads = std::move(addr.reads);
  rec.writes = std::move(addr.writes);
  rec.read_banks.reserve(rec.reads.size());
  for (std::size_t a : rec.reads) {
    const std::size_t bank = mapping.map(a, plan.n);
    if (bank >= banks) throw std::invalid_argument("bank mapping returned id out of range");
    rec.read_banks.push_back(bank);
  }
  rec.write_banks = rec.read_banks;  // in-place: writes revisit the read addresses
  rec.stall = has_bank_collision(rec.read_banks) || has_bank_collision(rec.write_banks);
  return rec;
}

}  // namespace

BankMapping digit_sum_mapping(std::size_t banks) {
  if (banks < 2) throw std::invalid_argument("bank count must be >= 2");
  return BankMapping{
      .name = "digit-sum",
      .map = [banks](std::size_t address, std::size_t) {
        std::size_t sum = 0;
        while (address != 0) {
          sum += address % banks;
          address /= banks;
        }
        return sum % banks;
      }};
}

BankMapping address_mod_mapping(std::size_t banks) {
  if (banks < 2) throw std::invalid_argument("bank count must be >= 2");
  return BankMapping{.name = "mod",
                     .map = [banks](std::size_t address, std::size_t) { return address % banks; }};
}

ButterflyAddresses stage_addresses(const FftPlan& plan, std::size_t k, std::size_t b) {
  if (k >= plan.stages.size()) throw std::domain_error("stage index out of range");
  const StagePlan& stage = plan.stages[k];
  if (b >= stage.butterfly_count) throw std::domain_error("butterfly index out of range");
  ButterflyAddresses addr;
  addr.reads.reserve(stage.radix);
  // post_perm is the inverse of the stage permutation, so its forward map
  // gives the preimage of each wing slot.
  for (std::size_t w = 0; w < stage.radix; ++w)
    addr.reads.push_back(stage.post_perm(b * stage.radix + w));
  addr.writes = addr.reads;
  return addr;
}

SimulationResult simulate(const FftPlan& plan, const AccelConfig& cfg,
                          const BankMapping& mapping) {
  if (cfg.banks < 2) throw std::invalid_argument("bank count must be >= 2");
  std::size_t stages_expected = 0;
  if (!is_power_of(plan.n, cfg.banks, stages_expected))
    throw std::invalid_argument("n = " + std::to_string(plan.n) + " is not a power of R = " +
                                std::to_string(cfg.banks));
  require_uniform_radix(plan, cfg.banks);

  SimulationResult result;
  result.trace.reserve(plan.stages.size() * (plan.n / cfg.banks));
  std::size_t conflicts = 0;
  for (std::size_t k = 0; k < plan.stages.size(); ++k) {
    for (std::size_t b = 0; b < plan.stages[k].butterfly_count; ++b) {
      TraceRecord rec = make_record(plan, k, b, mapping, cfg.banks);
      conflicts += rec.stall ? 1 : 0;
      result.trace.push_back(std::move(rec));
    }
  }

  SimSummary& s = result.summary;
  s.n = plan.n;
  s.banks = cfg.banks;
  s.stage_count = plan.stages.size();
  s.issues = result.trace.size();
  s.conflicts = conflicts;
  s.pipeline_depth = cfg.pipeline_depth;
  s.overlap = cfg.overlap;
  s.conflict_free = conflicts == 0;
  s.mapping = mapping.name;
  const std::size_t issue_cycles = cfg.overlap ? s.issues : 2 * s.issues;
  s.cycles = issue_cycles + conflicts + cfg.pipeline_depth;
  s.predicted_cycles = (plan.n / cfg.banks) * stages_expected + cfg.pipeline_depth;
  return result;
}

ConflictReport check_conflict_free(const FftPlan& plan, const AccelConfig& cfg,
                                   const BankMapping& mapping) {
  if (cfg.banks < 2) throw std::invalid_argument("bank count must be >= 2");
  std::size_t stages_expected = 0;
  if (!is_power_of(plan.n, cfg.banks, stages_expected))
    throw std::invalid_argument("n = " + std::to_string(plan.n) + " is not a power of R = " +
                                std::to_string(cfg.banks));
  require_uniform_radix(plan, cfg.banks);
  for (std::size_t k = 0; k < plan.stages.size(); ++k) {
    for (std::size_t b = 0; b < plan.stages[k].butterfly_count; ++b) {
      TraceRecord rec = make_record(plan, k, b, mapping, cfg.banks);
      if (rec.stall) return ConflictReport{.conflict_free = false, .counterexample = rec};
    }
  }
  return ConflictReport{};
}

void write_trace_jsonl(std::ostream& out, const SimulationResult& result) {
  for (const TraceRecord& rec : result.trace) {
    nlohmann::ordered_json line;
    line["stage"] = rec.stage;
    line["butterfly"] = rec.butterfly;
    line["reads"] = rec.reads;
    line["writes"] = rec.writes;
    line["read_banks"] = rec.read_banks;
    line["write_banks"] = rec.write_banks;
    std::vector<std::size_t> rows;
    rows.reserve(rec.reads.size());
    for (std::size_t a : rec.reads) rows.push_back(a / result.summary.banks);
    line["rows"] = rows;
    line["stall"] = rec.stall;
    out << line.dump() << '\n';
  }
}

std::string summary_to_json(const SimSummary& s, int indent) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["n"] = s.n;
  doc["r"] = s.banks;
  doc["stages"] = s.stage_count;
  doc["mapping"] = s.mapping;
  doc["issues"] = s.issues;
  doc["conflicts"] = s.conflicts;
  doc["conflict_free"] = s.conflict_free;
  doc["cycles"] = s.cycles;
  doc["predicted_cycles"] = s.predicted_cycles;
  doc["pipeline_depth"] = s.pipeline_depth;
  doc["overlap"] = s.overlap;
  doc["memory"] = "1r1w";
  return doc.dump(indent);
}

}  // namespace mrfft
