#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "mrfft/accel.hpp"

using namespace mrfft;

namespace {

FftPlan pure_radix_plan(PlanKind kind, std::size_t r, std::size_t q) {
  return make_plan(kind, RadixTuple(std::vector<std::size_t>(q, r)));
}

}  // namespace

TEST_CASE("stage addresses") {
  const FftPlan plan = plan_dit(RadixTuple({2, 2}));

  ButterflyAddresses a0 = stage_addresses(plan, 0, 1);
  CHECK(a0.reads == std::vector<std::size_t>{2, 3});
  CHECK(a0.writes == a0.reads);

  ButterflyAddresses a1 = stage_addresses(plan, 1, 0);
  CHECK(a1.reads == std::vector<std::size_t>{0, 2});

  CHECK_THROWS_AS(stage_addresses(plan, 2, 0), std::domain_error);
  CHECK_THROWS_AS(stage_addresses(plan, 0, 2), std::domain_error);
}

TEST_CASE("per-stage reads partition the index range") {
  for (PlanKind kind : {PlanKind::dit, PlanKind::dif, PlanKind::dif_w}) {
    const FftPlan plan = pure_radix_plan(kind, 4, 3);  // n = 64
    for (std::size_t k = 0; k < plan.stages.size(); ++k) {
      std::vector<std::size_t> seen;
      for (std::size_t b = 0; b < plan.stages[k].butterfly_count; ++b) {
        const ButterflyAddresses addr = stage_addresses(plan, k, b);
        // wings of one butterfly are pairwise distinct
        std::vector<std::size_t> wings = addr.reads;
        std::sort(wings.begin(), wings.end());
        CHECK(std::adjacent_find(wings.begin(), wings.end()) == wings.end());
        seen.insert(seen.end(), addr.reads.begin(), addr.reads.end());
      }
      std::sort(seen.begin(), seen.end());
      REQUIRE(seen.size() == plan.n);
      for (std::size_t i = 0; i < plan.n; ++i) CHECK(seen[i] == i);
    }
  }
}

TEST_CASE("digit sum mapping") {
  const BankMapping m4 = digit_sum_mapping(4);
  CHECK(m4.map(7, 16) == 0);  // digits (1,3)
  CHECK(m4.map(0, 16) == 0);
  CHECK(m4.map(6, 16) == 3);  // digits (1,2)
  const BankMapping m2 = digit_sum_mapping(2);
  CHECK(m2.map(6, 8) == 0);  // digits (1,1,0)
  CHECK_THROWS_AS(digit_sum_mapping(1), std::invalid_argument);
}

TEST_CASE("simulation timing with a conflict-free mapping") {
  const SimulationResult r = simulate(pure_radix_plan(PlanKind::dit, 4, 2),
                                      AccelConfig{.banks = 4}, digit_sum_mapping(4));
  CHECK(r.summary.issues == 8);
  CHECK(r.summary.conflicts == 0);
  CHECK(r.summary.conflict_free);
  CHECK(r.summary.cycles == 8);
  CHECK(r.summary.predicted_cycles == 8);
  CHECK(r.trace.size() == 8);

  // single-butterfly transform: one issue plus the pipeline depth
  const SimulationResult single =
      simulate(pure_radix_plan(PlanKind::dit, 4, 1),
               AccelConfig{.banks = 4, .pipeline_depth = 3}, digit_sum_mapping(4));
  CHECK(single.summary.issues == 1);
  CHECK(single.summary.cycles == 4);
}

TEST_CASE("timing formula across sizes and kinds") {
  for (std::size_t r : {std::size_t{2}, std::size_t{4}})
    for (std::size_t q : {std::size_t{2}, std::size_t{3}, std::size_t{4}})
      for (std::size_t cp : {std::size_t{0}, std::size_t{5}})
        for (PlanKind kind : {PlanKind::dit, PlanKind::dif}) {
          const FftPlan plan = pure_radix_plan(kind, r, q);
          const SimulationResult res =
              simulate(plan, AccelConfig{.banks = r, .pipeline_depth = cp}, digit_sum_mapping(r));
          CHECK(res.summary.conflict_free);
          CHECK(res.summary.cycles == (plan.n / r) * q + cp);
          CHECK(res.summary.cycles == res.summary.predicted_cycles);
        }
}

TEST_CASE("no-overlap mode doubles the issue cycles") {
  const SimulationResult r =
      simulate(pure_radix_plan(PlanKind::dit, 4, 2),
               AccelConfig{.banks = 4, .pipeline_depth = 1, .overlap = false},
               digit_sum_mapping(4));
  CHECK(r.summary.cycles == 2 * 8 + 1);
}

TEST_CASE("naive modulo mapping conflicts on the stride stage") {
  const FftPlan plan = pure_radix_plan(PlanKind::dit, 4, 2);  // n = 16
  const SimulationResult res =
      simulate(plan, AccelConfig{.banks = 4}, address_mod_mapping(4));
  CHECK(res.summary.conflicts > 0);
  CHECK_FALSE(res.summary.conflict_free);
  CHECK(res.summary.cycles == res.summary.issues + res.summary.conflicts);

  const ConflictReport report =
      check_conflict_free(plan, AccelConfig{.banks = 4}, address_mod_mapping(4));
  CHECK_FALSE(report.conflict_free);
  REQUIRE(report.counterexample.has_value());
  // first offending issue: the stride stage pulls a whole residue class
  CHECK(report.counterexample->stage == 1);
  CHECK(report.counterexample->butterfly == 0);
  CHECK(report.counterexample->reads == std::vector<std::size_t>{0, 4, 8, 12});
  CHECK(report.counterexample->read_banks == std::vector<std::size_t>{0, 0, 0, 0});
}

TEST_CASE("digit-sum mapping is conflict-free for moderate pure-radix plans") {
  for (PlanKind kind : {PlanKind::dit, PlanKind::dif})
    for (std::size_t q = 1; q <= 6; ++q) {
      const FftPlan plan = pure_radix_plan(kind, 2, q);
      CHECK(check_conflict_free(plan, AccelConfig{.banks = 2}, digit_sum_mapping(2))
                .conflict_free);
    }
}

TEST_CASE("a single-stage transform never conflicts under an injective mapping") {
  // one butterfly touching 0..R-1 exactly once; any mapping injective there works
  const FftPlan plan = pure_radix_plan(PlanKind::dit, 4, 1);
  CHECK(check_conflict_free(plan, AccelConfig{.banks = 4}, address_mod_mapping(4))
            .conflict_free);
  CHECK(check_conflict_free(plan, AccelConfig{.banks = 4}, digit_sum_mapping(4))
            .conflict_free);
}

TEST_CASE("trace records in-place accesses") {
  const SimulationResult res = simulate(pure_radix_plan(PlanKind::dif, 2, 4),
                                        AccelConfig{.banks = 2}, digit_sum_mapping(2));
  CHECK(res.trace.size() == (16 / 2) * 4);
  for (const TraceRecord& rec : res.trace) {
    CHECK(rec.reads == rec.writes);
    CHECK(rec.read_banks == rec.write_banks);
    CHECK(rec.reads.size() == 2);
  }
}

TEST_CASE("simulation rejects unsupported configurations") {
  CHECK_THROWS_AS(simulate(plan_dit(factorize(12)), AccelConfig{.banks = 2},
                           digit_sum_mapping(2)),
                  std::invalid_argument);  // 12 is not a power of 2
  CHECK_THROWS_AS(simulate(plan_dit(RadixTuple({4, 2})), AccelConfig{.banks = 2},
                           digit_sum_mapping(2)),
                  std::invalid_argument);  // mixed radices
  CHECK_THROWS_AS(simulate(pure_radix_plan(PlanKind::dit, 2, 3), AccelConfig{.banks = 1},
                           digit_sum_mapping(2)),
                  std::invalid_argument);  // degenerate bank count
  const BankMapping bogus{.name = "bogus",
                          .map = [](std::size_t, std::size_t) { return std::size_t{9}; }};
  CHECK_THROWS_AS(
      simulate(pure_radix_plan(PlanKind::dit, 2, 3), AccelConfig{.banks = 2}, bogus),
      std::invalid_argument);  // bank id out of range
}

TEST_CASE("jsonl trace export") {
  const SimulationResult res = simulate(pure_radix_plan(PlanKind::dit, 4, 2),
                                        AccelConfig{.banks = 4}, digit_sum_mapping(4));
  std::ostringstream out;
  write_trace_jsonl(out, res);
  std::istringstream in(out.str());
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    const nlohmann::json rec = nlohmann::json::parse(line);
    CHECK(rec.at("reads").size() == 4);
    CHECK(rec.at("read_banks").size() == 4);
    CHECK(rec.at("rows").size() == 4);
    CHECK(rec.at("stall").is_boolean());
    ++lines;
  }
  CHECK(lines == 8);

  const nlohmann::json summary = nlohmann::json::parse(summary_to_json(res.summary));
  CHECK(summary.at("schema") == 1);
  CHECK(summary.at("cycles") == 8);
  CHECK(summary.at("conflicts") == 0);
  CHECK(summary.at("mapping") == "digit-sum");
}
