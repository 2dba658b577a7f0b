#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uavplan/benchgen.hpp"
#include "uavplan/energy_model.hpp"
#include "uavplan/planners.hpp"

namespace uavplan {

struct PlannerConfig {
  SpeedGrid grid{{3, 4, 5, 6, 7, 8}};
  SaParams sa;
  ExactLimits exact;
  // The exact column is left blank above this waypoint count.
  std::size_t oracle_max_n = 10;
};

inline constexpr const char* kGreedy = "greedy";
inline constexpr const char* kSa = "sa";
inline constexpr const char* kExact = "exact";

struct Outcome {
  std::uint32_t met = 0;
  std::uint32_t total = 0;
  double energy = 0.0;
  double makespan = 0.0;
  double mean_speed = 0.0;  // mean commanded speed over all legs
  bool complete = true;
};

struct CompareRow {
  std::string problem;  // suite entry id
  std::size_t n = 0;
  std::string payload_class;
  std::string depot;
  std::string planner;
  std::optional<Outcome> outcome;  // empty above the oracle limit or after a failure
  std::string error;
};

struct GroupSummary {
  std::size_t n = 0;
  std::string planner;
  std::size_t problems = 0;
  double mean_met_percent = 0.0;
};

struct Comparison {
  std::vector<CompareRow> rows;          // problem-major, planners greedy, sa, exact
  std::vector<GroupSummary> groups;      // by n, then planner
  std::vector<std::string> dominance_violations;
  std::vector<std::string> failures;
};

// Greedy, greedy-seeded SA and (up to oracle_max_n) the exact oracle on every
// problem. Problems are spread over OpenMP threads when `parallel`; the table
// does not depend on the thread count. A row breaks dominance when SA or the
// oracle meets fewer deadlines than greedy.
Comparison compare(const std::vector<SuiteEntry>& suite, const EnergyModel& model,
                   const PlannerConfig& config, bool parallel = true);

std::string compare_csv(const Comparison& comparison);
std::string compare_groups_csv(const Comparison& comparison);

struct LatencySample {
  std::string problem;
  std::size_t n = 0;
  double greedy_ms = 0.0;
  double sa_ms = 0.0;
};

struct LatencyRow {
  std::size_t n = 0;
  std::string planner;  // greedy, sa, or greedy+sa (stacked total)
  double mean_ms = 0.0;
  double p95_ms = 0.0;
  std::size_t reps = 0;
  std::size_t samples = 0;
};

struct LatencyReport {
  std::vector<LatencySample> samples;
  std::vector<LatencyRow> rows;
};

// Wall-clock of the planner calls only, one timed call at a time. The SA
// timing excludes the greedy seed it starts from.
LatencyReport measure_latency(const std::vector<SuiteEntry>& suite, const EnergyModel& model,
                              const PlannerConfig& config, std::size_t repetitions);

std::string latency_csv(const LatencyReport& report);

// Nearest-rank percentile of `values` (p in (0, 100]).
double percentile(std::vector<double> values, double p);

}  // namespace uavplan
