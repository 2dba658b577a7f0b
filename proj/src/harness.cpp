#include "uavplan/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "uavplan/errors.hpp"
#include "uavplan/text_format.hpp"

namespace uavplan {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Outcome outcome_of(const DeliveryProblem& problem, const PlanResult& plan) {
  Outcome o;
  o.total = static_cast<std::uint32_t>(problem.size());
  o.met = o.total - plan.cost.misses;
  o.energy = plan.cost.energy;
  o.makespan = plan.cost.makespan;
  const auto& speeds = plan.trajectory.leg_speeds;
  o.mean_speed = std::accumulate(speeds.begin(), speeds.end(), 0.0) / static_cast<double>(speeds.size());
  o.complete = plan.complete;
  return o;
}

std::vector<CompareRow> compare_one(const SuiteEntry& entry, const EnergyModel& model,
                                    const PlannerConfig& config) {
  const auto& problem = entry.problem;
  CompareRow base;
  base.problem = entry.id;
  base.n = problem.size();
  if (auto name = parse_canonical_name(problem.name)) {
    base.payload_class = std::string(1, static_cast<char>(name->payload_class));
    base.depot = std::string(1, name->depot_label);
  }
  std::vector<CompareRow> rows(3, base);
  rows[0].planner = kGreedy;
  rows[1].planner = kSa;
  rows[2].planner = kExact;
  try {
    const PlanResult greedy = plan_greedy(problem, model, config.grid);
    rows[0].outcome = outcome_of(problem, greedy);
    const PlanResult sa = plan_sa(problem, model, greedy.trajectory, config.grid, config.sa);
    rows[1].outcome = outcome_of(problem, sa);
    if (problem.size() <= config.oracle_max_n) {
      ExactLimits limits = config.exact;
      limits.max_waypoints = std::max(limits.max_waypoints, config.oracle_max_n);
      const PlanResult exact = plan_exact_serial(problem, model, config.grid, limits);
      rows[2].outcome = outcome_of(problem, exact);
    }
  } catch (const std::exception& e) {
    for (auto& row : rows) {
      if (!row.outcome) row.error = e.what();
    }
  }
  return rows;
}

std::string csv_number(double v) { return text::format_number(v); }

}  // namespace

Comparison compare(const std::vector<SuiteEntry>& suite, const EnergyModel& model,
                   const PlannerConfig& config, bool parallel) {
  std::vector<std::vector<CompareRow>> per_problem(suite.size());
  const auto count = static_cast<std::ptrdiff_t>(suite.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    per_problem[static_cast<std::size_t>(i)] =
        compare_one(suite[static_cast<std::size_t>(i)], model, config);
  }

  Comparison out;
  std::map<std::pair<std::size_t, std::string>, std::pair<std::size_t, double>> groups;
  for (auto& rows : per_problem) {
    const auto& greedy = rows[0].outcome;
    for (const auto& row : rows) {
      if (!row.error.empty()) out.failures.push_back(row.problem + " " + row.planner + ": " + row.error);
      if (row.outcome && greedy && row.outcome->met < greedy->met) {
        out.dominance_violations.push_back(row.problem + ": " + row.planner + " meets " +
                                           std::to_string(row.outcome->met) + " < greedy " +
                                           std::to_string(greedy->met));
      }
      if (row.outcome) {
        auto& g = groups[{row.n, row.planner}];
        g.first += 1;
        g.second += 100.0 * row.outcome->met / static_cast<double>(row.outcome->total);
      }
    }
    out.rows.insert(out.rows.end(), std::make_move_iterator(rows.begin()),
                    std::make_move_iterator(rows.end()));
  }
  const std::string order[] = {kGreedy, kSa, kExact};
  std::map<std::size_t, bool> counts;
  for (const auto& [key, _] : groups) counts[key.first] = true;
  for (const auto& [n, _] : counts) {
    for (const auto& planner : order) {
      auto it = groups.find({n, planner});
      if (it == groups.end()) continue;
      out.groups.push_back({n, planner, it->second.first,
                            it->second.second / static_cast<double>(it->second.first)});
    }
  }
  return out;
}

std::string compare_csv(const Comparison& comparison) {
  std::ostringstream ss;
  ss << "problem,n,class,depot,planner,met,total,energy,makespan\n";
  for (const auto& row : comparison.rows) {
    ss << row.problem << ',' << row.n << ',' << row.payload_class << ',' << row.depot << ','
       << row.planner << ',';
    if (row.outcome) {
      ss << row.outcome->met << ',' << row.outcome->total << ',' << csv_number(row.outcome->energy)
         << ',' << csv_number(row.outcome->makespan);
    } else {
      ss << ",,,";
    }
    ss << '\n';
  }
  return ss.str();
}

std::string compare_groups_csv(const Comparison& comparison) {
  std::ostringstream ss;
  ss << "n,planner,problems,mean_met_percent\n";
  for (const auto& g : comparison.groups) {
    ss << g.n << ',' << g.planner << ',' << g.problems << ',' << csv_number(g.mean_met_percent)
       << '\n';
  }
  return ss.str();
}

double percentile(std::vector<double> values, double p) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const auto rank = static_cast<std::size_t>(std::ceil(p / 100.0 * static_cast<double>(values.size())));
  return values[std::clamp<std::size_t>(rank, 1, values.size()) - 1];
}

LatencyReport measure_latency(const std::vector<SuiteEntry>& suite, const EnergyModel& model,
                              const PlannerConfig& config, std::size_t repetitions) {
  if (repetitions < 1) throw InputError("latency repetitions must be >= 1");
  LatencyReport report;
  for (const auto& entry : suite) {
    for (std::size_t r = 0; r < repetitions; ++r) {
      LatencySample sample;
      sample.problem = entry.id;
      sample.n = entry.problem.size();
      auto start = Clock::now();
      const PlanResult greedy = plan_greedy(entry.problem, model, config.grid);
      sample.greedy_ms = elapsed_ms(start);
      start = Clock::now();
      const PlanResult sa = plan_sa(entry.problem, model, greedy.trajectory, config.grid, config.sa);
      sample.sa_ms = elapsed_ms(start);
      report.samples.push_back(sample);
    }
  }

  std::map<std::size_t, std::vector<const LatencySample*>> by_n;
  for (const auto& s : report.samples) by_n[s.n].push_back(&s);
  for (const auto& [n, samples] : by_n) {
    std::vector<double> greedy, sa, total;
    for (const auto* s : samples) {
      greedy.push_back(s->greedy_ms);
      sa.push_back(s->sa_ms);
      total.push_back(s->greedy_ms + s->sa_ms);
    }
    auto row = [&](const char* planner, const std::vector<double>& values) {
      const double mean = std::accumulate(values.begin(), values.end(), 0.0) /
                          static_cast<double>(values.size());
      report.rows.push_back({n, planner, mean, percentile(values, 95), repetitions, values.size()});
    };
    row(kGreedy, greedy);
    row(kSa, sa);
    row("greedy+sa", total);
  }
  return report;
}

std::string latency_csv(const LatencyReport& report) {
  std::ostringstream ss;
  ss << "n,planner,mean_ms,p95_ms,reps\n";
  ss.precision(6);
  for (const auto& row : report.rows) {
    ss << row.n << ',' << row.planner << ',' << std::fixed << row.mean_ms << ',' << row.p95_ms
       << ',' << row.reps << '\n';
    ss.unsetf(std::ios::floatfield);
  }
  return ss.str();
}

}  // namespace uavplan
