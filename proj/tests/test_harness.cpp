#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "uavplan/errors.hpp"
#include "uavplan/harness.hpp"

using namespace uavplan;

namespace {

const EnergyModel& reference() {
  static const EnergyModel m = reference_model();
  return m;
}

std::vector<SuiteEntry> small_suite(std::vector<std::size_t> counts = {5, 6}) {
  SuiteOptions o;
  o.counts = std::move(counts);
  o.instances_per_cell = 1;
  return generate_suite(o);
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Compare, TrivialProblemAllPlannersMeetIt) {
  SuiteEntry e;
  e.id = "n1/easy";
  e.problem.name = "easy";
  e.problem.waypoints = {{1, {100, 0}, 0.2, 1000, 1}};
  const auto c = compare({e}, reference(), PlannerConfig{});
  ASSERT_EQ(c.rows.size(), 3u);
  for (const auto& row : c.rows) {
    ASSERT_TRUE(row.outcome) << row.planner;
    EXPECT_EQ(row.outcome->met, 1u);
    EXPECT_EQ(row.outcome->total, 1u);
  }
  EXPECT_TRUE(c.dominance_violations.empty());
  EXPECT_TRUE(c.failures.empty());
}

TEST(Compare, GroupMeansMatchRowRecomputation) {
  const auto suite = small_suite();
  const auto c = compare(suite, reference(), PlannerConfig{});
  std::map<std::pair<std::size_t, std::string>, std::pair<double, int>> sums;
  for (const auto& row : c.rows) {
    ASSERT_TRUE(row.outcome);
    auto& s = sums[{row.n, row.planner}];
    s.first += 100.0 * row.outcome->met / row.outcome->total;
    s.second += 1;
  }
  ASSERT_EQ(c.groups.size(), sums.size());
  for (const auto& g : c.groups) {
    const auto& s = sums.at({g.n, g.planner});
    EXPECT_EQ(g.problems, static_cast<std::size_t>(s.second));
    EXPECT_NEAR(g.mean_met_percent, s.first / s.second, 1e-9);
  }
  EXPECT_TRUE(c.dominance_violations.empty());
}

TEST(Compare, RowsIndependentOfThreading) {
  const auto suite = small_suite({5, 7});
  const auto parallel = compare(suite, reference(), PlannerConfig{}, true);
  const auto serial = compare(suite, reference(), PlannerConfig{}, false);
  EXPECT_EQ(compare_csv(parallel), compare_csv(serial));
  EXPECT_EQ(compare_groups_csv(parallel), compare_groups_csv(serial));
}

TEST(Compare, OracleColumnBlankAboveLimit) {
  const auto suite = small_suite({5, 6});
  PlannerConfig config;
  config.oracle_max_n = 5;
  const auto c = compare(suite, reference(), config);
  const auto csv = lines(compare_csv(c));
  EXPECT_EQ(csv.front(), "problem,n,class,depot,planner,met,total,energy,makespan");
  int blank = 0, filled = 0;
  for (std::size_t i = 1; i < csv.size(); ++i) {
    if (csv[i].find(",exact,") == std::string::npos) continue;
    if (csv[i].starts_with("n6/")) {
      EXPECT_TRUE(csv[i].ends_with(",exact,,,,")) << csv[i];
      ++blank;
    } else {
      EXPECT_FALSE(csv[i].ends_with(",,,,")) << csv[i];
      ++filled;
    }
  }
  EXPECT_EQ(blank, 6);
  EXPECT_EQ(filled, 6);
}

TEST(Compare, FailureRecordedAndRunContinues) {
  auto suite = small_suite({5});
  suite[1].problem.waypoints[0].deadline = -1;  // invalid problem
  const auto c = compare(suite, reference(), PlannerConfig{});
  EXPECT_EQ(c.rows.size(), suite.size() * 3);
  EXPECT_FALSE(c.failures.empty());
  EXPECT_TRUE(c.rows[0].outcome);
  EXPECT_FALSE(c.rows[3].outcome);
  EXPECT_TRUE(c.rows[6].outcome);
}

TEST(Latency, EachMeanUsesExactlyRepsRuns) {
  const auto suite = small_suite({5});
  const auto report = measure_latency(suite, reference(), PlannerConfig{}, 3);
  EXPECT_EQ(report.samples.size(), suite.size() * 3);
  ASSERT_EQ(report.rows.size(), 3u);
  EXPECT_EQ(report.rows[0].planner, "greedy");
  EXPECT_EQ(report.rows[1].planner, "sa");
  EXPECT_EQ(report.rows[2].planner, "greedy+sa");
  for (const auto& row : report.rows) {
    EXPECT_EQ(row.reps, 3u);
    EXPECT_EQ(row.samples, suite.size() * 3);
    EXPECT_GE(row.p95_ms, 0.0);
  }
  // stacked total is the sum of the two separately timed parts
  EXPECT_NEAR(report.rows[2].mean_ms, report.rows[0].mean_ms + report.rows[1].mean_ms, 1e-9);
  const auto csv = lines(latency_csv(report));
  EXPECT_EQ(csv.front(), "n,planner,mean_ms,p95_ms,reps");
  EXPECT_TRUE(csv[1].starts_with("5,greedy,"));
  EXPECT_TRUE(csv[1].ends_with(",3"));
  EXPECT_THROW(measure_latency(suite, reference(), PlannerConfig{}, 0), InputError);
}

TEST(Latency, SaGrowsAtMostLinearlyInIterationCap) {
  const auto suite = small_suite({8});
  std::map<std::uint32_t, double> mean;
  for (std::uint32_t cap : {1000u, 2500u, 5000u}) {
    PlannerConfig config;
    config.sa.max_iterations = cap;
    const auto report = measure_latency(suite, reference(), config, 3);
    mean[cap] = report.rows[1].mean_ms;
  }
  // generous slack for timer noise: per-iteration cost must not grow with the cap
  EXPECT_LE(mean[5000], 5.0 * mean[1000] * 1.5);
  EXPECT_LE(mean[5000], 2.0 * mean[2500] * 1.5);
}

TEST(Percentile, NearestRank) {
  EXPECT_EQ(percentile({5, 1, 4, 2, 3}, 95), 5);
  EXPECT_EQ(percentile({5, 1, 4, 2, 3}, 50), 3);
  std::vector<double> hundred;
  for (int i = 1; i <= 100; ++i) hundred.push_back(i);
  EXPECT_EQ(percentile(hundred, 95), 95);
  EXPECT_EQ(percentile({}, 95), 0);
}
