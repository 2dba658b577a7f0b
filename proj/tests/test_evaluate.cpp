#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "uavplan/errors.hpp"
#include "uavplan/evaluate.hpp"

using namespace uavplan;

namespace {

// Depot at the origin, one 500 m leg out and back, 100 W stub.
DeliveryProblem worked_example(double deadline) {
  DeliveryProblem p;
  p.waypoints = {{1, {300, 400}, 0.5, deadline, 1}};
  return p;
}

const EnergyModel& reference() {
  static const EnergyModel m = reference_model();
  return m;
}

}  // namespace

TEST(Evaluate, WorkedConstantPowerExample) {
  const auto model = EnergyModel::constant_power(100);
  const auto r = evaluate(worked_example(200), {{1}, {5, 5}}, model);
  ASSERT_EQ(r.arrival_times.size(), 2u);
  EXPECT_DOUBLE_EQ(r.arrival_times[0], 100.0);
  EXPECT_DOUBLE_EQ(r.arrival_times[1], 200.0);
  EXPECT_DOUBLE_EQ(r.initial_mass, 1.5);
  EXPECT_DOUBLE_EQ(r.departing_masses[0], 1.0);
  EXPECT_DOUBLE_EQ(r.total_energy, 20000.0);
  EXPECT_EQ(r.missed_deadlines, 0u);
  EXPECT_TRUE(r.energy_feasible);
}

TEST(Evaluate, WorkedExampleLateByTenSeconds) {
  const auto r = evaluate(worked_example(90), {{1}, {5, 5}}, EnergyModel::constant_power(100));
  EXPECT_EQ(r.missed_deadlines, 1u);
}

TEST(Evaluate, UnvisitedWaypointsAreMisses) {
  DeliveryProblem p = worked_example(1000);
  p.waypoints.push_back({2, {0, 100}, 0.2, 1000, 2});
  const auto r = evaluate(p, {{2}, {5, 5}}, reference());
  EXPECT_EQ(r.missed_deadlines, 1u);
  // the skipped payload stays on board
  EXPECT_DOUBLE_EQ(r.initial_mass, 1.7);
  EXPECT_DOUBLE_EQ(r.departing_masses[0], 1.5);
}

TEST(Evaluate, EmptyTrajectoryStaysAtDepot) {
  const auto r = evaluate(worked_example(10), {{}, {3}}, reference());
  EXPECT_EQ(r.missed_deadlines, 1u);
  EXPECT_EQ(r.total_energy, 0.0);
  EXPECT_EQ(r.makespan(), 0.0);
  EXPECT_TRUE(r.energy_feasible);
}

TEST(Evaluate, ErrorsOnBadInput) {
  const auto p = worked_example(100);
  const auto m = EnergyModel::constant_power(100);
  EXPECT_THROW(evaluate(p, {{2}, {5, 5}}, m), InputError);
  EXPECT_THROW(evaluate(p, {{1}, {5}}, m), InputError);
  EXPECT_THROW(evaluate(p, {{1}, {5, 9}}, m), ConstraintError);
  EXPECT_THROW(evaluate(p, {{1}, {2.5, 5}}, m), ConstraintError);
}

TEST(Evaluate, BudgetVerdict) {
  auto p = worked_example(1000);
  p.drone.energy_reserve = 0;
  p.initial_energy = 20000;
  EXPECT_TRUE(evaluate(p, {{1}, {5, 5}}, EnergyModel::constant_power(100)).energy_feasible);
  p.initial_energy = 19999.99;
  p.drone.battery_capacity = 19999.99 * 2;
  EXPECT_FALSE(evaluate(p, {{1}, {5, 5}}, EnergyModel::constant_power(100)).energy_feasible);
}

TEST(Evaluate, ThreeWaypointsMatchHandRecomputation) {
  DeliveryProblem p;
  p.waypoints = {{1, {400, 0}, 0.3, 100, 1}, {2, {400, 300}, 0.2, 120, 2}, {3, {0, 300}, 0.4, 400, 3}};
  const Trajectory t{{1, 2, 3}, {8, 4, 6, 5}};
  const auto r = evaluate(p, t, reference());
  const auto& m = reference();
  // legs 400, 300, 400, 300 m; masses 1.9, 1.6, 1.4, 1.0 kg
  const double lengths[] = {400, 300, 400, 300};
  const double masses[] = {1.9, 1.6, 1.4, 1.0};
  double clock = 0, total = 0;
  for (int k = 0; k < 4; ++k) {
    const double e = oracle::energy(m, masses[k], t.leg_speeds[k], lengths[k]);
    EXPECT_TRUE(oracle::close(r.leg_energies[k], e)) << k;
    clock += lengths[k] / t.leg_speeds[k];
    EXPECT_TRUE(oracle::close(r.arrival_times[k], clock)) << k;
    total += e;
  }
  EXPECT_TRUE(oracle::close(r.total_energy, total));
  // 50 s, 125 s (late), 191.67 s
  EXPECT_EQ(r.missed_deadlines, 1u);
  EXPECT_NEAR(r.departing_masses[2], 1.0, 1e-12);
}

TEST(Evaluate, AgreesWithBruteForceOnRandomPairs) {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 100; ++k) {
    const auto p = oracle::random_problem(rng, 1 + k % 7);
    const auto t = oracle::random_trajectory(rng, p);
    const auto r = evaluate(p, t, reference());
    const auto f = oracle::fly(p, t, reference());
    ASSERT_EQ(r.arrival_times.size(), f.times.size());
    for (std::size_t i = 0; i < f.times.size(); ++i) {
      EXPECT_TRUE(oracle::close(r.arrival_times[i], f.times[i])) << k;
      EXPECT_TRUE(oracle::close(r.leg_energies[i], f.energies[i])) << k;
    }
    for (std::size_t i = 0; i < f.masses.size(); ++i) {
      EXPECT_TRUE(oracle::close(r.departing_masses[i], f.masses[i])) << k;
    }
    EXPECT_TRUE(oracle::close(r.total_energy, f.total)) << k;
    EXPECT_EQ(static_cast<int>(r.missed_deadlines), f.misses) << k;
  }
}

TEST(EvaluateProperty, MassTelescopesToEmptyMass) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    const auto p = oracle::random_problem(rng, 1 + k % 10);
    Trajectory t;
    for (const auto& w : p.waypoints) t.order.push_back(w.id);
    std::shuffle(t.order.begin(), t.order.end(), rng);
    t.leg_speeds.assign(t.order.size() + 1, 6);
    const auto r = evaluate(p, t, reference());
    EXPECT_NEAR(r.departing_masses.back(), p.drone.empty_mass, 1e-12);
  }
}

TEST(EvaluateProperty, MassDropsByUnloadAtEachWaypoint) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 50; ++k) {
    const auto p = oracle::random_problem(rng, 1 + k % 10);
    const auto t = oracle::random_trajectory(rng, p);
    const auto r = evaluate(p, t, reference());
    double arriving = r.initial_mass;
    for (std::size_t i = 0; i < t.order.size(); ++i) {
      const double w = p.waypoints[p.index_of(t.order[i])].unload_mass;
      EXPECT_NEAR(arriving - r.departing_masses[i], w, 1e-12);
      arriving = r.departing_masses[i];
    }
  }
}

TEST(EvaluateProperty, DoublingSpeedsHalvesTimes) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 30; ++k) {
    const auto p = oracle::random_problem(rng, 1 + k % 8);
    Trajectory slow = oracle::random_trajectory(rng, p);
    for (auto& v : slow.leg_speeds) v = std::uniform_real_distribution<double>(3, 4)(rng);
    Trajectory fast = slow;
    for (auto& v : fast.leg_speeds) v *= 2;
    const auto a = evaluate(p, slow, reference());
    const auto b = evaluate(p, fast, reference());
    for (std::size_t i = 0; i < a.arrival_times.size(); ++i) {
      EXPECT_TRUE(oracle::close(b.arrival_times[i] * 2, a.arrival_times[i]));
    }
    double legs = 0;
    for (double e : a.leg_energies) legs += e;
    EXPECT_TRUE(oracle::close(legs, a.total_energy));
  }
}

TEST(EvaluateProperty, ArrivalsIncreaseAndMissesBounded) {
  std::mt19937_64 rng(10);
  for (int k = 0; k < 50; ++k) {
    const auto p = oracle::random_problem(rng, 1 + k % 10);
    const auto t = oracle::random_trajectory(rng, p);
    const auto r = evaluate(p, t, reference());
    for (std::size_t i = 1; i < r.arrival_times.size(); ++i) {
      EXPECT_GT(r.arrival_times[i], r.arrival_times[i - 1]);
    }
    for (std::size_t i = 1; i < r.departing_masses.size(); ++i) {
      EXPECT_LE(r.departing_masses[i], r.departing_masses[i - 1]);
    }
    EXPECT_LE(r.missed_deadlines, p.size());
    EXPECT_GE(r.missed_deadlines, p.size() - t.order.size());
    EXPECT_EQ(evaluate(p, t, reference()), r);
  }
}
