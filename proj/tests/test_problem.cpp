#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "uavplan/errors.hpp"
#include "uavplan/problem.hpp"
#include "uavplan/problem_io.hpp"

using namespace uavplan;

namespace {

DeliveryProblem small_problem() {
  DeliveryProblem p;
  p.name = "small";
  p.waypoints = {{1, {300, 400}, 0.5, 120, 1}, {2, {-200, 50}, 0.25, 300, 2}};
  return p;
}

bool mentions(const Violations& v, const std::string& field, const std::string& text) {
  for (const auto& x : v) {
    if (x.field.find(field) != std::string::npos && x.constraint.find(text) != std::string::npos) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST(Miss, DeadlineBoundaryCountsAsMet) {
  EXPECT_EQ(miss(5.0, 10.0), 0);
  EXPECT_EQ(miss(10.0, 10.0), 0);
  EXPECT_EQ(miss(10.001, 10.0), 1);
}

TEST(ValidateProblem, DefaultDroneIsValid) {
  auto p = small_problem();
  EXPECT_EQ(p.drone.v_min, 3.0);
  EXPECT_EQ(p.drone.v_max, 8.0);
  EXPECT_TRUE(validate_problem(p).empty());
}

TEST(ValidateProblem, DuplicateIdNamesSingleVisit) {
  auto p = small_problem();
  p.waypoints[1].id = 1;
  const auto v = validate_problem(p);
  EXPECT_TRUE(mentions(v, "waypoints[1].id", "visited once")) << describe(v);
}

TEST(ValidateProblem, ZeroDeadlineRejected) {
  auto p = small_problem();
  p.waypoints[0].deadline = 0;
  EXPECT_TRUE(mentions(validate_problem(p), "waypoints[0].deadline", "> 0"));
}

TEST(ValidateProblem, DroneInvariants) {
  auto p = small_problem();
  p.drone.v_min = 9;
  p.drone.energy_reserve = p.drone.battery_capacity;
  p.drone.empty_mass = 0;
  const auto v = validate_problem(p);
  EXPECT_TRUE(mentions(v, "drone.v_max", "v_min"));
  EXPECT_TRUE(mentions(v, "drone.energy_reserve", "battery_capacity"));
  EXPECT_TRUE(mentions(v, "drone.empty_mass", "> 0"));
}

TEST(ValidateProblem, EmptyProblemRejected) {
  DeliveryProblem p;
  EXPECT_TRUE(mentions(validate_problem(p), "waypoints", "at least one"));
}

TEST(DeliveryProblem, InitialMassAndBudget) {
  const auto p = small_problem();
  EXPECT_DOUBLE_EQ(p.initial_mass(), 1.75);
  EXPECT_DOUBLE_EQ(p.energy_budget(), 159840.0 - 15984.0);
  EXPECT_EQ(p.index_of(2), 1u);
  EXPECT_EQ(p.index_of(7), p.size());
}

TEST(ValidateTrajectory, StructuralChecks) {
  const auto p = small_problem();
  EXPECT_TRUE(validate_trajectory(p, {{1, 2}, {5, 5, 5}}).empty());
  EXPECT_TRUE(validate_trajectory(p, {{}, {3}}).empty());
  EXPECT_FALSE(validate_trajectory(p, {{1, 1}, {5, 5, 5}}).empty());
  EXPECT_FALSE(validate_trajectory(p, {{9}, {5, 5}}).empty());
  EXPECT_FALSE(validate_trajectory(p, {{1}, {5}}).empty());
  EXPECT_FALSE(validate_trajectory(p, {{1}, {5, 8.5}}).empty());
  EXPECT_FALSE(validate_trajectory(p, {{1}, {2.9, 5}}).empty());
}

TEST(ProblemIo, RoundTripIsByteIdentical) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 20; ++k) {
    auto p = oracle::random_problem(rng, 1 + k % 10);
    p.depot = {std::uniform_real_distribution<double>(-1e4, 1e4)(rng), -0.1 * k};
    p.name = k % 2 ? "" : "rt" + std::to_string(k);
    p.initial_energy = 150000.5;
    const std::string text = serialize_problem(p);
    const auto back = parse_problem(text);
    EXPECT_EQ(back, p);
    EXPECT_EQ(serialize_problem(back), text);
  }
}

TEST(ProblemIo, PickupMassSurvivesRoundTrip) {
  auto p = small_problem();
  p.waypoints[1].unload_mass = -0.125;
  EXPECT_EQ(parse_problem(serialize_problem(p)), p);
}

TEST(ProblemIo, MissingFormatTagIsParseError) {
  auto text = serialize_problem(small_problem());
  text = text.substr(text.find('\n') + 1);
  EXPECT_THROW(parse_problem(text), ParseError);
}

TEST(ProblemIo, WrongWaypointCountIsParseError) {
  auto text = serialize_problem(small_problem());
  const auto pos = text.find("waypoint_count 2");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 16, "waypoint_count 3");
  EXPECT_THROW(parse_problem(text), InputError);
}

TEST(TrajectoryIo, RoundTripIsByteIdentical) {
  std::mt19937_64 rng(5);
  const auto p = oracle::random_problem(rng, 8);
  for (int k = 0; k < 20; ++k) {
    const auto t = oracle::random_trajectory(rng, p);
    const std::string text = serialize_trajectory(t, "random");
    const auto back = parse_trajectory(text);
    EXPECT_EQ(back, t);
    EXPECT_EQ(serialize_trajectory(back, "random"), text);
  }
}

TEST(ReportIo, RoundTripIsByteIdentical) {
  FlightReport r;
  r.arrival_times = {100, 212.5, 400.125};
  r.departing_masses = {1.5, 1.0};
  r.leg_energies = {1e4, 1.0 / 3.0, 2e4};
  r.initial_mass = 2.0;
  r.total_energy = 30000.333333333332;
  r.missed_deadlines = 1;
  r.energy_feasible = false;
  r.clamped = true;
  const auto text = serialize_report(r);
  EXPECT_EQ(parse_report(text), r);
  EXPECT_EQ(serialize_report(parse_report(text)), text);
}
