#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace uavplan {

struct Point {
  double x = 0.0;  // m
  double y = 0.0;  // m

  friend bool operator==(const Point&, const Point&) = default;
};

// Planar straight-line distance in meters.
inline double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

using WaypointId = std::uint32_t;

struct Waypoint {
  WaypointId id = 0;
  Point coords;
  double unload_mass = 0.0;  // kg, negative for a pickup
  double deadline = 0.0;     // s since departure
  std::uint32_t app_id = 0;

  friend bool operator==(const Waypoint&, const Waypoint&) = default;
};

struct DroneParams {
  double empty_mass = 1.0;           // kg
  double v_min = 3.0;                // m/s
  double v_max = 8.0;                // m/s
  double battery_capacity = 159840;  // J
  double energy_reserve = 15984;     // J

  friend bool operator==(const DroneParams&, const DroneParams&) = default;
};

struct DeliveryProblem {
  std::string name;
  Point depot;
  std::vector<Waypoint> waypoints;
  DroneParams drone;
  double initial_energy = 159840;  // J

  std::size_t size() const { return waypoints.size(); }

  // Total mass leaving the depot: empty drone plus every payload on board.
  double initial_mass() const;

  // Propulsion energy available for the whole tour, e_0 - e_min.
  double energy_budget() const { return initial_energy - drone.energy_reserve; }

  // Position of waypoint `id` in `waypoints`, or size() when absent.
  std::size_t index_of(WaypointId id) const;

  friend bool operator==(const DeliveryProblem&, const DeliveryProblem&) = default;
};

// Visiting order over a subset of waypoint ids plus one commanded speed per
// leg: depot -> order[0], ..., order[k-1] -> depot. An empty order is the
// drone staying at the depot and still carries one (zero-length) leg.
struct Trajectory {
  std::vector<WaypointId> order;
  std::vector<double> leg_speeds;  // m/s, size order.size() + 1

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

struct FlightReport {
  std::vector<double> arrival_times;     // s, one per visited waypoint, then the depot return
  std::vector<double> departing_masses;  // kg, one per visited waypoint
  std::vector<double> leg_energies;      // J, one per leg
  double initial_mass = 0.0;             // kg
  double total_energy = 0.0;             // J
  std::uint32_t missed_deadlines = 0;
  bool energy_feasible = true;
  // Some energy-model query fell marginally outside the model grid and was clamped.
  bool clamped = false;

  double makespan() const { return arrival_times.empty() ? 0.0 : arrival_times.back(); }

  friend bool operator==(const FlightReport&, const FlightReport&) = default;
};

// 0 when the deadline is met (boundary inclusive), 1 otherwise.
inline int miss(double arrival, double deadline) { return arrival <= deadline ? 0 : 1; }

struct Violation {
  std::string field;
  std::string constraint;
};

using Violations = std::vector<Violation>;

// Every type invariant of the problem, or an empty list when it is well formed.
Violations validate_problem(const DeliveryProblem& problem);

// Structural checks of a trajectory against a problem: known ids, no
// duplicates, leg count, and speeds inside [v_min, v_max].
Violations validate_trajectory(const DeliveryProblem& problem, const Trajectory& trajectory);

std::string describe(const Violations& violations);

}  // namespace uavplan
