#include "uavplan/problem.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "uavplan/text_format.hpp"

namespace uavplan {

double DeliveryProblem::initial_mass() const {
  double mass = drone.empty_mass;
  for (const auto& wp : waypoints) mass += wp.unload_mass;
  return mass;
}

std::size_t DeliveryProblem::index_of(WaypointId id) const {
  for (std::size_t i = 0; i < waypoints.size(); ++i) {
    if (waypoints[i].id == id) return i;
  }
  return waypoints.size();
}

Violations validate_problem(const DeliveryProblem& problem) {
  Violations out;
  auto add = [&](std::string field, std::string constraint) {
    out.push_back({std::move(field), std::move(constraint)});
  };
  const auto& d = problem.drone;
  auto finite = [](double v) { return std::isfinite(v); };

  if (!finite(problem.depot.x) || !finite(problem.depot.y)) add("depot", "coordinates must be finite");
  if (!(d.empty_mass > 0)) add("drone.empty_mass", "must be > 0");
  if (!(d.v_min > 0)) add("drone.v_min", "must be > 0");
  if (!(d.v_min <= d.v_max)) add("drone.v_max", "must be >= v_min");
  if (!(d.energy_reserve >= 0)) add("drone.energy_reserve", "must be >= 0");
  if (!(d.energy_reserve < d.battery_capacity)) {
    add("drone.energy_reserve", "must be < battery_capacity");
  }
  if (!(problem.initial_energy > 0)) add("initial_energy", "must be > 0");
  if (!(problem.initial_energy <= d.battery_capacity)) {
    add("initial_energy", "must not exceed battery_capacity");
  }
  if (problem.waypoints.empty()) add("waypoints", "at least one waypoint is required");

  std::set<WaypointId> seen;
  for (std::size_t i = 0; i < problem.waypoints.size(); ++i) {
    const auto& wp = problem.waypoints[i];
    const std::string where = "waypoints[" + std::to_string(i) + "]";
    if (wp.id == 0) add(where + ".id", "ids start at 1 (0 is the depot)");
    if (!seen.insert(wp.id).second) {
      add(where + ".id", "duplicate id " + std::to_string(wp.id) + ": each waypoint is visited once");
    }
    if (!finite(wp.coords.x) || !finite(wp.coords.y)) add(where + ".coords", "must be finite");
    if (!finite(wp.unload_mass)) add(where + ".unload_mass", "must be finite");
    if (!(wp.deadline > 0) || !finite(wp.deadline)) add(where + ".deadline", "must be > 0");
  }

  // Mass on board must stay positive along any visiting order.
  double mass = problem.initial_mass();
  double lowest = mass;
  for (const auto& wp : problem.waypoints) {
    if (wp.unload_mass > 0) lowest -= wp.unload_mass;
  }
  if (!(lowest > 0)) add("waypoints.unload_mass", "drone mass must stay positive after unloading");
  return out;
}

Violations validate_trajectory(const DeliveryProblem& problem, const Trajectory& trajectory) {
  Violations out;
  std::set<WaypointId> seen;
  for (std::size_t i = 0; i < trajectory.order.size(); ++i) {
    const WaypointId id = trajectory.order[i];
    const std::string where = "order[" + std::to_string(i) + "]";
    if (problem.index_of(id) == problem.size()) {
      out.push_back({where, "unknown waypoint id " + std::to_string(id)});
    }
    if (!seen.insert(id).second) {
      out.push_back({where, "waypoint " + std::to_string(id) + " visited twice"});
    }
  }
  if (trajectory.leg_speeds.size() != trajectory.order.size() + 1) {
    out.push_back({"leg_speeds", "expected " + std::to_string(trajectory.order.size() + 1) +
                                     " speeds, found " +
                                     std::to_string(trajectory.leg_speeds.size())});
  }
  for (std::size_t i = 0; i < trajectory.leg_speeds.size(); ++i) {
    const double v = trajectory.leg_speeds[i];
    if (!(v >= problem.drone.v_min && v <= problem.drone.v_max)) {
      out.push_back({"leg_speeds[" + std::to_string(i) + "]",
                     text::format_number(v) + " m/s outside [v_min, v_max]"});
    }
  }
  return out;
}

std::string describe(const Violations& violations) {
  std::ostringstream ss;
  for (const auto& v : violations) ss << v.field << ": " << v.constraint << '\n';
  return ss.str();
}

}  // namespace uavplan
