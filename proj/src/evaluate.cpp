#include "uavplan/evaluate.hpp"

#include <vector>

#include "uavplan/errors.hpp"
#include "uavplan/text_format.hpp"

namespace uavplan {

FlightReport evaluate(const DeliveryProblem& problem, const Trajectory& trajectory,
                      const EnergyModel& model) {
  const auto& order = trajectory.order;
  const auto& speeds = trajectory.leg_speeds;
  if (speeds.size() != order.size() + 1) {
    throw InputError("trajectory has " + std::to_string(speeds.size()) + " leg speeds for " +
                     std::to_string(order.size()) + " waypoints");
  }

  std::vector<std::size_t> index(order.size());
  std::vector<bool> visited(problem.size(), false);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t i = problem.index_of(order[k]);
    if (i == problem.size()) throw InputError("unknown waypoint id " + std::to_string(order[k]));
    if (visited[i]) throw InputError("waypoint " + std::to_string(order[k]) + " visited twice");
    visited[i] = true;
    index[k] = i;
  }
  for (std::size_t k = 0; k < speeds.size(); ++k) {
    if (!(speeds[k] >= problem.drone.v_min && speeds[k] <= problem.drone.v_max)) {
      throw ConstraintError("leg " + std::to_string(k) + " speed " +
                            text::format_number(speeds[k]) + " m/s outside [" +
                            text::format_number(problem.drone.v_min) + ", " +
                            text::format_number(problem.drone.v_max) + "]");
    }
  }

  FlightReport report;
  report.arrival_times.reserve(order.size() + 1);
  report.departing_masses.reserve(order.size());
  report.leg_energies.reserve(order.size() + 1);
  report.initial_mass = problem.initial_mass();

  Point here = problem.depot;
  double time = 0.0;
  double mass = report.initial_mass;
  std::uint32_t late = 0;

  auto fly = [&](const Point& to, double speed) {
    const double length = distance(here, to);
    const Lookup energy = model.leg_energy(mass, speed, length);
    report.leg_energies.push_back(energy.value);
    report.total_energy += energy.value;
    report.clamped = report.clamped || energy.clamped;
    time += length / speed;
    here = to;
  };

  for (std::size_t k = 0; k < order.size(); ++k) {
    const Waypoint& wp = problem.waypoints[index[k]];
    fly(wp.coords, speeds[k]);
    report.arrival_times.push_back(time);
    late += miss(time, wp.deadline);
    mass -= wp.unload_mass;
    report.departing_masses.push_back(mass);
  }
  fly(problem.depot, speeds.back());
  report.arrival_times.push_back(time);

  report.missed_deadlines = late + static_cast<std::uint32_t>(problem.size() - order.size());
  report.energy_feasible = report.total_energy <= problem.energy_budget();
  return report;
}

}  // namespace uavplan
