#include <cmath>

#include "uavplan/errors.hpp"
#include "uavplan/planners.hpp"
#include "uavplan/text_format.hpp"

namespace uavplan {

Cost cost_of(const FlightReport& report) {
  return {report.missed_deadlines, report.total_energy, report.makespan()};
}

SpeedGrid::SpeedGrid(std::vector<double> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) throw InputError("speed grid is empty");
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (!(levels_[i] > 0) || !std::isfinite(levels_[i])) {
      throw InputError("speed grid levels must be positive");
    }
    if (i > 0 && !(levels_[i] > levels_[i - 1])) {
      throw InputError("speed grid levels must be strictly increasing");
    }
  }
}

SpeedGrid SpeedGrid::integer_levels(const DroneParams& drone) {
  std::vector<double> levels;
  for (double v = std::ceil(drone.v_min); v <= std::floor(drone.v_max); v += 1.0) {
    levels.push_back(v);
  }
  if (levels.empty()) {
    levels.push_back(drone.v_min);
    if (drone.v_max > drone.v_min) levels.push_back(drone.v_max);
  }
  return SpeedGrid(std::move(levels));
}

void SpeedGrid::check_within(const DroneParams& drone) const {
  for (double v : levels_) {
    if (v < drone.v_min || v > drone.v_max) {
      throw ConstraintError("speed grid level " + text::format_number(v) +
                            " m/s outside [v_min, v_max]");
    }
  }
}

Scalarizer Scalarizer::for_problem(const DeliveryProblem& problem, double penalty_rate) {
  Scalarizer s;
  s.initial_energy = problem.initial_energy;
  double deadlines = 0.0;
  for (const auto& wp : problem.waypoints) deadlines += wp.deadline;
  s.reference_time = deadlines > 0 ? deadlines : 1.0;
  s.budget = problem.energy_budget();
  s.penalty_rate = penalty_rate;
  return s;
}

double Scalarizer::operator()(const FlightReport& report) const {
  const double overshoot = std::max(0.0, report.total_energy - budget);
  return kMissWeight * report.missed_deadlines + report.total_energy / initial_energy +
         report.makespan() / reference_time + penalty_rate * overshoot;
}

void SaParams::validate() const {
  if (max_iterations < 1) throw InputError("sa: max_iterations must be >= 1");
  if (!(cooling_factor > 0 && cooling_factor < 1)) {
    throw InputError("sa: cooling_factor must lie in (0, 1)");
  }
  if (moves_per_temperature < 1) throw InputError("sa: moves_per_temperature must be >= 1");
  if (!(infeasibility_penalty_rate >= 0)) {
    throw InputError("sa: infeasibility_penalty_rate must be >= 0");
  }
  if (!std::isfinite(initial_temperature)) throw InputError("sa: initial_temperature must be finite");
}

void check_plannable(const DeliveryProblem& problem, const EnergyModel& model,
                     const SpeedGrid& grid) {
  const auto violations = validate_problem(problem);
  if (!violations.empty()) throw InputError("invalid problem:\n" + describe(violations));
  grid.check_within(problem.drone);

  // Extreme masses reachable along any visiting order.
  double heaviest = problem.initial_mass();
  double lightest = heaviest;
  for (const auto& wp : problem.waypoints) {
    if (wp.unload_mass < 0) heaviest -= wp.unload_mass;
    if (wp.unload_mass > 0) lightest -= wp.unload_mass;
  }
  for (double mass : {lightest, heaviest}) {
    for (double speed : {grid.levels().front(), grid.levels().back()}) {
      model.current_draw(model.thrust_fraction(mass, speed).value);
    }
  }
}

}  // namespace uavplan
