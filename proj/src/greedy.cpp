#include <algorithm>
#include <limits>
#include <optional>

#include "trajectory_edit.hpp"
#include "uavplan/evaluate.hpp"
#include "uavplan/planners.hpp"

namespace uavplan {

std::vector<WaypointId> nearest_neighbor_order(const DeliveryProblem& problem) {
  std::vector<std::size_t> by_id(problem.size());
  for (std::size_t i = 0; i < by_id.size(); ++i) by_id[i] = i;
  std::sort(by_id.begin(), by_id.end(), [&](std::size_t a, std::size_t b) {
    return problem.waypoints[a].id < problem.waypoints[b].id;
  });

  std::vector<bool> used(problem.size(), false);
  std::vector<WaypointId> order;
  order.reserve(problem.size());
  Point here = problem.depot;
  for (std::size_t step = 0; step < problem.size(); ++step) {
    std::size_t best = problem.size();
    double best_distance = std::numeric_limits<double>::infinity();
    for (std::size_t i : by_id) {
      if (used[i]) continue;
      const double d = distance(here, problem.waypoints[i].coords);
      if (d < best_distance) {
        best_distance = d;
        best = i;
      }
    }
    used[best] = true;
    order.push_back(problem.waypoints[best].id);
    here = problem.waypoints[best].coords;
  }
  return order;
}

Trajectory repair_energy(const DeliveryProblem& problem, const EnergyModel& model,
                         Trajectory trajectory) {
  FlightReport report = evaluate(problem, trajectory, model);
  while (!report.energy_feasible && !trajectory.order.empty()) {
    std::size_t drop = 0;
    double lowest = std::numeric_limits<double>::infinity();
    WaypointId drop_id = 0;
    for (std::size_t k = 0; k < trajectory.order.size(); ++k) {
      Trajectory candidate = trajectory;
      detail::remove_at(candidate, k);
      const double energy = evaluate(problem, candidate, model).total_energy;
      const WaypointId id = trajectory.order[k];
      if (energy < lowest || (energy == lowest && id < drop_id)) {
        lowest = energy;
        drop = k;
        drop_id = id;
      }
    }
    detail::remove_at(trajectory, drop);
    report = evaluate(problem, trajectory, model);
  }
  return trajectory;
}

PlanResult plan_greedy(const DeliveryProblem& problem, const EnergyModel& model,
                       const SpeedGrid& grid) {
  check_plannable(problem, model, grid);
  const auto order = nearest_neighbor_order(problem);

  std::optional<PlanResult> best;
  for (double speed : grid.levels()) {
    Trajectory candidate{order, std::vector<double>(order.size() + 1, speed)};
    candidate = repair_energy(problem, model, std::move(candidate));
    FlightReport report = evaluate(problem, candidate, model);
    const Cost cost = cost_of(report);
    if (!best || cost < best->cost) {
      best = PlanResult{std::move(candidate), std::move(report), cost};
    }
  }
  return std::move(*best);
}

}  // namespace uavplan
