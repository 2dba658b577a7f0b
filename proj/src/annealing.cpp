#include <cmath>

#include "uavplan/errors.hpp"
#include "uavplan/evaluate.hpp"
#include "uavplan/planners.hpp"

namespace uavplan {

PlanResult plan_sa(const DeliveryProblem& problem, const EnergyModel& model, const Trajectory& seed,
                   const SpeedGrid& grid, const SaParams& params) {
  params.validate();
  check_plannable(problem, model, grid);
  const auto violations = validate_trajectory(problem, seed);
  if (!violations.empty()) throw InputError("invalid seed trajectory:\n" + describe(violations));

  const Scalarizer scalar = Scalarizer::for_problem(problem, params.infeasibility_penalty_rate);

  Trajectory current = repair_energy(problem, model, seed);
  FlightReport current_report = evaluate(problem, current, model);
  double current_score = scalar(current_report);

  PlanResult best{current, current_report, cost_of(current_report)};

  double temperature =
      params.initial_temperature > 0 ? params.initial_temperature : 0.1 * current_score;
  temperature = std::max(temperature, 1e-12);

  Rng rng(params.rng_seed);
  for (std::uint32_t it = 0; it < params.max_iterations; ++it) {
    Trajectory candidate = neighbor(current, problem, grid, rng);
    FlightReport report = evaluate(problem, candidate, model);
    const double score = scalar(report);
    const double delta = score - current_score;
    const bool accept = delta <= 0 || uniform01(rng) < std::exp(-delta / temperature);

    if (report.energy_feasible) {
      const Cost cost = cost_of(report);
      if (cost < best.cost) best = PlanResult{candidate, report, cost};
    }
    if (accept) {
      current = std::move(candidate);
      current_report = std::move(report);
      current_score = score;
    }
    if ((it + 1) % params.moves_per_temperature == 0) temperature *= params.cooling_factor;
  }
  best.iterations = params.max_iterations;
  return best;
}

}  // namespace uavplan
