#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "uavplan/energy_model.hpp"
#include "uavplan/problem.hpp"
#include "uavplan/rng.hpp"

namespace uavplan {

// Objective of every planner, ordered lexicographically: missed deadlines
// first, then propulsion energy, then return time.
struct Cost {
  std::uint32_t misses = 0;
  double energy = 0.0;    // J
  double makespan = 0.0;  // s

  friend auto operator<=>(const Cost&, const Cost&) = default;
};

Cost cost_of(const FlightReport& report);

// Quantized flight speeds, strictly increasing.
class SpeedGrid {
 public:
  // Throws InputError when empty or not strictly increasing.
  explicit SpeedGrid(std::vector<double> levels);

  // Integer speeds from ceil(v_min) to floor(v_max), or the endpoints when
  // that range is empty.
  static SpeedGrid integer_levels(const DroneParams& drone);

  const std::vector<double>& levels() const { return levels_; }
  std::size_t size() const { return levels_.size(); }
  double operator[](std::size_t i) const { return levels_[i]; }

  // Throws ConstraintError when a level lies outside [v_min, v_max].
  void check_within(const DroneParams& drone) const;

 private:
  std::vector<double> levels_;
};

// Single scalar used for simulated-annealing acceptance:
//   misses * M + energy / e_0 + makespan / T_ref + rate * max(0, energy - budget)
// with T_ref the sum of all deadlines.
struct Scalarizer {
  static constexpr double kMissWeight = 1e6;

  double initial_energy = 1.0;
  double reference_time = 1.0;
  double budget = 0.0;
  double penalty_rate = 100.0;

  static Scalarizer for_problem(const DeliveryProblem& problem, double penalty_rate);
  double operator()(const FlightReport& report) const;
};

struct SaParams {
  std::uint32_t max_iterations = 5000;
  // Non-positive selects 10% of the seed's scalar cost.
  double initial_temperature = 0.0;
  double cooling_factor = 0.97;
  std::uint32_t moves_per_temperature = 50;
  std::uint64_t rng_seed = 1;
  double infeasibility_penalty_rate = 100.0;  // scalar cost per joule of overshoot

  // Throws InputError when an invariant is violated.
  void validate() const;
};

struct PlanResult {
  Trajectory trajectory;
  FlightReport report;
  Cost cost;
  std::uint64_t iterations = 0;  // moves evaluated (SA) or search nodes (exact)
  bool complete = true;          // false when the exact search ran out of time
};

// Throws InputError/ConstraintError when the problem is invalid, or
// RangeError when the model cannot price every mass and speed the planner
// may use.
void check_plannable(const DeliveryProblem& problem, const EnergyModel& model,
                     const SpeedGrid& grid);

// Nearest unvisited waypoint first, starting at the depot; ties go to the lowest id.
std::vector<WaypointId> nearest_neighbor_order(const DeliveryProblem& problem);

// Nearest-neighbour tour at every uniform speed of the grid; energy-infeasible
// tours are repaired by dropping waypoints. Returns the least-Cost candidate.
PlanResult plan_greedy(const DeliveryProblem& problem, const EnergyModel& model,
                       const SpeedGrid& grid);

// Drops waypoints until the energy budget holds, each round removing the
// waypoint whose removal saves the most energy (lowest id on ties). The
// merged leg keeps the speed of the leg flown into the removed waypoint.
Trajectory repair_energy(const DeliveryProblem& problem, const EnergyModel& model,
                         Trajectory trajectory);

enum class MoveKind : std::uint8_t { Swap, Relocate, Reverse, Speed, Toggle };

// A fully parameterized move. Applying Swap, Reverse or Toggle twice with the
// same parameters restores the original trajectory (Toggle when `position`
// and `speed` match the toggled waypoint's slot and outgoing leg).
struct Move {
  MoveKind kind = MoveKind::Swap;
  std::size_t i = 0;      // Swap/Relocate/Reverse: first position; Speed: leg index
  std::size_t j = 0;      // Swap/Relocate/Reverse: second position
  WaypointId waypoint = 0;  // Toggle
  std::size_t position = 0;  // Toggle: insertion position
  double speed = 0.0;        // Speed: new leg speed; Toggle: outgoing leg speed on insertion

  // Whether the move can be applied to a trajectory of a problem with
  // `waypoint_count` waypoints.
  bool applicable(const Trajectory& t, std::size_t waypoint_count) const;
};

Trajectory apply_move(const Trajectory& t, const Move& move);

// Draws a random applicable move (kind re-drawn until applicable).
Move random_move(const Trajectory& t, const DeliveryProblem& problem, const SpeedGrid& grid,
                 Rng& rng);

// One random neighbourhood step: swap, relocate, 2-opt reversal, speed
// re-sample or skip toggle.
Trajectory neighbor(const Trajectory& t, const DeliveryProblem& problem, const SpeedGrid& grid,
                    Rng& rng);

// Simulated annealing from `seed` (energy-repaired first). Returns the best
// energy-feasible solution visited; never worse than the repaired seed.
PlanResult plan_sa(const DeliveryProblem& problem, const EnergyModel& model, const Trajectory& seed,
                   const SpeedGrid& grid, const SaParams& params);

struct ExactLimits {
  std::size_t max_waypoints = 10;
  std::optional<std::chrono::milliseconds> time_budget;
};

// Exhaustive search over every ordered subset of waypoints (full tours and
// tours that skip waypoints) at every uniform grid speed. Ties are broken by
// the lexicographically smallest visiting order, then the lowest speed.
// Throws LimitError when the instance exceeds `max_waypoints`. When the time
// budget runs out the best candidate so far is returned with complete=false.
//
// plan_exact splits the search over OpenMP threads; plan_exact_serial is the
// single-threaded reference and returns the identical trajectory.
PlanResult plan_exact(const DeliveryProblem& problem, const EnergyModel& model,
                      const SpeedGrid& grid, const ExactLimits& limits = {});
PlanResult plan_exact_serial(const DeliveryProblem& problem, const EnergyModel& model,
                             const SpeedGrid& grid, const ExactLimits& limits = {});

}  // namespace uavplan
