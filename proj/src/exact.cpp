#include <algorithm>
#include <atomic>
#include <limits>
#include <omp.h>

#include "uavplan/errors.hpp"
#include "uavplan/evaluate.hpp"
#include "uavplan/planners.hpp"

namespace uavplan {

namespace {

using Clock = std::chrono::steady_clock;

struct Candidate {
  bool found = false;
  Cost cost;
  std::vector<std::size_t> order;  // waypoint indices, ascending-id ranks
  std::size_t speed = 0;           // grid index
};

// Lexicographic on (cost, order, speed).
bool better(const Cost& cost, const std::vector<std::size_t>& order, std::size_t speed,
            const Candidate& incumbent) {
  if (!incumbent.found) return true;
  if (cost != incumbent.cost) return cost < incumbent.cost;
  if (order != incumbent.order) return order < incumbent.order;
  return speed < incumbent.speed;
}

void merge_into(Candidate& into, const Candidate& from) {
  if (from.found && better(from.cost, from.order, from.speed, into)) into = from;
}

// Depth-first enumeration of every ordered subset at one uniform speed.
// Waypoints are ranked by id so that preorder visits orders lexicographically.
class Search {
 public:
  Search(const DeliveryProblem& problem, const EnergyModel& model, double speed,
         std::size_t speed_index, std::atomic<std::uint32_t>& miss_bound,
         std::atomic<bool>& stop, std::optional<Clock::time_point> deadline)
      : problem_(problem),
        model_(model),
        speed_(speed),
        speed_index_(speed_index),
        miss_bound_(miss_bound),
        stop_(stop),
        deadline_(deadline),
        n_(problem.size()),
        budget_(problem.energy_budget()) {
    ranked_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) ranked_[i] = i;
    std::sort(ranked_.begin(), ranked_.end(), [&](std::size_t a, std::size_t b) {
      return problem.waypoints[a].id < problem.waypoints[b].id;
    });
    to_depot_.resize(n_);
    between_.assign(n_ * n_, 0.0);
    for (std::size_t a = 0; a < n_; ++a) {
      const Point& pa = problem.waypoints[ranked_[a]].coords;
      to_depot_[a] = distance(pa, problem.depot);
      for (std::size_t b = 0; b < n_; ++b) {
        between_[a * n_ + b] = distance(pa, problem.waypoints[ranked_[b]].coords);
      }
    }
    used_.assign(n_, false);
  }

  // Tour that stays at the depot.
  void run_empty() {
    prefix_.clear();
    consider(problem_.initial_mass(), 0.0, 0.0, 0, 0.0);
  }

  // Every ordered subset whose first visit is the waypoint of rank `first`.
  void run_from(std::size_t first) {
    prefix_.clear();
    extend(first, problem_.initial_mass(), 0.0, 0.0, 0, to_depot_[first]);
  }

  const Candidate& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void consider(double mass, double time, double energy, std::uint32_t late, double back) {
    const double ret = model_.leg_energy(mass, speed_, back).value;
    const double total = energy + ret;
    if (total > budget_) return;
    const Cost cost{late + static_cast<std::uint32_t>(n_ - prefix_.size()), total,
                    time + back / speed_};
    if (better(cost, prefix_, speed_index_, best_)) {
      best_.found = true;
      best_.cost = cost;
      best_.order = prefix_;
      best_.speed = speed_index_;
      std::uint32_t bound = miss_bound_.load(std::memory_order_relaxed);
      while (cost.misses < bound &&
             !miss_bound_.compare_exchange_weak(bound, cost.misses, std::memory_order_relaxed)) {
      }
    }
  }

  // Flies to rank `next` from the current end of the prefix and explores.
  void extend(std::size_t next, double mass, double time, double energy, std::uint32_t late,
              double leg) {
    if (stopped()) return;
    const Waypoint& wp = problem_.waypoints[ranked_[next]];
    const double leg_energy = model_.leg_energy(mass, speed_, leg).value;
    const double energy_here = energy + leg_energy;
    // leg energies are non-negative, so no extension can recover the budget
    if (energy_here > budget_) return;
    const double time_here = time + leg / speed_;
    const std::uint32_t late_here = late + static_cast<std::uint32_t>(miss(time_here, wp.deadline));
    // strict: equal-miss tours stay reachable for the tie-break
    if (late_here > miss_bound_.load(std::memory_order_relaxed)) return;

    ++nodes_;
    const double mass_here = mass - wp.unload_mass;
    prefix_.push_back(next);
    used_[next] = true;
    consider(mass_here, time_here, energy_here, late_here, to_depot_[next]);
    for (std::size_t r = 0; r < n_; ++r) {
      if (used_[r]) continue;
      extend(r, mass_here, time_here, energy_here, late_here, between_[next * n_ + r]);
    }
    used_[next] = false;
    prefix_.pop_back();
  }

  bool stopped() {
    if (stop_.load(std::memory_order_relaxed)) return true;
    if (deadline_ && (nodes_ & 1023) == 0 && Clock::now() > *deadline_) {
      stop_.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }

 private:
  const DeliveryProblem& problem_;
  const EnergyModel& model_;
  double speed_;
  std::size_t speed_index_;
  std::atomic<std::uint32_t>& miss_bound_;
  std::atomic<bool>& stop_;
  std::optional<Clock::time_point> deadline_;
  std::size_t n_;
  double budget_;
  std::vector<std::size_t> ranked_;
  std::vector<double> to_depot_;
  std::vector<double> between_;
  std::vector<bool> used_;
  std::vector<std::size_t> prefix_;
  Candidate best_;
  std::uint64_t nodes_ = 0;
};

PlanResult exact_search(const DeliveryProblem& problem, const EnergyModel& model,
                        const SpeedGrid& grid, const ExactLimits& limits, bool parallel) {
  if (problem.size() > limits.max_waypoints) {
    throw LimitError("exact search refuses " + std::to_string(problem.size()) +
                     " waypoints (limit " + std::to_string(limits.max_waypoints) + ")");
  }
  check_plannable(problem, model, grid);

  const std::size_t n = problem.size();
  std::atomic<std::uint32_t> miss_bound{static_cast<std::uint32_t>(n)};
  std::atomic<bool> stop{false};
  std::optional<Clock::time_point> deadline;
  if (limits.time_budget) deadline = Clock::now() + *limits.time_budget;

  // One task per (speed, first waypoint); the depot-only tour is handled up front.
  const std::size_t tasks = grid.size() * n;
  std::vector<Candidate> found(tasks);
  std::vector<std::uint64_t> nodes(tasks, 0);

  Candidate best;
  for (std::size_t s = 0; s < grid.size(); ++s) {
    Search search(problem, model, grid[s], s, miss_bound, stop, deadline);
    search.run_empty();
    merge_into(best, search.best());
  }

  auto run_task = [&](std::size_t task) {
    const std::size_t s = task / n;
    const std::size_t first = task % n;
    Search search(problem, model, grid[s], s, miss_bound, stop, deadline);
    search.run_from(first);
    found[task] = search.best();
    nodes[task] = search.nodes();
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t task = 0; task < tasks; ++task) run_task(task);
  } else {
    for (std::size_t task = 0; task < tasks; ++task) run_task(task);
  }

  PlanResult result;
  for (std::size_t task = 0; task < tasks; ++task) {
    merge_into(best, found[task]);
    result.iterations += nodes[task];
  }
  result.complete = !stop.load();

  // Only a negative budget leaves nothing feasible; report the depot-only tour then.
  std::vector<WaypointId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = problem.waypoints[i].id;
  std::sort(ids.begin(), ids.end());
  result.trajectory.order.reserve(best.order.size());
  for (std::size_t rank : best.order) result.trajectory.order.push_back(ids[rank]);
  result.trajectory.leg_speeds.assign(best.order.size() + 1, grid[best.found ? best.speed : 0]);
  result.report = evaluate(problem, result.trajectory, model);
  result.cost = cost_of(result.report);
  return result;
}

}  // namespace

PlanResult plan_exact(const DeliveryProblem& problem, const EnergyModel& model,
                      const SpeedGrid& grid, const ExactLimits& limits) {
  return exact_search(problem, model, grid, limits, true);
}

PlanResult plan_exact_serial(const DeliveryProblem& problem, const EnergyModel& model,
                             const SpeedGrid& grid, const ExactLimits& limits) {
  return exact_search(problem, model, grid, limits, false);
}

}  // namespace uavplan
