#pragma once

// Independent recomputations used as test oracles. Nothing here calls into
// evaluate() or the planners; interpolation is redone from the raw tables.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "uavplan/energy_model.hpp"
#include "uavplan/problem.hpp"

namespace oracle {

using uavplan::DeliveryProblem;
using uavplan::EnergyModel;
using uavplan::Trajectory;
using uavplan::WaypointId;

// Cell index k with axis[k] <= x <= axis[k+1] by linear scan; x must be inside.
inline std::size_t cell(const std::vector<double>& axis, double x) {
  std::size_t k = 0;
  while (k + 2 < axis.size() && x > axis[k + 1]) ++k;
  return k;
}

// Textbook bilinear form with four corner weights.
inline double thrust(const EnergyModel& m, double mass, double speed) {
  const auto& s = m.surface();
  const std::size_t i = cell(s.mass_axis, mass), j = cell(s.speed_axis, speed);
  const double x0 = s.mass_axis[i], x1 = s.mass_axis[i + 1];
  const double y0 = s.speed_axis[j], y1 = s.speed_axis[j + 1];
  const double area = (x1 - x0) * (y1 - y0);
  return (s.at(i, j) * (x1 - mass) * (y1 - speed) + s.at(i + 1, j) * (mass - x0) * (y1 - speed) +
          s.at(i, j + 1) * (x1 - mass) * (speed - y0) + s.at(i + 1, j + 1) * (mass - x0) * (speed - y0)) /
         area;
}

inline double current(const EnergyModel& m, double f) {
  const auto& p = m.curve().points;
  std::size_t k = 0;
  while (k + 2 < p.size() && f > p[k + 1].fraction) ++k;
  const double w = (f - p[k].fraction) / (p[k + 1].fraction - p[k].fraction);
  return p[k].current * (1 - w) + p[k + 1].current * w;
}

inline double energy(const EnergyModel& m, double mass, double speed, double length) {
  if (length == 0) return 0;
  return current(m, thrust(m, mass, speed)) * m.curve().battery_voltage * length / speed;
}

struct Flight {
  std::vector<double> times, masses, energies;
  double total = 0;
  int misses = 0;
  bool feasible = true;
};

// Leg-by-leg recomputation: payloads of skipped waypoints stay on board.
inline Flight fly(const DeliveryProblem& p, const Trajectory& t, const EnergyModel& m) {
  Flight f;
  double mass = p.drone.empty_mass;
  for (const auto& w : p.waypoints) mass += w.unload_mass;
  double clock = 0;
  uavplan::Point at = p.depot;
  std::vector<bool> on_time(p.waypoints.size(), false);
  for (std::size_t k = 0; k <= t.order.size(); ++k) {
    const bool home = k == t.order.size();
    std::size_t idx = 0;
    if (!home) {
      while (p.waypoints[idx].id != t.order[k]) ++idx;
    }
    const uavplan::Point to = home ? p.depot : p.waypoints[idx].coords;
    const double len = std::sqrt((to.x - at.x) * (to.x - at.x) + (to.y - at.y) * (to.y - at.y));
    const double v = t.leg_speeds[k];
    f.energies.push_back(energy(m, mass, v, len));
    f.total += f.energies.back();
    clock += len / v;
    f.times.push_back(clock);
    if (!home) {
      on_time[idx] = clock <= p.waypoints[idx].deadline;
      mass -= p.waypoints[idx].unload_mass;
      f.masses.push_back(mass);
    }
    at = to;
  }
  for (bool ok : on_time) f.misses += ok ? 0 : 1;
  f.feasible = f.total <= p.initial_energy - p.drone.energy_reserve;
  return f;
}

struct Best {
  int misses = std::numeric_limits<int>::max();
  double energy = 0, makespan = 0;
  Trajectory trajectory;
};

// Every ordered subset at every uniform speed; plain lexicographic comparison
// of (misses, energy, makespan), first candidate kept on exact ties.
inline Best enumerate_all(const DeliveryProblem& p, const EnergyModel& m,
                          const std::vector<double>& speeds) {
  Best best;
  std::vector<WaypointId> ids;
  for (const auto& w : p.waypoints) ids.push_back(w.id);
  std::sort(ids.begin(), ids.end());
  const std::size_t n = ids.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<WaypointId> subset;
    for (std::size_t b = 0; b < n; ++b) {
      if (mask & (1u << b)) subset.push_back(ids[b]);
    }
    do {
      for (double v : speeds) {
        Trajectory t{subset, std::vector<double>(subset.size() + 1, v)};
        const Flight f = fly(p, t, m);
        if (!f.feasible) continue;
        const auto key = std::tie(f.misses, f.total, f.times.back());
        if (key < std::tie(best.misses, best.energy, best.makespan)) {
          best = {f.misses, f.total, f.times.back(), t};
        }
      }
    } while (std::next_permutation(subset.begin(), subset.end()));
  }
  return best;
}

// Problem with waypoints placed uniformly in a square and deadlines drawn
// independently; masses chosen so the reference grid covers every state.
inline DeliveryProblem random_problem(std::mt19937_64& rng, std::size_t n, double half_width = 600,
                                      double max_deadline = 600) {
  std::uniform_real_distribution<double> coord(-half_width, half_width), mass(0.05, 0.4),
      deadline(20, max_deadline);
  DeliveryProblem p;
  p.name = "random";
  for (std::size_t i = 0; i < n; ++i) {
    uavplan::Waypoint w;
    w.id = static_cast<WaypointId>(i + 1);
    w.coords = {coord(rng), coord(rng)};
    w.unload_mass = mass(rng);
    w.deadline = deadline(rng);
    w.app_id = static_cast<std::uint32_t>(i % 3 + 1);
    p.waypoints.push_back(w);
  }
  return p;
}

// Random visiting subset in random order with speeds drawn from [v_min, v_max].
inline Trajectory random_trajectory(std::mt19937_64& rng, const DeliveryProblem& p) {
  Trajectory t;
  for (const auto& w : p.waypoints) t.order.push_back(w.id);
  std::shuffle(t.order.begin(), t.order.end(), rng);
  t.order.resize(std::uniform_int_distribution<std::size_t>(0, t.order.size())(rng));
  std::uniform_real_distribution<double> v(p.drone.v_min, p.drone.v_max);
  for (std::size_t k = 0; k <= t.order.size(); ++k) t.leg_speeds.push_back(v(rng));
  return t;
}

inline bool close(double a, double b, double rel = 1e-9) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace oracle
