#include <algorithm>

#include "trajectory_edit.hpp"
#include "uavplan/planners.hpp"

namespace uavplan {

bool Move::applicable(const Trajectory& t, std::size_t waypoint_count) const {
  const std::size_t n = t.order.size();
  switch (kind) {
    case MoveKind::Swap:
    case MoveKind::Reverse:
      return n >= 2 && i < j && j < n;
    case MoveKind::Relocate:
      return n >= 2 && i != j && i < n && j < n;
    case MoveKind::Speed:
      return i < t.leg_speeds.size();
    case MoveKind::Toggle: {
      if (waypoint_count == 0) return false;
      const bool visited = std::find(t.order.begin(), t.order.end(), waypoint) != t.order.end();
      return visited || position <= n;
    }
  }
  return false;
}

Trajectory apply_move(const Trajectory& t, const Move& move) {
  Trajectory out = t;
  switch (move.kind) {
    case MoveKind::Swap:
      std::swap(out.order[move.i], out.order[move.j]);
      break;
    case MoveKind::Relocate: {
      const WaypointId id = out.order[move.i];
      out.order.erase(out.order.begin() + static_cast<std::ptrdiff_t>(move.i));
      out.order.insert(out.order.begin() + static_cast<std::ptrdiff_t>(move.j), id);
      break;
    }
    case MoveKind::Reverse:
      std::reverse(out.order.begin() + static_cast<std::ptrdiff_t>(move.i),
                   out.order.begin() + static_cast<std::ptrdiff_t>(move.j + 1));
      // legs strictly inside the reversed segment travel with it
      std::reverse(out.leg_speeds.begin() + static_cast<std::ptrdiff_t>(move.i + 1),
                   out.leg_speeds.begin() + static_cast<std::ptrdiff_t>(move.j + 1));
      break;
    case MoveKind::Speed:
      out.leg_speeds[move.i] = move.speed;
      break;
    case MoveKind::Toggle: {
      auto it = std::find(out.order.begin(), out.order.end(), move.waypoint);
      if (it != out.order.end()) {
        detail::remove_at(out, static_cast<std::size_t>(it - out.order.begin()));
      } else {
        detail::insert_at(out, move.position, move.waypoint, move.speed);
      }
      break;
    }
  }
  return out;
}

Move random_move(const Trajectory& t, const DeliveryProblem& problem, const SpeedGrid& grid,
                 Rng& rng) {
  const std::size_t n = t.order.size();
  auto distinct_pair = [&](Move& m) {
    m.i = uniform_index(rng, n);
    m.j = uniform_index(rng, n - 1);
    if (m.j >= m.i) ++m.j;
  };
  for (;;) {
    Move m;
    m.kind = static_cast<MoveKind>(uniform_index(rng, 5));
    switch (m.kind) {
      case MoveKind::Swap:
      case MoveKind::Reverse:
        if (n < 2) continue;
        distinct_pair(m);
        if (m.i > m.j) std::swap(m.i, m.j);
        break;
      case MoveKind::Relocate:
        if (n < 2) continue;
        distinct_pair(m);
        break;
      case MoveKind::Speed: {
        m.i = uniform_index(rng, t.leg_speeds.size());
        const auto& levels = grid.levels();
        // prefer a level different from the current one
        const auto current = std::find(levels.begin(), levels.end(), t.leg_speeds[m.i]);
        if (current != levels.end() && levels.size() > 1) {
          std::size_t pick = uniform_index(rng, levels.size() - 1);
          if (pick >= static_cast<std::size_t>(current - levels.begin())) ++pick;
          m.speed = levels[pick];
        } else {
          m.speed = levels[uniform_index(rng, levels.size())];
        }
        break;
      }
      case MoveKind::Toggle: {
        if (problem.waypoints.empty()) continue;
        m.waypoint = problem.waypoints[uniform_index(rng, problem.size())].id;
        auto it = std::find(t.order.begin(), t.order.end(), m.waypoint);
        if (it != t.order.end()) {
          m.position = static_cast<std::size_t>(it - t.order.begin());
          m.speed = t.leg_speeds[m.position + 1];
        } else {
          // half the insertions go to the earliest-deadline slot at the speed of
          // the leg they split, the rest anywhere at any level
          if (uniform_index(rng, 2) == 0) {
            m.position = uniform_index(rng, n + 1);
            m.speed = grid[uniform_index(rng, grid.size())];
          } else {
            const double d = problem.waypoints[problem.index_of(m.waypoint)].deadline;
            m.position = 0;
            while (m.position < n &&
                   problem.waypoints[problem.index_of(t.order[m.position])].deadline <= d) {
              ++m.position;
            }
            m.speed = t.leg_speeds[m.position];
          }
        }
        break;
      }
    }
    if (m.applicable(t, problem.size())) return m;
  }
}

Trajectory neighbor(const Trajectory& t, const DeliveryProblem& problem, const SpeedGrid& grid,
                    Rng& rng) {
  return apply_move(t, random_move(t, problem, grid, rng));
}

}  // namespace uavplan
