#pragma once

#include "uavplan/problem.hpp"

namespace uavplan::detail {

// Removes the waypoint at `position`; the merged leg keeps the speed of the
// leg flown into the removed waypoint.
inline void remove_at(Trajectory& t, std::size_t position) {
  t.order.erase(t.order.begin() + static_cast<std::ptrdiff_t>(position));
  t.leg_speeds.erase(t.leg_speeds.begin() + static_cast<std::ptrdiff_t>(position + 1));
}

// Inserts `id` at `position`; the leg into it keeps the split leg's speed and
// the leg out of it flies at `outgoing_speed`. Inverse of remove_at.
inline void insert_at(Trajectory& t, std::size_t position, WaypointId id, double outgoing_speed) {
  t.order.insert(t.order.begin() + static_cast<std::ptrdiff_t>(position), id);
  t.leg_speeds.insert(t.leg_speeds.begin() + static_cast<std::ptrdiff_t>(position + 1),
                      outgoing_speed);
}

}  // namespace uavplan::detail
