#pragma once

#include "uavplan/energy_model.hpp"
#include "uavplan/problem.hpp"

namespace uavplan {

// Flies `trajectory` over `problem` leg by leg: arrival times, departing
// masses, per-leg energies, deadline misses (unvisited waypoints included)
// and the energy-budget verdict.
//
// Throws InputError for unknown or repeated waypoint ids or a wrong leg
// count, ConstraintError for a speed outside [v_min, v_max] and RangeError
// when the energy model cannot price a leg.
FlightReport evaluate(const DeliveryProblem& problem, const Trajectory& trajectory,
                      const EnergyModel& model);

}  // namespace uavplan
