#include <cmath>

#include "uavplan/energy_model.hpp"
#include "uavplan/errors.hpp"

namespace uavplan {

double reference_thrust_fraction(const ReferenceModelParams& p, double mass, double speed) {
  const double hover = mass * p.gravity / p.motor_count;
  const double ratio = speed / p.reference_speed;
  return hover * (1.0 + p.drag_coefficient * ratio * ratio) / p.max_motor_thrust;
}

EnergyModel reference_model(const ReferenceModelParams& p) {
  // Dense synthetic "flight trace": four samples per grid interval on each axis.
  const std::size_t mass_samples = 4 * (p.mass_nodes - 1) + 1;
  const std::size_t speed_samples = 4 * (p.speed_nodes - 1) + 1;
  std::vector<ThrustSample> samples;
  samples.reserve(mass_samples * speed_samples);
  for (std::size_t i = 0; i < mass_samples; ++i) {
    const double mass = p.min_mass + (p.max_mass - p.min_mass) * static_cast<double>(i) /
                                         static_cast<double>(mass_samples - 1);
    for (std::size_t j = 0; j < speed_samples; ++j) {
      const double speed = p.min_speed + (p.max_speed - p.min_speed) * static_cast<double>(j) /
                                             static_cast<double>(speed_samples - 1);
      samples.push_back({mass, speed, reference_thrust_fraction(p, mass, speed)});
    }
  }
  SurfaceFit fit = fit_piecewise(samples, p.mass_nodes, p.speed_nodes);

  CurrentCurve curve;
  curve.battery_voltage = p.battery_voltage;
  for (std::size_t k = 0; k < p.curve_points; ++k) {
    const double f = static_cast<double>(k) / static_cast<double>(p.curve_points - 1);
    curve.points.push_back({f, p.idle_current + p.linear_current * f + p.quadratic_current * f * f});
  }
  return EnergyModel(std::move(fit.surface), std::move(curve), p.motor_count,
                     "synthetic analytic stand-in, not measured data");
}

}  // namespace uavplan
