#include "uavplan/energy_model.hpp"

#include <algorithm>
#include <cmath>

#include "uavplan/errors.hpp"
#include "uavplan/text_format.hpp"

namespace uavplan {

namespace {

bool strictly_increasing(const std::vector<double>& axis) {
  for (std::size_t i = 1; i < axis.size(); ++i) {
    if (!(axis[i] > axis[i - 1])) return false;
  }
  return true;
}

struct AxisPosition {
  std::size_t cell = 0;  // lower node of the bracketing interval
  double t = 0.0;        // offset within the interval, [0, 1]
  bool clamped = false;
};

// Places `value` on `axis`; values up to kClampTolerance * span outside are
// pulled onto the boundary, anything further out is a RangeError.
AxisPosition locate(const std::vector<double>& axis, double value, const char* name,
                    const char* unit) {
  const double lo = axis.front();
  const double hi = axis.back();
  const double slack = EnergyModel::kClampTolerance * (hi - lo);
  AxisPosition pos;
  if (!(value >= lo)) {
    if (!(value >= lo - slack)) {
      throw RangeError(std::string(name) + " " + text::format_number(value) + " " + unit +
                       " below model minimum " + text::format_number(lo) + " " + unit);
    }
    value = lo;
    pos.clamped = true;
  } else if (value > hi) {
    if (value > hi + slack) {
      throw RangeError(std::string(name) + " " + text::format_number(value) + " " + unit +
                       " above model maximum " + text::format_number(hi) + " " + unit);
    }
    value = hi;
    pos.clamped = true;
  }
  auto it = std::upper_bound(axis.begin(), axis.end(), value);
  std::size_t upper = static_cast<std::size_t>(it - axis.begin());
  upper = std::clamp<std::size_t>(upper, 1, axis.size() - 1);
  pos.cell = upper - 1;
  pos.t = (value - axis[pos.cell]) / (axis[upper] - axis[pos.cell]);
  return pos;
}

double lerp(double a, double b, double t) { return a + t * (b - a); }

}  // namespace

std::vector<std::string> check_model(const ThrustSurface& surface, const CurrentCurve& curve,
                                     int motor_count) {
  std::vector<std::string> errors;
  if (motor_count < 1) errors.push_back("motor_count: must be >= 1");
  if (surface.mass_axis.size() < 2) errors.push_back("surface.mass_axis: needs >= 2 nodes");
  if (surface.speed_axis.size() < 2) errors.push_back("surface.speed_axis: needs >= 2 nodes");
  if (!strictly_increasing(surface.mass_axis)) {
    errors.push_back("surface.mass_axis: must be strictly increasing");
  }
  if (!strictly_increasing(surface.speed_axis)) {
    errors.push_back("surface.speed_axis: must be strictly increasing");
  }
  if (!surface.speed_axis.empty() && !(surface.speed_axis.front() > 0)) {
    errors.push_back("surface.speed_axis: speeds must be > 0");
  }
  if (!surface.mass_axis.empty() && !(surface.mass_axis.front() > 0)) {
    errors.push_back("surface.mass_axis: masses must be > 0");
  }
  const std::size_t rows = surface.mass_axis.size();
  const std::size_t cols = surface.speed_axis.size();
  if (surface.fractions.size() != rows * cols) {
    errors.push_back("surface.fractions: expected " + std::to_string(rows * cols) +
                     " values, found " + std::to_string(surface.fractions.size()));
    return errors;
  }
  for (std::size_t i = 0; i < surface.fractions.size(); ++i) {
    const double f = surface.fractions[i];
    if (!(f > 0.0 && f <= 1.0)) {
      errors.push_back("surface.fractions[" + std::to_string(i / cols) + "][" +
                       std::to_string(i % cols) + "]: must lie in (0, 1]");
    }
  }
  for (std::size_t r = 1; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (surface.at(r, c) < surface.at(r - 1, c)) {
        errors.push_back("surface.fractions[" + std::to_string(r) + "][" + std::to_string(c) +
                         "]: must be non-decreasing in mass");
      }
    }
  }

  const auto& pts = curve.points;
  if (!(curve.battery_voltage > 0)) errors.push_back("curve.battery_voltage: must be > 0");
  if (pts.size() < 2) {
    errors.push_back("curve.points: needs >= 2 points");
    return errors;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!(pts[i].current > 0)) {
      errors.push_back("curve.points[" + std::to_string(i) + "].current: must be > 0");
    }
    if (i > 0 && !(pts[i].fraction > pts[i - 1].fraction)) {
      errors.push_back("curve.points[" + std::to_string(i) +
                       "].fraction: must be strictly increasing");
    }
    if (i > 0 && !(pts[i].current > pts[i - 1].current)) {
      errors.push_back("curve.points[" + std::to_string(i) +
                       "].current: must be strictly increasing");
    }
  }
  if (!surface.fractions.empty()) {
    const auto [lo, hi] = std::minmax_element(surface.fractions.begin(), surface.fractions.end());
    if (*lo < pts.front().fraction || *hi > pts.back().fraction) {
      errors.push_back("curve.points: fraction domain must cover every surface value");
    }
  }
  return errors;
}

EnergyModel::EnergyModel(ThrustSurface surface, CurrentCurve curve, int motor_count,
                         std::string provenance)
    : surface_(std::move(surface)),
      curve_(std::move(curve)),
      motor_count_(motor_count),
      provenance_(std::move(provenance)) {
  const auto errors = check_model(surface_, curve_, motor_count_);
  if (!errors.empty()) {
    std::string message = "invalid energy model:";
    for (const auto& e : errors) message += "\n  " + e;
    throw InputError(message);
  }
}

bool EnergyModel::covers(double mass, double speed) const {
  return mass >= min_mass() && mass <= max_mass() && speed >= min_speed() && speed <= max_speed();
}

Lookup EnergyModel::thrust_fraction(double total_mass, double speed) const {
  const auto m = locate(surface_.mass_axis, total_mass, "mass", "kg");
  const auto s = locate(surface_.speed_axis, speed, "speed", "m/s");
  const double low = lerp(surface_.at(m.cell, s.cell), surface_.at(m.cell, s.cell + 1), s.t);
  const double high =
      lerp(surface_.at(m.cell + 1, s.cell), surface_.at(m.cell + 1, s.cell + 1), s.t);
  return {lerp(low, high, m.t), m.clamped || s.clamped};
}

double EnergyModel::current_draw(double fraction) const {
  const auto& pts = curve_.points;
  if (!(fraction >= pts.front().fraction && fraction <= pts.back().fraction)) {
    throw RangeError("thrust fraction " + text::format_number(fraction) + " outside curve domain [" +
                     text::format_number(pts.front().fraction) + ", " +
                     text::format_number(pts.back().fraction) + "]");
  }
  auto it = std::upper_bound(pts.begin(), pts.end(), fraction,
                             [](double f, const CurrentPoint& p) { return f < p.fraction; });
  std::size_t upper = static_cast<std::size_t>(it - pts.begin());
  upper = std::clamp<std::size_t>(upper, 1, pts.size() - 1);
  const auto& a = pts[upper - 1];
  const auto& b = pts[upper];
  return lerp(a.current, b.current, (fraction - a.fraction) / (b.fraction - a.fraction));
}

Lookup EnergyModel::leg_energy(double departing_mass, double speed, double distance) const {
  if (!(speed > 0)) throw RangeError("leg speed must be > 0");
  if (!(distance >= 0)) throw RangeError("leg distance must be >= 0");
  if (distance == 0.0) return {0.0, false};
  const Lookup thrust = thrust_fraction(departing_mass, speed);
  const double amps = current_draw(thrust.value);
  return {amps * curve_.battery_voltage * (distance / speed), thrust.clamped};
}

EnergyModel EnergyModel::constant_current(double amps, double voltage, double min_mass,
                                          double max_mass, double min_speed, double max_speed) {
  ThrustSurface surface{{min_mass, max_mass}, {min_speed, max_speed}, {0.5, 0.5, 0.5, 0.5}};
  CurrentCurve curve{{{0.25, amps / 2}, {0.5, amps}, {0.75, amps * 1.5}}, voltage};
  return EnergyModel(std::move(surface), std::move(curve), 4, "constant-current stub");
}

}  // namespace uavplan
