#pragma once

#include <span>
#include <string>
#include <vector>

namespace uavplan {

// Value returned by a grid lookup. `clamped` marks a query that fell
// marginally outside the grid and was pulled back onto its boundary.
struct Lookup {
  double value = 0.0;
  bool clamped = false;
};

// Per-motor thrust fraction sampled on a rectangular (mass, speed) grid.
// `fractions` is row-major: one row per mass node, one column per speed node.
struct ThrustSurface {
  std::vector<double> mass_axis;   // kg, strictly increasing
  std::vector<double> speed_axis;  // m/s, strictly increasing
  std::vector<double> fractions;   // (0, 1]

  double at(std::size_t mass_index, std::size_t speed_index) const {
    return fractions[mass_index * speed_axis.size() + speed_index];
  }

  friend bool operator==(const ThrustSurface&, const ThrustSurface&) = default;
};

struct CurrentPoint {
  double fraction = 0.0;
  double current = 0.0;  // A

  friend bool operator==(const CurrentPoint&, const CurrentPoint&) = default;
};

// Battery current drawn by the whole motor set versus per-motor thrust fraction.
struct CurrentCurve {
  std::vector<CurrentPoint> points;
  double battery_voltage = 11.1;  // V

  friend bool operator==(const CurrentCurve&, const CurrentCurve&) = default;
};

// Payload- and speed-dependent propulsion energy model.
//
// Energy of a leg is the current drawn at the thrust fraction required for
// (departing mass, speed), times battery voltage, times leg duration.
// Instances are immutable once validated; every query is a pure function.
class EnergyModel {
 public:
  // Fraction of a grid axis span by which a query may overshoot before it is
  // rejected instead of clamped.
  static constexpr double kClampTolerance = 0.02;

  EnergyModel() = default;

  // Throws InputError listing every invariant violation.
  EnergyModel(ThrustSurface surface, CurrentCurve curve, int motor_count = 4,
              std::string provenance = {});

  const ThrustSurface& surface() const { return surface_; }
  const CurrentCurve& curve() const { return curve_; }
  int motor_count() const { return motor_count_; }
  // Free-text note carried through serialization, e.g. "synthetic".
  const std::string& provenance() const { return provenance_; }

  double min_mass() const { return surface_.mass_axis.front(); }
  double max_mass() const { return surface_.mass_axis.back(); }
  double min_speed() const { return surface_.speed_axis.front(); }
  double max_speed() const { return surface_.speed_axis.back(); }

  bool covers(double mass, double speed) const;

  // Bilinear interpolation of the thrust surface.
  Lookup thrust_fraction(double total_mass, double speed) const;

  // Piecewise-linear interpolation of the current curve. Throws RangeError
  // outside the curve's fraction domain.
  double current_draw(double fraction) const;

  // Joules spent flying `distance` meters at `speed` with `departing_mass` on board.
  Lookup leg_energy(double departing_mass, double speed, double distance) const;

  // Flat model: the surface is 0.5 everywhere and the curve passes through
  // (0.5, amps), so every leg draws `amps` at `voltage`. Used for
  // hand-checkable arithmetic.
  static EnergyModel constant_current(double amps, double voltage = 10.0, double min_mass = 0.5,
                                      double max_mass = 10.0, double min_speed = 1.0,
                                      double max_speed = 20.0);
  static EnergyModel constant_power(double watts, double voltage = 10.0) {
    return constant_current(watts / voltage, voltage);
  }

  friend bool operator==(const EnergyModel&, const EnergyModel&) = default;

 private:
  ThrustSurface surface_;
  CurrentCurve curve_;
  int motor_count_ = 4;
  std::string provenance_;
};

// Invariant check shared by the constructor and the config loader.
std::vector<std::string> check_model(const ThrustSurface& surface, const CurrentCurve& curve,
                                     int motor_count);

struct ThrustSample {
  double mass = 0.0;
  double speed = 0.0;
  double fraction = 0.0;
};

struct SurfaceFit {
  ThrustSurface surface;
  double max_residual = 0.0;
  double rms_residual = 0.0;
};

// Least-squares piecewise-bilinear regression on a regular grid with
// `mass_nodes` x `speed_nodes` nodes spanning the samples' bounding box.
// Throws FitError for fewer than 4 samples or a degenerate span.
SurfaceFit fit_piecewise(std::span<const ThrustSample> samples, std::size_t mass_nodes,
                         std::size_t speed_nodes);

// Parameters of the analytic stand-in used to synthesize the reference model.
struct ReferenceModelParams {
  double gravity = 9.81;               // m/s^2
  int motor_count = 4;
  double max_motor_thrust = 31.0;      // N per motor
  double drag_coefficient = 1.0;       // kappa in (1 + kappa (V / V_max)^2)
  double reference_speed = 8.0;        // V_max used by the multiplier, m/s
  double idle_current = 1.0;           // A, constant term of the current curve
  double linear_current = 20.0;        // A per unit thrust fraction
  double quadratic_current = 80.0;     // A per unit thrust fraction squared
  double battery_voltage = 11.1;       // V
  double min_mass = 1.0, max_mass = 6.0;
  double min_speed = 3.0, max_speed = 8.0;
  std::size_t mass_nodes = 21, speed_nodes = 11;
  std::size_t curve_points = 21;
};

// Per-motor thrust fraction of the analytic stand-in.
double reference_thrust_fraction(const ReferenceModelParams& params, double mass, double speed);

// Synthesizes a thrust dataset from the analytic stand-in, fits it with
// fit_piecewise and pairs it with an affine-plus-quadratic current curve.
EnergyModel reference_model(const ReferenceModelParams& params = {});

// Text config (format tag "uavplan-energy-model/1").
std::string serialize_model(const EnergyModel& model);
EnergyModel parse_model(const std::string& text);
EnergyModel load_model(const std::string& path);
void save_model(const EnergyModel& model, const std::string& path);

}  // namespace uavplan
