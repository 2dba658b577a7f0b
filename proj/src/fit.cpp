#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "uavplan/energy_model.hpp"
#include "uavplan/errors.hpp"

namespace uavplan {

namespace {

std::vector<double> regular_axis(double lo, double hi, std::size_t nodes) {
  std::vector<double> axis(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    axis[i] = i + 1 == nodes ? hi : lo + (hi - lo) * static_cast<double>(i) / (nodes - 1);
  }
  return axis;
}

std::pair<std::size_t, double> cell_of(const std::vector<double>& axis, double value) {
  auto it = std::upper_bound(axis.begin(), axis.end(), value);
  std::size_t upper = std::clamp<std::size_t>(static_cast<std::size_t>(it - axis.begin()), 1,
                                              axis.size() - 1);
  const std::size_t lower = upper - 1;
  return {lower, (value - axis[lower]) / (axis[upper] - axis[lower])};
}

// Weight of the second-difference smoothness rows. Bilinear data has zero
// second differences along each axis, so it is recovered exactly; the term
// only pins down nodes with no samples in their cells.
constexpr double kSmoothing = 1e-6;

}  // namespace

SurfaceFit fit_piecewise(std::span<const ThrustSample> samples, std::size_t mass_nodes,
                         std::size_t speed_nodes) {
  if (samples.size() < 4) {
    throw FitError("piecewise fit needs at least 4 samples, got " + std::to_string(samples.size()));
  }
  if (mass_nodes < 2 || speed_nodes < 2) throw FitError("piecewise fit needs >= 2 nodes per axis");
  double mass_lo = samples.front().mass, mass_hi = mass_lo;
  double speed_lo = samples.front().speed, speed_hi = speed_lo;
  for (const auto& s : samples) {
    if (!std::isfinite(s.mass) || !std::isfinite(s.speed) || !std::isfinite(s.fraction)) {
      throw FitError("piecewise fit samples must be finite");
    }
    mass_lo = std::min(mass_lo, s.mass);
    mass_hi = std::max(mass_hi, s.mass);
    speed_lo = std::min(speed_lo, s.speed);
    speed_hi = std::max(speed_hi, s.speed);
  }
  if (!(mass_hi > mass_lo) || !(speed_hi > speed_lo)) {
    throw FitError("piecewise fit samples do not span a mass x speed rectangle");
  }

  ThrustSurface surface;
  surface.mass_axis = regular_axis(mass_lo, mass_hi, mass_nodes);
  surface.speed_axis = regular_axis(speed_lo, speed_hi, speed_nodes);
  const auto node = [&](std::size_t m, std::size_t s) {
    return static_cast<Eigen::Index>(m * speed_nodes + s);
  };

  const Eigen::Index unknowns = static_cast<Eigen::Index>(mass_nodes * speed_nodes);
  const Eigen::Index smooth_rows = static_cast<Eigen::Index>(
      (mass_nodes >= 3 ? (mass_nodes - 2) * speed_nodes : 0) +
      (speed_nodes >= 3 ? mass_nodes * (speed_nodes - 2) : 0));
  const Eigen::Index rows = static_cast<Eigen::Index>(samples.size()) + smooth_rows;
  Eigen::MatrixXd design = Eigen::MatrixXd::Zero(rows, unknowns);
  Eigen::VectorXd target = Eigen::VectorXd::Zero(rows);

  Eigen::Index row = 0;
  for (const auto& s : samples) {
    const auto [m, tm] = cell_of(surface.mass_axis, s.mass);
    const auto [v, tv] = cell_of(surface.speed_axis, s.speed);
    design(row, node(m, v)) += (1 - tm) * (1 - tv);
    design(row, node(m, v + 1)) += (1 - tm) * tv;
    design(row, node(m + 1, v)) += tm * (1 - tv);
    design(row, node(m + 1, v + 1)) += tm * tv;
    target(row) = s.fraction;
    ++row;
  }
  for (std::size_t m = 1; m + 1 < mass_nodes; ++m) {
    for (std::size_t v = 0; v < speed_nodes; ++v, ++row) {
      design(row, node(m - 1, v)) = kSmoothing;
      design(row, node(m, v)) = -2 * kSmoothing;
      design(row, node(m + 1, v)) = kSmoothing;
    }
  }
  for (std::size_t m = 0; m < mass_nodes; ++m) {
    for (std::size_t v = 1; v + 1 < speed_nodes; ++v, ++row) {
      design(row, node(m, v - 1)) = kSmoothing;
      design(row, node(m, v)) = -2 * kSmoothing;
      design(row, node(m, v + 1)) = kSmoothing;
    }
  }

  const Eigen::VectorXd values = design.colPivHouseholderQr().solve(target);
  surface.fractions.assign(values.data(), values.data() + values.size());

  SurfaceFit fit;
  const auto n = static_cast<Eigen::Index>(samples.size());
  const Eigen::VectorXd residual = design.topRows(n) * values - target.head(n);
  fit.max_residual = residual.cwiseAbs().maxCoeff();
  fit.rms_residual = std::sqrt(residual.squaredNorm() / static_cast<double>(n));
  fit.surface = std::move(surface);
  return fit;
}

}  // namespace uavplan
