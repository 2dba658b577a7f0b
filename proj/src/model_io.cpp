#include "uavplan/energy_model.hpp"
#include "uavplan/errors.hpp"
#include "uavplan/text_format.hpp"

namespace uavplan {

namespace {
constexpr const char* kModelFormat = "uavplan-energy-model/1";
}

std::string serialize_model(const EnergyModel& model) {
  const auto& surface = model.surface();
  text::Writer w(kModelFormat);
  w.field("provenance", model.provenance().empty() ? std::string("-") : model.provenance());
  w.field("motor_count", static_cast<std::uint64_t>(model.motor_count()));
  w.field("battery_voltage_v", model.curve().battery_voltage);
  w.list("mass_axis_kg", surface.mass_axis);
  w.list("speed_axis_mps", surface.speed_axis);
  w.comment("per-motor thrust fraction of maximum, one row per mass node, columns follow speed_axis_mps");
  const std::size_t cols = surface.speed_axis.size();
  for (std::size_t r = 0; r < surface.mass_axis.size(); ++r) {
    w.list("thrust_fraction_row",
           std::span<const double>(surface.fractions).subspan(r * cols, cols));
  }
  w.field("current_point_count", static_cast<std::uint64_t>(model.curve().points.size()));
  w.comment("current_point thrust_fraction current_a");
  for (const auto& p : model.curve().points) {
    const double values[] = {p.fraction, p.current};
    w.list("current_point", values);
  }
  return w.str();
}

EnergyModel parse_model(const std::string& contents) {
  auto doc = text::Document::parse(contents, kModelFormat);
  std::string provenance;
  for (const auto& token : doc.expect("provenance").values) {
    if (!provenance.empty()) provenance += ' ';
    provenance += token;
  }
  if (provenance == "-") provenance.clear();
  const auto& motors = doc.expect("motor_count");
  text::expect_arity(motors, 1);
  const int motor_count = static_cast<int>(text::to_unsigned(motors, 0));
  const auto& volts = doc.expect("battery_voltage_v");
  text::expect_arity(volts, 1);

  ThrustSurface surface;
  surface.mass_axis = text::to_numbers(doc.expect("mass_axis_kg"));
  surface.speed_axis = text::to_numbers(doc.expect("speed_axis_mps"));
  for (std::size_t r = 0; r < surface.mass_axis.size(); ++r) {
    const auto& rec = doc.expect("thrust_fraction_row");
    text::expect_arity(rec, surface.speed_axis.size());
    const auto row = text::to_numbers(rec);
    surface.fractions.insert(surface.fractions.end(), row.begin(), row.end());
  }

  CurrentCurve curve;
  curve.battery_voltage = text::to_number(volts, 0);
  const auto& count = doc.expect("current_point_count");
  text::expect_arity(count, 1);
  const auto points = text::to_unsigned(count, 0);
  for (std::uint64_t i = 0; i < points; ++i) {
    const auto& rec = doc.expect("current_point");
    text::expect_arity(rec, 2);
    curve.points.push_back({text::to_number(rec, 0), text::to_number(rec, 1)});
  }
  doc.finish();
  return EnergyModel(std::move(surface), std::move(curve), motor_count, std::move(provenance));
}

EnergyModel load_model(const std::string& path) { return parse_model(text::read_file(path)); }

void save_model(const EnergyModel& model, const std::string& path) {
  text::write_file(path, serialize_model(model));
}

}  // namespace uavplan
