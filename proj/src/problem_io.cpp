#include "uavplan/problem_io.hpp"

#include "uavplan/errors.hpp"
#include "uavplan/text_format.hpp"

namespace uavplan {

using text::format_number;

std::string serialize_problem(const DeliveryProblem& problem) {
  text::Writer w(kProblemFormat);
  w.comment("units: m, s, kg, J, m/s");
  w.field("name", problem.name.empty() ? std::string("-") : problem.name);
  const double depot[] = {problem.depot.x, problem.depot.y};
  w.list("depot_m", depot);
  w.field("empty_mass_kg", problem.drone.empty_mass);
  w.field("v_min_mps", problem.drone.v_min);
  w.field("v_max_mps", problem.drone.v_max);
  w.field("battery_capacity_j", problem.drone.battery_capacity);
  w.field("energy_reserve_j", problem.drone.energy_reserve);
  w.field("initial_energy_j", problem.initial_energy);
  w.field("waypoint_count", static_cast<std::uint64_t>(problem.size()));
  w.comment("waypoint id x_m y_m unload_kg deadline_s app_id");
  for (const auto& wp : problem.waypoints) {
    const std::string values[] = {std::to_string(wp.id),         format_number(wp.coords.x),
                                  format_number(wp.coords.y),    format_number(wp.unload_mass),
                                  format_number(wp.deadline),    std::to_string(wp.app_id)};
    w.raw("waypoint", values);
  }
  return w.str();
}

DeliveryProblem parse_problem(const std::string& contents) {
  auto doc = text::Document::parse(contents, kProblemFormat);
  DeliveryProblem p;
  const auto& name = doc.expect("name");
  text::expect_arity(name, 1);
  p.name = name.values[0] == "-" ? std::string() : name.values[0];
  const auto& depot = doc.expect("depot_m");
  text::expect_arity(depot, 2);
  p.depot = {text::to_number(depot, 0), text::to_number(depot, 1)};

  auto scalar = [&](const char* key) {
    const auto& rec = doc.expect(key);
    text::expect_arity(rec, 1);
    return text::to_number(rec, 0);
  };
  p.drone.empty_mass = scalar("empty_mass_kg");
  p.drone.v_min = scalar("v_min_mps");
  p.drone.v_max = scalar("v_max_mps");
  p.drone.battery_capacity = scalar("battery_capacity_j");
  p.drone.energy_reserve = scalar("energy_reserve_j");
  p.initial_energy = scalar("initial_energy_j");

  const auto& count_rec = doc.expect("waypoint_count");
  text::expect_arity(count_rec, 1);
  const auto count = text::to_unsigned(count_rec, 0);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto& rec = doc.expect("waypoint");
    text::expect_arity(rec, 6);
    Waypoint wp;
    wp.id = static_cast<WaypointId>(text::to_unsigned(rec, 0));
    wp.coords = {text::to_number(rec, 1), text::to_number(rec, 2)};
    wp.unload_mass = text::to_number(rec, 3);
    wp.deadline = text::to_number(rec, 4);
    wp.app_id = static_cast<std::uint32_t>(text::to_unsigned(rec, 5));
    p.waypoints.push_back(wp);
  }
  doc.finish();
  return p;
}

DeliveryProblem load_problem(const std::string& path) {
  return parse_problem(text::read_file(path));
}

void save_problem(const DeliveryProblem& problem, const std::string& path) {
  text::write_file(path, serialize_problem(problem));
}

std::string serialize_trajectory(const Trajectory& trajectory, const std::string& problem_name) {
  text::Writer w(kTrajectoryFormat);
  w.field("problem", problem_name.empty() ? std::string("-") : problem_name);
  w.field("visits", static_cast<std::uint64_t>(trajectory.order.size()));
  std::vector<std::string> ids;
  ids.reserve(trajectory.order.size());
  for (auto id : trajectory.order) ids.push_back(std::to_string(id));
  w.raw("order", ids);
  w.list("leg_speeds_mps", trajectory.leg_speeds);
  return w.str();
}

Trajectory parse_trajectory(const std::string& contents) {
  auto doc = text::Document::parse(contents, kTrajectoryFormat);
  text::expect_arity(doc.expect("problem"), 1);
  const auto& visits = doc.expect("visits");
  text::expect_arity(visits, 1);
  const auto count = text::to_unsigned(visits, 0);
  const auto& order = doc.expect("order");
  text::expect_arity(order, count);
  Trajectory t;
  for (std::size_t i = 0; i < order.values.size(); ++i) {
    t.order.push_back(static_cast<WaypointId>(text::to_unsigned(order, i)));
  }
  t.leg_speeds = text::to_numbers(doc.expect("leg_speeds_mps"));
  doc.finish();
  return t;
}

Trajectory load_trajectory(const std::string& path) {
  return parse_trajectory(text::read_file(path));
}

void save_trajectory(const Trajectory& trajectory, const std::string& path,
                     const std::string& problem_name) {
  text::write_file(path, serialize_trajectory(trajectory, problem_name));
}

std::string serialize_report(const FlightReport& report) {
  text::Writer w(kReportFormat);
  w.list("arrival_times_s", report.arrival_times);
  w.list("departing_masses_kg", report.departing_masses);
  w.list("leg_energies_j", report.leg_energies);
  w.field("initial_mass_kg", report.initial_mass);
  w.field("total_energy_j", report.total_energy);
  w.field("missed_deadlines", static_cast<std::uint64_t>(report.missed_deadlines));
  w.field("energy_feasible", report.energy_feasible);
  w.field("clamped", report.clamped);
  return w.str();
}

FlightReport parse_report(const std::string& contents) {
  auto doc = text::Document::parse(contents, kReportFormat);
  FlightReport r;
  r.arrival_times = text::to_numbers(doc.expect("arrival_times_s"));
  r.departing_masses = text::to_numbers(doc.expect("departing_masses_kg"));
  r.leg_energies = text::to_numbers(doc.expect("leg_energies_j"));
  auto one = [&](const char* key) -> const text::Record& {
    const auto& rec = doc.expect(key);
    text::expect_arity(rec, 1);
    return rec;
  };
  r.initial_mass = text::to_number(one("initial_mass_kg"), 0);
  r.total_energy = text::to_number(one("total_energy_j"), 0);
  r.missed_deadlines = static_cast<std::uint32_t>(text::to_unsigned(one("missed_deadlines"), 0));
  r.energy_feasible = text::to_bool(one("energy_feasible"), 0);
  r.clamped = text::to_bool(one("clamped"), 0);
  doc.finish();
  return r;
}

}  // namespace uavplan
