#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uavplan/energy_model.hpp"
#include "uavplan/planners.hpp"
#include "uavplan/problem.hpp"

namespace uavplan {

enum class PayloadClass : char { Light = 'L', Medium = 'M', Heavy = 'H' };

// Per-waypoint unload mass range of a payload class, kg.
struct MassRange {
  double lo = 0.0;
  double hi = 0.0;
};
MassRange payload_range(PayloadClass payload);

PayloadClass parse_payload_class(const std::string& label);
// Fixed depot coordinates of the two benchmark sites, "A" and "C".
Point depot_location(char label);

struct BenchmarkSpec {
  char depot_label = 'A';
  std::optional<Point> depot_coords;  // defaults to depot_location(depot_label)
  PayloadClass payload_class = PayloadClass::Medium;
  std::size_t waypoint_count = 5;
  std::size_t instance_index = 1;
  double area_half_width = 1000.0;     // m
  double deadline_min_factor = 1.2;
  double deadline_slack = 0.8;
  std::uint32_t app_count = 3;
  std::uint64_t rng_seed = 0;
  std::size_t min_waypoints = 5;
  std::size_t max_waypoints = 10;
  DroneParams drone;  // W_d 1 kg, 3..8 m/s, 4000 mAh at 11.1 V, 10% reserve

  // "<class>_<depot><index>", e.g. M_C3.
  std::string canonical_name() const;
  // Throws InputError.
  void validate() const;
};

struct CanonicalName {
  PayloadClass payload_class;
  char depot_label;
  std::size_t instance_index;
};
// Parses "M_C3"; nullopt for anything else.
std::optional<CanonicalName> parse_canonical_name(const std::string& name);

// One benchmark instance: waypoints uniform in the square around the depot,
// masses uniform in the class range, deadlines uniform between 1.2x the
// straight flight time at v_max and slack x the nearest-neighbour tour time
// at v_min. Deterministic in rng_seed.
DeliveryProblem generate(const BenchmarkSpec& spec);

struct SuiteEntry {
  std::string id;  // unique within a suite: "n<count>/<canonical name>"
  std::uint64_t seed = 0;
  DeliveryProblem problem;

  // Whether the exact oracle meets every deadline; computed on first use.
  bool oracle_zero_miss(const EnergyModel& model, const SpeedGrid& grid) const;

 private:
  mutable std::optional<bool> zero_miss_;
};

struct SuiteOptions {
  std::vector<std::size_t> counts{5, 6, 7, 8, 9, 10};
  std::vector<PayloadClass> classes{PayloadClass::Light, PayloadClass::Medium, PayloadClass::Heavy};
  std::vector<char> depots{'A', 'C'};
  std::size_t instances_per_cell = 3;
  std::uint64_t base_seed = 2024;
  BenchmarkSpec base;  // area, deadline factors and drone shared by every cell
};

std::string suite_entry_id(std::size_t count, const std::string& canonical_name);
// Seed of one suite cell, mixed from the base seed and the entry id.
std::uint64_t cell_seed(std::uint64_t base_seed, const std::string& entry_id);

// Cartesian product counts x classes x depots x instances, in that nesting order.
std::vector<SuiteEntry> generate_suite(const SuiteOptions& options);

// Writes `<dir>/n<count>/<name>.problem` per entry plus `<dir>/manifest.txt`.
void write_suite(const std::vector<SuiteEntry>& suite, const SuiteOptions& options,
                 const std::string& dir);
std::string serialize_manifest(const std::vector<SuiteEntry>& suite, const SuiteOptions& options);
// Loads the problems listed in `<dir>/manifest.txt`.
std::vector<SuiteEntry> read_suite(const std::string& dir);

}  // namespace uavplan
