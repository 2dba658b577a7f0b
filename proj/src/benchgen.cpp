#include "uavplan/benchgen.hpp"

#include <filesystem>
#include <set>

#include "uavplan/errors.hpp"
#include "uavplan/problem_io.hpp"
#include "uavplan/rng.hpp"
#include "uavplan/text_format.hpp"

namespace uavplan {

namespace fs = std::filesystem;

namespace {
constexpr const char* kManifestFormat = "uavplan-suite/1";
}

MassRange payload_range(PayloadClass payload) {
  switch (payload) {
    case PayloadClass::Light:
      return {0.05, 0.15};
    case PayloadClass::Medium:
      return {0.15, 0.30};
    case PayloadClass::Heavy:
      return {0.30, 0.50};
  }
  throw InputError("unknown payload class");
}

PayloadClass parse_payload_class(const std::string& label) {
  if (label == "L") return PayloadClass::Light;
  if (label == "M") return PayloadClass::Medium;
  if (label == "H") return PayloadClass::Heavy;
  throw InputError("payload class must be L, M or H, got '" + label + "'");
}

Point depot_location(char label) {
  switch (label) {
    case 'A':
      return {0.0, 0.0};
    case 'C':
      return {2400.0, -1300.0};
  }
  throw InputError(std::string("depot must be A or C, got '") + label + "'");
}

std::string BenchmarkSpec::canonical_name() const {
  return std::string(1, static_cast<char>(payload_class)) + "_" + depot_label +
         std::to_string(instance_index);
}

void BenchmarkSpec::validate() const {
  depot_location(depot_label);
  if (waypoint_count < min_waypoints || waypoint_count > max_waypoints) {
    throw InputError("waypoint count " + std::to_string(waypoint_count) + " outside [" +
                     std::to_string(min_waypoints) + ", " + std::to_string(max_waypoints) + "]");
  }
  if (instance_index < 1) throw InputError("instance index starts at 1");
  if (!(area_half_width > 0)) throw InputError("area half-width must be > 0");
  if (!(deadline_slack > 0)) throw InputError("deadline slack must be > 0");
  if (!(deadline_min_factor > 0)) throw InputError("deadline min factor must be > 0");
  if (app_count < 1) throw InputError("app count must be >= 1");
  if (!(drone.v_min > 0 && drone.v_min <= drone.v_max)) throw InputError("invalid drone speeds");
}

std::optional<CanonicalName> parse_canonical_name(const std::string& name) {
  if (name.size() < 4 || name[1] != '_') return std::nullopt;
  CanonicalName out{};
  switch (name[0]) {
    case 'L':
    case 'M':
    case 'H':
      out.payload_class = static_cast<PayloadClass>(name[0]);
      break;
    default:
      return std::nullopt;
  }
  if (name[2] != 'A' && name[2] != 'C') return std::nullopt;
  out.depot_label = name[2];
  std::size_t index = 0;
  for (std::size_t k = 3; k < name.size(); ++k) {
    if (name[k] < '0' || name[k] > '9') return std::nullopt;
    index = index * 10 + static_cast<std::size_t>(name[k] - '0');
  }
  if (index == 0) return std::nullopt;
  out.instance_index = index;
  return out;
}

DeliveryProblem generate(const BenchmarkSpec& spec) {
  spec.validate();
  Rng rng(spec.rng_seed);
  DeliveryProblem p;
  p.name = spec.canonical_name();
  p.depot = spec.depot_coords.value_or(depot_location(spec.depot_label));
  p.drone = spec.drone;
  p.initial_energy = spec.drone.battery_capacity;

  const double w = spec.area_half_width;
  p.waypoints.resize(spec.waypoint_count);
  for (std::size_t i = 0; i < spec.waypoint_count; ++i) {
    auto& wp = p.waypoints[i];
    wp.id = static_cast<WaypointId>(i + 1);
    wp.coords.x = p.depot.x + uniform_real(rng, -w, w);
    wp.coords.y = p.depot.y + uniform_real(rng, -w, w);
  }
  const MassRange masses = payload_range(spec.payload_class);
  for (auto& wp : p.waypoints) wp.unload_mass = uniform_real(rng, masses.lo, masses.hi);
  for (auto& wp : p.waypoints) {
    wp.app_id = static_cast<std::uint32_t>(1 + uniform_index(rng, spec.app_count));
  }

  // Tour length estimate used for the upper end of the deadline interval.
  double tour = 0.0;
  Point here = p.depot;
  for (WaypointId id : nearest_neighbor_order(p)) {
    const Point& next = p.waypoints[id - 1].coords;
    tour += distance(here, next);
    here = next;
  }
  tour += distance(here, p.depot);
  const double upper = tour / spec.drone.v_min * spec.deadline_slack;

  for (auto& wp : p.waypoints) {
    const double lower = distance(p.depot, wp.coords) / spec.drone.v_max * spec.deadline_min_factor;
    const double hi = std::max(upper, lower);
    // 1 - u lies in (0, 1], so the deadline lands in (lower, hi] and stays positive
    wp.deadline = lower + (1.0 - uniform01(rng)) * (hi - lower);
  }
  return p;
}

bool SuiteEntry::oracle_zero_miss(const EnergyModel& model, const SpeedGrid& grid) const {
  if (!zero_miss_) zero_miss_ = plan_exact(problem, model, grid).cost.misses == 0;
  return *zero_miss_;
}

std::string suite_entry_id(std::size_t count, const std::string& canonical_name) {
  return "n" + std::to_string(count) + "/" + canonical_name;
}

std::uint64_t cell_seed(std::uint64_t base_seed, const std::string& entry_id) {
  return splitmix64(base_seed ^ splitmix64(fnv1a(entry_id)));
}

std::vector<SuiteEntry> generate_suite(const SuiteOptions& options) {
  if (options.counts.empty() || options.classes.empty() || options.depots.empty() ||
      options.instances_per_cell == 0) {
    throw InputError("suite parameters must be non-empty");
  }
  std::vector<SuiteEntry> suite;
  std::set<std::string> ids;
  for (std::size_t count : options.counts) {
    for (PayloadClass payload : options.classes) {
      for (char depot : options.depots) {
        for (std::size_t k = 1; k <= options.instances_per_cell; ++k) {
          BenchmarkSpec spec = options.base;
          spec.waypoint_count = count;
          spec.payload_class = payload;
          spec.depot_label = depot;
          spec.depot_coords.reset();
          spec.instance_index = k;
          SuiteEntry entry;
          entry.id = suite_entry_id(count, spec.canonical_name());
          if (!ids.insert(entry.id).second) throw InputError("duplicate suite entry " + entry.id);
          entry.seed = cell_seed(options.base_seed, entry.id);
          spec.rng_seed = entry.seed;
          entry.problem = generate(spec);
          suite.push_back(std::move(entry));
        }
      }
    }
  }
  return suite;
}

std::string serialize_manifest(const std::vector<SuiteEntry>& suite, const SuiteOptions& options) {
  text::Writer w(kManifestFormat);
  w.field("base_seed", static_cast<std::uint64_t>(options.base_seed));
  std::vector<std::string> counts, classes, depots;
  for (auto c : options.counts) counts.push_back(std::to_string(c));
  for (auto c : options.classes) classes.emplace_back(1, static_cast<char>(c));
  for (auto d : options.depots) depots.emplace_back(1, d);
  w.raw("counts", counts);
  w.raw("classes", classes);
  w.raw("depots", depots);
  w.field("instances_per_cell", static_cast<std::uint64_t>(options.instances_per_cell));
  w.field("area_half_width_m", options.base.area_half_width);
  w.field("deadline_min_factor", options.base.deadline_min_factor);
  w.field("deadline_slack", options.base.deadline_slack);
  w.field("entry_count", static_cast<std::uint64_t>(suite.size()));
  w.comment("entry id file seed");
  for (const auto& e : suite) {
    const std::string values[] = {e.id, e.id + ".problem", std::to_string(e.seed)};
    w.raw("entry", values);
  }
  return w.str();
}

void write_suite(const std::vector<SuiteEntry>& suite, const SuiteOptions& options,
                 const std::string& dir) {
  for (const auto& e : suite) {
    const fs::path path = fs::path(dir) / (e.id + ".problem");
    fs::create_directories(path.parent_path());
    save_problem(e.problem, path.string());
  }
  fs::create_directories(dir);
  text::write_file((fs::path(dir) / "manifest.txt").string(), serialize_manifest(suite, options));
}

std::vector<SuiteEntry> read_suite(const std::string& dir) {
  auto doc = text::Document::parse(text::read_file((fs::path(dir) / "manifest.txt").string()),
                                   kManifestFormat);
  for (const char* key : {"base_seed", "counts", "classes", "depots", "instances_per_cell",
                          "area_half_width_m", "deadline_min_factor", "deadline_slack"}) {
    doc.expect(key);
  }
  const auto& count = doc.expect("entry_count");
  text::expect_arity(count, 1);
  const auto entries = text::to_unsigned(count, 0);
  std::vector<SuiteEntry> suite;
  for (std::uint64_t i = 0; i < entries; ++i) {
    const auto& rec = doc.expect("entry");
    text::expect_arity(rec, 3);
    SuiteEntry e;
    e.id = rec.values[0];
    e.seed = text::to_unsigned(rec, 2);
    e.problem = load_problem((fs::path(dir) / rec.values[1]).string());
    suite.push_back(std::move(e));
  }
  doc.finish();
  return suite;
}

}  // namespace uavplan
