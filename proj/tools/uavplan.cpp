// uavplan: benchmark generation, trajectory planning, evaluation and the
// comparison/latency harness behind one command line.
//
// Exit codes: 0 success (missed deadlines included), 1 harness failure
// (dominance violated), 2 usage, 3 invalid input, 4 resource limit.

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <omp.h>
#include <sstream>

#include "uavplan/benchgen.hpp"
#include "uavplan/energy_model.hpp"
#include "uavplan/errors.hpp"
#include "uavplan/evaluate.hpp"
#include "uavplan/harness.hpp"
#include "uavplan/planners.hpp"
#include "uavplan/problem_io.hpp"
#include "uavplan/text_format.hpp"

namespace fs = std::filesystem;
using namespace uavplan;

namespace {

enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2, kInvalid = 3, kLimit = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Output { Human, Json, Quiet };

struct Globals {
  bool json = false;
  bool quiet = false;
  Output output() const { return quiet ? Output::Quiet : json ? Output::Json : Output::Human; }
};

struct PlannerFlags {
  std::vector<double> speeds;
  std::uint32_t sa_iters = 5000;
  std::uint64_t sa_seed = 1;
  double sa_temp = 0.0;
  double sa_cooling = 0.97;
  std::uint32_t sa_moves = 50;
  double sa_penalty = 100.0;
  std::size_t exact_max_n = 10;
  std::uint64_t exact_time_ms = 0;

  void add(CLI::App& cmd) {
    cmd.add_option("--speeds", speeds, "Quantized speed levels in m/s (default: integers in [v_min, v_max])")
        ->delimiter(',');
    cmd.add_option("--sa-iters", sa_iters, "Simulated-annealing move budget")->capture_default_str();
    cmd.add_option("--sa-seed", sa_seed, "Simulated-annealing RNG seed")->capture_default_str();
    cmd.add_option("--sa-temp", sa_temp, "Initial temperature (<= 0: 10% of the seed's cost)")
        ->capture_default_str();
    cmd.add_option("--sa-cooling", sa_cooling, "Geometric cooling factor")->capture_default_str();
    cmd.add_option("--sa-moves", sa_moves, "Moves per temperature step")->capture_default_str();
    cmd.add_option("--sa-penalty", sa_penalty, "Cost per joule over the energy budget")
        ->capture_default_str();
    cmd.add_option("--exact-max-n", exact_max_n, "Largest instance the exact search accepts")
        ->capture_default_str();
    cmd.add_option("--exact-time-ms", exact_time_ms, "Exact search time budget (0: unlimited)")
        ->capture_default_str();
  }

  PlannerConfig config(const DroneParams& drone) const {
    PlannerConfig c{speeds.empty() ? SpeedGrid::integer_levels(drone) : SpeedGrid(speeds)};
    c.sa.max_iterations = sa_iters;
    c.sa.rng_seed = sa_seed;
    c.sa.initial_temperature = sa_temp;
    c.sa.cooling_factor = sa_cooling;
    c.sa.moves_per_temperature = sa_moves;
    c.sa.infeasibility_penalty_rate = sa_penalty;
    c.exact.max_waypoints = exact_max_n;
    if (exact_time_ms > 0) c.exact.time_budget = std::chrono::milliseconds(exact_time_ms);
    return c;
  }
};

EnergyModel model_from(const std::string& path) {
  return path.empty() ? reference_model() : load_model(path);
}

nlohmann::json cost_json(const Cost& cost) {
  return {{"misses", cost.misses}, {"energy_j", cost.energy}, {"makespan_s", cost.makespan}};
}

void print_report(const DeliveryProblem& problem, const Trajectory& t, const FlightReport& r) {
  std::cout << "problem " << (problem.name.empty() ? "-" : problem.name) << ": visits "
            << t.order.size() << "/" << problem.size() << ", missed " << r.missed_deadlines
            << ", energy " << text::format_number(r.total_energy) << " J of "
            << text::format_number(problem.energy_budget()) << " J budget"
            << (r.energy_feasible ? "" : " (OVER BUDGET)") << ", return at "
            << text::format_number(r.makespan()) << " s" << (r.clamped ? " [model clamped]" : "")
            << '\n';
  std::cout << "order:";
  for (auto id : t.order) std::cout << ' ' << id;
  std::cout << "\nspeeds:";
  for (double v : t.leg_speeds) std::cout << ' ' << text::format_number(v);
  std::cout << '\n';
}

// ---- generate ------------------------------------------------------------

struct GenerateCmd {
  std::string payload_class, depot;
  std::size_t index = 0, count = 0;
  std::uint64_t seed = 2024;
  std::string out = ".";
  bool suite = false;
  std::vector<std::size_t> counts{5, 6, 7, 8, 9, 10};
  std::vector<std::string> classes{"L", "M", "H"}, depots{"A", "C"};
  std::size_t instances = 3;
  double area = 1000.0, min_factor = 1.2, slack = 0.8;

  Globals* globals = nullptr;

  void add(CLI::App& app, Globals& g) {
    globals = &g;
    auto* cmd = app.add_subcommand("generate", "Generate benchmark problems");
    cmd->add_option("--class", payload_class, "Payload class: L, M or H");
    cmd->add_option("--depot", depot, "Depot site: A or C");
    cmd->add_option("--index", index, "Instance index (>= 1)");
    cmd->add_option("--n", count, "Waypoint count");
    cmd->add_option("--seed", seed, "RNG seed (base seed with --suite)")->capture_default_str();
    cmd->add_option("--out", out, "Output directory")->capture_default_str();
    cmd->add_flag("--suite", suite, "Generate the full counts x classes x depots x instances grid");
    cmd->add_option("--counts", counts, "Suite waypoint counts")->delimiter(',');
    cmd->add_option("--classes", classes, "Suite payload classes")->delimiter(',');
    cmd->add_option("--depots", depots, "Suite depots")->delimiter(',');
    cmd->add_option("--instances", instances, "Instances per suite cell")->capture_default_str();
    cmd->add_option("--area", area, "Half-width of the sampled square, m")->capture_default_str();
    cmd->add_option("--deadline-min-factor", min_factor)->capture_default_str();
    cmd->add_option("--deadline-slack", slack)->capture_default_str();
    cmd->callback([this, cmd] { run(*cmd); });
  }

  static char depot_label(const std::string& s) {
    if (s.size() != 1) throw InputError("depot must be A or C, got '" + s + "'");
    return s[0];
  }

  BenchmarkSpec base() const {
    BenchmarkSpec spec;
    spec.area_half_width = area;
    spec.deadline_min_factor = min_factor;
    spec.deadline_slack = slack;
    return spec;
  }

  void run(const CLI::App& cmd) {
    const bool quiet = globals->output() != Output::Human;
    fs::create_directories(out);
    if (suite) {
      SuiteOptions options;
      options.counts = counts;
      options.classes.clear();
      for (const auto& c : classes) options.classes.push_back(parse_payload_class(c));
      options.depots.clear();
      for (const auto& d : depots) options.depots.push_back(depot_label(d));
      options.instances_per_cell = instances;
      options.base_seed = seed;
      options.base = base();
      const auto entries = generate_suite(options);
      write_suite(entries, options, out);
      if (!quiet) std::cout << "wrote " << entries.size() << " problems to " << out << '\n';
      return;
    }
    for (const char* flag : {"--class", "--depot", "--index", "--n"}) {
      if (cmd.count(flag) == 0) throw UsageError(std::string(flag) + " is required (or use --suite)");
    }
    BenchmarkSpec spec = base();
    spec.payload_class = parse_payload_class(payload_class);
    spec.depot_label = depot_label(depot);
    spec.instance_index = index;
    spec.waypoint_count = count;
    spec.rng_seed = seed;
    const auto problem = generate(spec);
    const fs::path path = fs::path(out) / (problem.name + ".problem");
    save_problem(problem, path.string());
    SuiteOptions options;
    options.counts = {count};
    options.classes = {spec.payload_class};
    options.depots = {spec.depot_label};
    options.instances_per_cell = 1;
    options.base_seed = seed;
    options.base = spec;
    SuiteEntry entry;
    entry.id = suite_entry_id(count, problem.name);
    entry.seed = seed;
    entry.problem = problem;
    text::write_file((fs::path(out) / "manifest.txt").string(),
                     serialize_manifest({entry}, options));
    if (!quiet) std::cout << "wrote " << path.string() << '\n';
  }
};

// ---- plan ------------------------------------------------------------------

struct PlanCmd {
  std::string problem_path, model_path, planner = "sa", out, report_path, seed_path;
  PlannerFlags flags;
  Globals* globals = nullptr;

  void add(CLI::App& app, Globals& g) {
    globals = &g;
    auto* cmd = app.add_subcommand("plan", "Plan a trajectory for one problem");
    cmd->add_option("--problem", problem_path, "Problem file")->required();
    cmd->add_option("--model", model_path, "Energy model config (default: built-in reference)");
    cmd->add_option("--planner", planner, "greedy, sa or exact")
        ->check(CLI::IsMember({"greedy", "sa", "exact"}))
        ->capture_default_str();
    cmd->add_option("--out", out, "Trajectory output file")->required();
    cmd->add_option("--report", report_path, "Flight report output file");
    cmd->add_option("--seed-trajectory", seed_path, "SA start trajectory (default: greedy)");
    flags.add(*cmd);
    cmd->callback([this] { run(); });
  }

  void run() {
    const auto problem = load_problem(problem_path);
    const auto model = model_from(model_path);
    const auto config = flags.config(problem.drone);

    const auto start = std::chrono::steady_clock::now();
    PlanResult result;
    if (planner == "greedy") {
      result = plan_greedy(problem, model, config.grid);
    } else if (planner == "sa") {
      const Trajectory seed = seed_path.empty() ? plan_greedy(problem, model, config.grid).trajectory
                                                : load_trajectory(seed_path);
      result = plan_sa(problem, model, seed, config.grid, config.sa);
    } else {
      result = plan_exact(problem, model, config.grid, config.exact);
    }
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    save_trajectory(result.trajectory, out, problem.name);
    if (!report_path.empty()) text::write_file(report_path, serialize_report(result.report));

    switch (globals->output()) {
      case Output::Quiet:
        break;
      case Output::Json: {
        nlohmann::json record = {{"problem", problem.name},
                                 {"planner", planner},
                                 {"cost", cost_json(result.cost)},
                                 {"energy_feasible", result.report.energy_feasible},
                                 {"wall_ms", wall_ms},
                                 {"iterations", result.iterations},
                                 {"complete", result.complete}};
        std::cout << record.dump() << '\n';
        break;
      }
      case Output::Human:
        print_report(problem, result.trajectory, result.report);
        if (!result.complete) std::cout << "exact search hit its time budget: best so far\n";
        break;
    }
  }
};

// ---- evaluate --------------------------------------------------------------

struct EvaluateCmd {
  std::string problem_path, trajectory_path, model_path, report_path;
  Globals* globals = nullptr;

  void add(CLI::App& app, Globals& g) {
    globals = &g;
    auto* cmd = app.add_subcommand("evaluate", "Evaluate a trajectory against a problem");
    cmd->add_option("--problem", problem_path, "Problem file")->required();
    cmd->add_option("--trajectory", trajectory_path, "Trajectory file")->required();
    cmd->add_option("--model", model_path, "Energy model config (default: built-in reference)");
    cmd->add_option("--report", report_path, "Flight report output file");
    cmd->callback([this] { run(); });
  }

  void run() {
    const auto problem = load_problem(problem_path);
    const auto trajectory = load_trajectory(trajectory_path);
    const auto model = model_from(model_path);
    const auto violations = validate_trajectory(problem, trajectory);
    if (!violations.empty()) throw InputError("invalid trajectory:\n" + describe(violations));
    const auto report = evaluate(problem, trajectory, model);
    if (!report_path.empty()) text::write_file(report_path, serialize_report(report));

    switch (globals->output()) {
      case Output::Quiet:
        break;
      case Output::Json: {
        nlohmann::json record = {{"problem", problem.name},
                                 {"cost", cost_json(cost_of(report))},
                                 {"arrival_times_s", report.arrival_times},
                                 {"departing_masses_kg", report.departing_masses},
                                 {"leg_energies_j", report.leg_energies},
                                 {"energy_feasible", report.energy_feasible},
                                 {"clamped", report.clamped}};
        std::cout << record.dump() << '\n';
        break;
      }
      case Output::Human:
        print_report(problem, trajectory, report);
        break;
    }
  }
};

// ---- compare / bench ----------------------------------------------------------

struct CompareCmd {
  std::string suite_dir, model_path, out;
  std::size_t oracle_max_n = 10;
  int threads = 0;
  PlannerFlags flags;
  Globals* globals = nullptr;

  void add(CLI::App& app, Globals& g) {
    globals = &g;
    auto* cmd = app.add_subcommand("compare", "Met-deadline comparison of greedy, SA and exact");
    cmd->add_option("--suite", suite_dir, "Suite directory (with manifest.txt)")->required();
    cmd->add_option("--model", model_path, "Energy model config (default: built-in reference)");
    cmd->add_option("--out", out, "Output directory (default: the suite directory)");
    cmd->add_option("--oracle-max-n", oracle_max_n, "Leave the exact column blank above this n")
        ->capture_default_str();
    cmd->add_option("--threads", threads, "Worker threads (0: OpenMP default)");
    flags.add(*cmd);
    cmd->callback([this] { run(); });
  }

  int status = kOk;

  void run() {
    const auto suite = read_suite(suite_dir);
    const auto model = model_from(model_path);
    if (threads > 0) omp_set_num_threads(threads);
    auto config = flags.config(suite.empty() ? DroneParams{} : suite.front().problem.drone);
    config.oracle_max_n = oracle_max_n;
    const auto result = compare(suite, model, config);
    const fs::path dir = out.empty() ? fs::path(suite_dir) : fs::path(out);
    fs::create_directories(dir);
    text::write_file((dir / "compare.csv").string(), compare_csv(result));
    text::write_file((dir / "compare_groups.csv").string(), compare_groups_csv(result));
    for (const auto& f : result.failures) std::cerr << "failed: " << f << '\n';
    for (const auto& v : result.dominance_violations) std::cerr << "dominance violated: " << v << '\n';
    if (!result.dominance_violations.empty()) status = kFailed;

    if (globals->output() == Output::Json) {
      nlohmann::json groups = nlohmann::json::array();
      for (const auto& grp : result.groups) {
        groups.push_back({{"n", grp.n}, {"planner", grp.planner}, {"problems", grp.problems},
                          {"mean_met_percent", grp.mean_met_percent}});
      }
      std::cout << nlohmann::json{{"groups", groups},
                                  {"failures", result.failures.size()},
                                  {"dominance_violations", result.dominance_violations.size()}}
                       .dump()
                << '\n';
    } else if (globals->output() == Output::Human) {
      std::cout << compare_groups_csv(result);
    }
  }
};

struct BenchCmd {
  std::string suite_dir, model_path, out;
  std::size_t reps = 5;
  PlannerFlags flags;
  Globals* globals = nullptr;

  void add(CLI::App& app, Globals& g) {
    globals = &g;
    auto* cmd = app.add_subcommand("bench", "Planner latency per waypoint count");
    cmd->add_option("--suite", suite_dir, "Suite directory (with manifest.txt)")->required();
    cmd->add_option("--model", model_path, "Energy model config (default: built-in reference)");
    cmd->add_option("--out", out, "Output directory (default: the suite directory)");
    cmd->add_option("--reps", reps, "Timed repetitions per problem")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    flags.add(*cmd);
    cmd->callback([this] { run(); });
  }

  void run() {
    const auto suite = read_suite(suite_dir);
    const auto model = model_from(model_path);
    const auto config = flags.config(suite.empty() ? DroneParams{} : suite.front().problem.drone);
    const auto report = measure_latency(suite, model, config, reps);
    const fs::path dir = out.empty() ? fs::path(suite_dir) : fs::path(out);
    fs::create_directories(dir);
    const std::string csv = latency_csv(report);
    text::write_file((dir / "latency.csv").string(), csv);
    if (globals->output() == Output::Human) std::cout << csv;
    if (globals->output() == Output::Json) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& r : report.rows) {
        rows.push_back({{"n", r.n}, {"planner", r.planner}, {"mean_ms", r.mean_ms},
                        {"p95_ms", r.p95_ms}, {"reps", r.reps}});
      }
      std::cout << rows.dump() << '\n';
    }
  }
};

struct ModelCmd {
  std::string out;
  ReferenceModelParams params;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand("model", "Write the synthetic reference energy model config");
    cmd->add_option("--out", out, "Config output file")->required();
    cmd->add_option("--max-thrust", params.max_motor_thrust, "Max thrust per motor, N")
        ->capture_default_str();
    cmd->add_option("--kappa", params.drag_coefficient, "Speed multiplier coefficient")
        ->capture_default_str();
    cmd->add_option("--voltage", params.battery_voltage, "Battery voltage, V")->capture_default_str();
    cmd->add_option("--max-mass", params.max_mass, "Upper mass bound of the grid, kg")
        ->capture_default_str();
    cmd->callback([this] { save_model(reference_model(params), out); });
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deadline-aware trajectory planning for a shared delivery drone"};
  app.require_subcommand(1);
  app.set_config("--params", "", "TOML/INI file with flag values, one [subcommand] section each");
  Globals globals;
  app.add_flag("--json", globals.json, "Machine-readable output on stdout");
  app.add_flag("--quiet", globals.quiet, "No output on stdout");

  GenerateCmd generate_cmd;
  PlanCmd plan_cmd;
  EvaluateCmd evaluate_cmd;
  CompareCmd compare_cmd;
  BenchCmd bench_cmd;
  ModelCmd model_cmd;
  generate_cmd.add(app, globals);
  plan_cmd.add(app, globals);
  evaluate_cmd.add(app, globals);
  compare_cmd.add(app, globals);
  bench_cmd.add(app, globals);
  model_cmd.add(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kLimit;
  } catch (const InputError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const ConstraintError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const RangeError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return compare_cmd.status;
}
