#include "cli_app.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include "CLI11.hpp"

#include "formation/bench.hpp"
#include "formation/errors.hpp"
#include "formation/generators.hpp"
#include "formation/io.hpp"
#include "formation/oracle.hpp"
#include "formation/planner.hpp"

namespace formation {

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("FORMATION_SEED")) {
    char* tail = nullptr;
    unsigned long long value = std::strtoull(env, &tail, 10);
    if (tail != env && *tail == '\0') return value;
  }
  return 1;
}

const char* yes_no(bool value) { return value ? "yes" : "no"; }

void print_verify_report(const VerifyReport& report, std::ostream& out) {
  out << "feasible: " << yes_no(report.feasibility.ok);
  if (!report.feasibility.ok) out << " (" << report.feasibility.issue << ")";
  out << "\n";

  out << "collision_free: " << yes_no(report.collision_checked && report.collision.ok());
  if (report.collision_checked && !report.collision.ok()) {
    out << " (" << report.collision.describe() << ")";
  } else if (!report.collision_checked) {
    out << " (trajectories not comparable)";
  }
  out << "\n";

  switch (report.distance_optimal) {
    case VerifyReport::Tristate::Yes:
      out << "distance_optimal: yes (optimum " << report.optimal_distance << ")\n";
      break;
    case VerifyReport::Tristate::No:
      out << "distance_optimal: no (" << report.total_moves << " moves, optimum "
          << report.optimal_distance << ")\n";
      break;
    case VerifyReport::Tristate::Skipped:
      out << "distance_optimal: skipped (too many agents for the exhaustive check)\n";
      break;
  }

  out << "within_bound: " << yes_no(report.within_bound) << " (makespan " << report.makespan
      << ", bound " << report.makespan_bound << ")\n";
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"distance-optimal formation planning on graphs"};
  app.require_subcommand(1);

  std::string input_path, schedule_path, output_path;
  bool compress_departures = false;
  int cols = 0, rows = 0, agents = 0, holes = 0, ell = 0, runs = 1;
  std::uint64_t seed = default_seed();
  bool suite = false;

  auto* plan_cmd = app.add_subcommand("plan", "match starts to goals and schedule the transfer");
  plan_cmd->add_option("-i,--input", input_path, "instance file")->required();
  plan_cmd->add_option("-o,--output", output_path, "schedule file to write (default: stdout)");
  plan_cmd->add_flag("-c,--compress", compress_departures,
                     "pull departures forward where conflicts allow");

  auto* verify_cmd = app.add_subcommand("verify", "check a schedule file and report");
  verify_cmd->add_option("-s,--schedule", schedule_path, "schedule file")->required();

  auto* gen_cmd = app.add_subcommand("gen", "generate a random grid instance");
  gen_cmd->add_option("--cols", cols, "grid columns")->required();
  gen_cmd->add_option("--rows", rows, "grid rows")->required();
  gen_cmd->add_option("-n,--agents", agents, "number of agents")->required();
  gen_cmd->add_option("--holes", holes, "number of removed cells");
  gen_cmd->add_option("--seed", seed, "random seed (default: FORMATION_SEED or 1)");
  gen_cmd->add_option("-o,--output", output_path, "instance file to write (default: stdout)");

  auto* tight_cmd = app.add_subcommand("tight", "generate a two-star corridor instance");
  tight_cmd->add_option("-n,--agents", agents, "number of agents")->required();
  tight_cmd->add_option("--ell", ell, "start-goal distance")->required();
  tight_cmd->add_option("-o,--output", output_path, "instance file to write (default: stdout)");

  auto* trace_cmd = app.add_subcommand("trace", "print one line per agent of a schedule");
  trace_cmd->add_option("-s,--schedule", schedule_path, "schedule file")->required();

  auto* bench_cmd = app.add_subcommand("bench", "time the planner on random instances");
  bench_cmd->add_option("--cols", cols, "grid columns");
  bench_cmd->add_option("--rows", rows, "grid rows");
  bench_cmd->add_option("-n,--agents", agents, "number of agents");
  bench_cmd->add_option("-r,--runs", runs, "instances per cell");
  bench_cmd->add_option("--seed", seed, "random seed (default: FORMATION_SEED or 1)");
  bench_cmd->add_flag("--suite", suite, "run the full grid/agents sweep");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (plan_cmd->parsed()) {
      Instance instance = to_instance(load_instance(input_path));
      PlanResult result = plan(instance, compress_departures);
      if (output_path.empty()) {
        out << format_schedule(instance, result.schedule);
      } else {
        save_schedule(output_path, instance, result.schedule);
        out << "agents: " << instance.agent_count() << "\n"
            << "makespan: " << result.metrics.makespan << "\n"
            << "bound: " << result.metrics.makespan_bound << "\n"
            << "total_distance: " << result.metrics.total_distance << "\n";
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      LoadedSchedule loaded = load_schedule(schedule_path);
      VerifyReport report = verify(loaded.instance, loaded.schedule);
      print_verify_report(report, out);
      return report.ok() ? 0 : 1;
    }

    if (gen_cmd->parsed()) {
      InstanceFile file = holes > 0 ? gen_random_holed(cols, rows, holes, agents, seed)
                                    : gen_random(cols, rows, agents, seed);
      if (output_path.empty()) {
        out << format_instance(file);
      } else {
        save_instance(output_path, file);
      }
      return 0;
    }

    if (tight_cmd->parsed()) {
      InstanceFile file = gen_tight(agents, ell);
      if (output_path.empty()) {
        out << format_instance(file);
      } else {
        save_instance(output_path, file);
      }
      return 0;
    }

    if (trace_cmd->parsed()) {
      LoadedSchedule loaded = load_schedule(schedule_path);
      out << trace_lines(loaded.instance, loaded.schedule);
      return 0;
    }

    if (bench_cmd->parsed()) {
      if (suite) {
        ScalingReport report = bench_suite(default_suite_cells(), std::max(runs, 1), seed);
        out << "vertex_count,agent_count,runs,mean_plan_time_seconds,"
               "mean_makespan_sequential,mean_makespan_compressed,mean_total_distance\n";
        for (const auto& cell : report.cells) {
          out << cell.vertex_count << ',' << cell.agent_count << ',';
          if (cell.feasible) {
            char line[160];
            std::snprintf(line, sizeof(line), "%d,%.6f,%.2f,%.2f,%.2f", cell.runs,
                          cell.mean_plan_time_seconds, cell.mean_makespan_sequential,
                          cell.mean_makespan_compressed, cell.mean_total_distance);
            out << line << "\n";
          } else {
            out << "0,n/a,n/a,n/a,n/a\n";
          }
        }
        for (const auto& ratio : report.ratios) {
          char line[160];
          std::snprintf(line, sizeof(line),
                        "# scaling agents=%d vertices %d->%d (factor %.2f): time ratio %.2f",
                        ratio.agents, ratio.vertices_from, ratio.vertices_to, ratio.vertex_factor,
                        ratio.time_ratio);
          out << line << "\n";
        }
      } else {
        if (cols <= 0 || rows <= 0 || agents <= 0) {
          err << "bench needs --cols, --rows and --agents (or --suite)\n";
          return 2;
        }
        out << csv_header() << "\n";
        for (int r = 0; r < std::max(runs, 1); ++r) {
          out << csv_line(bench_run(cols, rows, agents, seed + r)) << "\n";
        }
      }
      return 0;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }

  err << "no subcommand given\n";
  return 2;
}

}  // namespace formation
