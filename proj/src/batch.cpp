#include "msa/batch.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace msa {
namespace {

// Budget-exhausted runs count as infinite for median purposes.
double median_duration(std::vector<double> values) {
  if (values.empty()) return std::numeric_limits<double>::infinity();
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

BatchResult run_batch(const RunManifest& manifest) {
  BatchResult result;
  for (PlannerChoice planner : manifest.planners) {
    for (std::uint64_t seed : manifest.seeds) {
      RunRow row;
      row.planner = planner;
      row.seed = seed;
      try {
        ScenarioConfig cfg = manifest.config;
        cfg.seed = seed;
        const SimTrace trace = run_episode(cfg, planner);
        const Metrics m = collect_metrics(trace);
        row.completed = m.completed;
        row.duration_s = m.duration_s;
        row.planning_mean_s = m.planning_mean_s;
        std::ostringstream prefix;
        prefix << to_string(planner) << "_seed" << seed;
        export_trace(trace, manifest.out_dir, prefix.str());
      } catch (const std::exception& e) {
        row.failed = true;
        row.error = e.what();
        result.exit_code = 1;
      }
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

void print_summary_table(std::ostream& os, const BatchResult& result) {
  os << "method      runs  observation_duration_s  execution_time_s\n";
  for (PlannerChoice planner : {PlannerChoice::Rml, PlannerChoice::Baseline}) {
    std::vector<double> durations;
    double planning_sum = 0.0;
    int runs = 0;
    for (const RunRow& row : result.rows) {
      if (row.planner != planner || row.failed) continue;
      ++runs;
      durations.push_back(row.completed ? row.duration_s
                                        : std::numeric_limits<double>::infinity());
      planning_sum += row.planning_mean_s;
    }
    if (runs == 0) continue;
    const double med = median_duration(durations);
    os << std::left << std::setw(12) << to_string(planner) << std::setw(6) << runs;
    if (std::isfinite(med))
      os << std::setw(24) << med;
    else
      os << std::setw(24) << "-";
    os << planning_sum / runs << '\n';
  }
  for (const RunRow& row : result.rows) {
    if (row.failed)
      os << "run failed: " << to_string(row.planner) << " seed " << row.seed << ": " << row.error
         << '\n';
  }
}

}  // namespace msa
