#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "msa/trace_io.hpp"

namespace msa {

struct RunManifest {
  ScenarioConfig config;
  std::vector<PlannerChoice> planners;
  std::vector<std::uint64_t> seeds;
  std::filesystem::path out_dir;
};

struct RunRow {
  PlannerChoice planner = PlannerChoice::Rml;
  std::uint64_t seed = 0;
  bool failed = false;       // run raised an error (distinct from budget exhaustion)
  bool completed = false;    // all targets observed within the budget
  double duration_s = -1.0;
  double planning_mean_s = 0.0;
  std::string error;
};

struct BatchResult {
  std::vector<RunRow> rows;
  int exit_code = 0;
};

/// Runs every (planner, seed) pair, exporting each trace to
/// out_dir/<planner>_seed<seed>_*. Failures are recorded and the batch
/// continues; the exit code is 1 when any run errored.
BatchResult run_batch(const RunManifest& manifest);

/// Per-method summary: median observation duration over the seeds (a dash
/// when the median run exhausted the budget) and mean planning time.
void print_summary_table(std::ostream& os, const BatchResult& result);

}  // namespace msa
