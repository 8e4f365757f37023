#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "msa/batch.hpp"

namespace {

std::vector<std::uint64_t> parse_seed_list(const std::string& s) {
  std::vector<std::uint64_t> seeds;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    seeds.push_back(std::stoull(item));
  }
  return seeds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-camera maritime surveillance simulator"};

  std::string config_path;
  std::string planner = "both";
  std::string seeds_arg;
  std::string mode_arg;
  std::string out_dir = "out";
  int max_steps_override = -1;

  app.add_option("config", config_path, "scenario config JSON file (defaults used when omitted)");
  app.add_option("--planner", planner, "planner to run: rml, baseline or both")
      ->check(CLI::IsMember({"rml", "baseline", "both"}));
  app.add_option("--seeds", seeds_arg, "comma-separated seed list (default: the config seed)");
  app.add_option("--mode", mode_arg, "stopping mode override: first or continuous")
      ->check(CLI::IsMember({"first", "continuous"}));
  app.add_option("--out", out_dir, "output directory for trace files");
  app.add_option("--max-steps", max_steps_override, "step budget override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  msa::RunManifest manifest;
  try {
    manifest.config = config_path.empty() ? msa::parse_config(nlohmann::json::object())
                                          : msa::parse_config_file(config_path);
    if (!mode_arg.empty()) manifest.config.mode = msa::sim_mode_from_string(mode_arg);
    if (max_steps_override > 0) manifest.config.max_steps = max_steps_override;
  } catch (const msa::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }

  if (planner == "both")
    manifest.planners = {msa::PlannerChoice::Rml, msa::PlannerChoice::Baseline};
  else
    manifest.planners = {msa::planner_from_string(planner)};

  manifest.seeds = seeds_arg.empty() ? std::vector<std::uint64_t>{manifest.config.seed}
                                     : parse_seed_list(seeds_arg);
  if (manifest.seeds.empty()) {
    std::cerr << "config error: empty seed list\n";
    return 2;
  }
  manifest.out_dir = out_dir;

  const msa::BatchResult result = msa::run_batch(manifest);
  msa::print_summary_table(std::cout, result);
  return result.exit_code;
}
