#include "msa/trace_io.hpp"

#include <charconv>
#include <fstream>

namespace msa {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

nlohmann::json summary_json(const SimTrace& trace) {
  const Metrics m = collect_metrics(trace);
  nlohmann::json j;
  j["planner"] = to_string(trace.planner);
  j["seed"] = trace.config.seed;
  j["config"] = emit_config(trace.config);
  j["steps_recorded"] = trace.steps;
  j["completed"] = m.completed;
  if (m.completed)
    j["observation_duration_s"] = trace.duration_s;
  else
    j["observation_duration_s"] = nullptr;
  j["first_observed_step"] = trace.first_observed_step;
  j["observation_events"] = trace.observation_events;
  j["planning_time_mean_s"] = m.planning_mean_s;
  j["planning_time_max_s"] = m.planning_max_s;
  j["planning_time_total_s"] = m.planning_total_s;
  return j;
}

void export_trace(const SimTrace& trace, const std::filesystem::path& dir,
                  const std::string& prefix) {
  std::filesystem::create_directories(dir);

  {
    std::ofstream out(dir / (prefix + "_targets.csv"));
    if (!out) throw std::runtime_error("cannot write trace to " + dir.string());
    out << kTargetsCsvHeader << '\n';
    for (int step = 0; step < trace.steps; ++step) {
      for (int v = 0; v < trace.n_targets; ++v) {
        const TargetStepRecord& r = trace.target_at(step, v);
        out << step << ',' << v << ',' << format_double(r.true_x) << ','
            << format_double(r.true_y) << ',' << format_double(r.est_x) << ','
            << format_double(r.est_y) << ',' << format_double(r.fused_trace) << ','
            << (r.observed ? 1 : 0) << '\n';
      }
    }
  }
  {
    std::ofstream out(dir / (prefix + "_cameras.csv"));
    if (!out) throw std::runtime_error("cannot write trace to " + dir.string());
    out << kCamerasCsvHeader << '\n';
    for (int step = 0; step < trace.steps; ++step) {
      for (int c = 0; c < trace.n_cameras; ++c) {
        const CameraStepRecord& r = trace.camera_at(step, c);
        out << step << ',' << c << ',' << format_double(r.x) << ',' << format_double(r.y) << ','
            << format_double(r.heading) << ',' << format_double(r.speed) << ','
            << r.assigned_target << '\n';
      }
    }
  }
  {
    std::ofstream out(dir / (prefix + "_summary.json"));
    if (!out) throw std::runtime_error("cannot write trace to " + dir.string());
    out << summary_json(trace).dump(2) << '\n';
  }
}

}  // namespace msa
