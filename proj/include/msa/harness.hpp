#pragma once

#include <string>
#include <vector>

#include "msa/baseline.hpp"
#include "msa/config.hpp"
#include "msa/planner.hpp"

namespace msa {

enum class PlannerChoice { Rml, Baseline };

std::string to_string(PlannerChoice choice);
PlannerChoice planner_from_string(const std::string& s);

/// Ground truth plus every per-sensor track.
struct World {
  std::vector<TargetState> truth;
  std::vector<CameraPose> poses;
  std::vector<Track> radar_tracks;                // per target
  std::vector<Track> ais_tracks;                  // per target
  std::vector<std::vector<Track>> camera_tracks;  // [camera][target]
};

/// Cameras at the origin heading east; targets drawn uniformly on the
/// configured annulus with uniform heading and speed, redrawn while inside
/// any camera's initial field of view. Tracks are seeded from a first radar
/// fix with a weak prior.
World generate_scenario(const ScenarioConfig& cfg, Rng& rng);

struct TargetStepRecord {
  double true_x = 0, true_y = 0;
  double est_x = 0, est_y = 0;
  double fused_trace = 0;
  bool observed = false;
};

struct CameraStepRecord {
  double x = 0, y = 0, heading = 0;
  double speed = 0;  // executed this step; 0 on the final record
  int assigned_target = -1;
};

struct SimTrace {
  ScenarioConfig config;
  PlannerChoice planner = PlannerChoice::Rml;
  int n_targets = 0;
  int n_cameras = 0;
  int steps = 0;  // recorded steps; rows are step-major

  std::vector<TargetStepRecord> target_rows;
  std::vector<CameraStepRecord> camera_rows;
  std::vector<int> first_observed_step;  // -1 when never observed
  std::vector<int> observation_events;   // rising edges of the observed flag
  bool completed = false;
  double duration_s = -1.0;              // dt * last first-observation step
  std::vector<double> planning_seconds;  // per planning epoch

  const TargetStepRecord& target_at(int step, int v) const {
    return target_rows[static_cast<std::size_t>(step) * n_targets + v];
  }
  const CameraStepRecord& camera_at(int step, int c) const {
    return camera_rows[static_cast<std::size_t>(step) * n_cameras + c];
  }
};

/// Outer loop: filter update from the previous step's measurements, fresh
/// allocation, receding-horizon planning (first step executed), measurement
/// generation at the end of each executed step, and the stopping test.
SimTrace run_episode(const ScenarioConfig& cfg, PlannerChoice choice);

struct Metrics {
  bool completed = false;
  double duration_s = -1.0;
  double planning_mean_s = 0.0;
  double planning_max_s = 0.0;
  double planning_total_s = 0.0;
  std::vector<int> first_observed_step;
  std::vector<int> observation_events;
};

Metrics collect_metrics(const SimTrace& trace);

}  // namespace msa
