#include "msa/harness.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>

#include "msa/linalg.hpp"

namespace msa {
namespace {

constexpr double kDegToRad = M_PI / 180.0;

// Weak prior consistent with the scenario scale.
constexpr double kInitPosSigma = 5000.0;  // m
constexpr double kInitVelSigma = 5.0;     // m/s

Mat4 initial_covariance() {
  Mat4 p = Mat4::Zero();
  p(0, 0) = kInitPosSigma * kInitPosSigma;
  p(1, 1) = kInitVelSigma * kInitVelSigma;
  p(2, 2) = kInitPosSigma * kInitPosSigma;
  p(3, 3) = kInitVelSigma * kInitVelSigma;
  return p;
}

TargetState clamp_speed(TargetState s, double vmax) {
  const double speed = s.speed();
  if (speed > vmax && speed > 0.0) {
    s.vx *= vmax / speed;
    s.vy *= vmax / speed;
  }
  return s;
}

CameraSpec camera_spec_of(const ScenarioConfig& cfg) {
  return {cfg.hfov_deg * kDegToRad, cfg.camera_range_m, cfg.p_c_percent};
}

RadarSpec radar_spec_of(const ScenarioConfig& cfg) {
  return {Vec2(cfg.radar_x_m, cfg.radar_y_m), cfg.p_r_percent};
}

CostWeights weights_of(const ScenarioConfig& cfg) {
  return {cfg.alpha1, cfg.alpha2, cfg.alpha3, cfg.eps_m2,
          cfg.d_min_m, cfg.d_max_m, cfg.d_safe_m};
}

ActionLimits limits_of(const ScenarioConfig& cfg) {
  return {cfg.s_min_mps, cfg.s_max_mps, cfg.phi_max_deg * kDegToRad};
}

}  // namespace

std::string to_string(PlannerChoice choice) {
  return choice == PlannerChoice::Rml ? "rml" : "baseline";
}

PlannerChoice planner_from_string(const std::string& s) {
  if (s == "rml") return PlannerChoice::Rml;
  if (s == "baseline") return PlannerChoice::Baseline;
  throw std::invalid_argument("unknown planner: " + s);
}

World generate_scenario(const ScenarioConfig& cfg, Rng& rng) {
  World w;
  w.poses.assign(cfg.n_cameras, CameraPose{0.0, 0.0, 0.0});

  const CameraSpec spec = camera_spec_of(cfg);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int v = 0; v < cfg.n_targets; ++v) {
    TargetState t;
    while (true) {
      const double radius = cfg.annulus_min_m + u01(rng) * (cfg.annulus_max_m - cfg.annulus_min_m);
      const double angle = u01(rng) * 2.0 * M_PI;
      const double course = wrap_angle(u01(rng) * 2.0 * M_PI);
      const double speed = u01(rng) * cfg.target_speed_max_mps;
      t.x = radius * std::cos(angle);
      t.y = radius * std::sin(angle);
      t.vx = speed * std::cos(course);
      t.vy = speed * std::sin(course);
      bool visible = false;
      for (const CameraPose& pose : w.poses) visible = visible || in_fov(pose, t.position(), spec);
      if (!visible) break;
    }
    w.truth.push_back(t);
  }

  // Seed every per-sensor track from a first radar fix with the weak prior.
  const RadarSpec radar = radar_spec_of(cfg);
  const Mat4 p0 = initial_covariance();
  for (int v = 0; v < cfg.n_targets; ++v) {
    const Measurement fix = measure_radar(radar, v, w.truth[v], 0, rng);
    const Vec4 mean(fix.z.x(), 0.0, fix.z.y(), 0.0);
    w.radar_tracks.push_back({mean, p0, SensorKind::Radar, v});
    w.ais_tracks.push_back({mean, p0, SensorKind::AIS, v});
  }
  w.camera_tracks.resize(cfg.n_cameras);
  for (int c = 0; c < cfg.n_cameras; ++c) {
    for (int v = 0; v < cfg.n_targets; ++v)
      w.camera_tracks[c].push_back(
          {w.radar_tracks[v].mean, p0, SensorKind::Camera, v});
  }
  return w;
}

SimTrace run_episode(const ScenarioConfig& cfg, PlannerChoice choice) {
  const int n_targets = cfg.n_targets;
  const int n_cams = cfg.n_cameras;

  SimTrace trace;
  trace.config = cfg;
  trace.planner = choice;
  trace.n_targets = n_targets;
  trace.n_cameras = n_cams;
  trace.first_observed_step.assign(n_targets, -1);
  trace.observation_events.assign(n_targets, 0);

  Rng rng_scenario = make_stream(cfg.seed, kStreamScenario);
  World w = generate_scenario(cfg, rng_scenario);
  Rng rng_truth = make_stream(cfg.seed, kStreamTruth);
  Rng rng_radar = make_stream(cfg.seed, kStreamRadar);
  Rng rng_ais = make_stream(cfg.seed, kStreamAis);
  std::vector<Rng> rng_cams, rng_planner;
  for (int c = 0; c < n_cams; ++c) {
    rng_cams.push_back(make_stream(cfg.seed, kStreamCameraMeas + c));
    rng_planner.push_back(make_stream(cfg.seed, kStreamPlanner + c));
  }

  const Mat4 F = build_transition(cfg.dt_s);
  const Mat4 Q = build_process_noise(cfg.sigma_v, cfg.dt_s);
  // Ground truth follows the configured truth-noise scale; the default keeps
  // target motion linear while the filters assume the NCV noise level.
  const GaussianSampler process_noise(build_process_noise(cfg.sigma_v_truth, cfg.dt_s));
  const CameraSpec cam_spec = camera_spec_of(cfg);
  const RadarSpec radar = radar_spec_of(cfg);
  const CostWeights weights = weights_of(cfg);
  const ActionLimits limits = limits_of(cfg);
  const GameConfig gcfg{cfg.iterations, cfg.horizon, cfg.lambda,
                        {cfg.n_speed_levels, cfg.n_heading_levels, limits}};

  std::vector<int> clocks(n_targets, 0);
  std::vector<bool> observed_ever(n_targets, false), prev_observed(n_targets, false);
  Assignment assignment;
  assignment.target_of_camera.assign(n_cams, -1);
  std::vector<Measurement> pending;

  for (int step = 0;; ++step) {
    if (step > 0) {
      // Step 0: time update for every track, then the measurement updates
      // collected at the end of the previous executed step.
      for (int v = 0; v < n_targets; ++v) {
        w.radar_tracks[v] = kf_predict(w.radar_tracks[v], F, Q);
        w.ais_tracks[v] = kf_predict(w.ais_tracks[v], F, Q);
      }
      for (int c = 0; c < n_cams; ++c)
        for (int v = 0; v < n_targets; ++v)
          w.camera_tracks[c][v] = kf_predict(w.camera_tracks[c][v], F, Q);
      for (const Measurement& m : pending) {
        switch (m.sensor) {
          case SensorKind::Radar:
            w.radar_tracks[m.target_id] = kf_update(w.radar_tracks[m.target_id], m);
            break;
          case SensorKind::AIS:
            w.ais_tracks[m.target_id] = kf_update(w.ais_tracks[m.target_id], m);
            break;
          case SensorKind::Camera:
            w.camera_tracks[m.sensor_id][m.target_id] =
                kf_update(w.camera_tracks[m.sensor_id][m.target_id], m);
            break;
        }
      }
      pending.clear();
    }

    // Fused estimates under the assignment currently in effect.
    const std::vector<int> camera_of = assignment.camera_of_target(n_targets);
    std::vector<FusedEstimate> fused(n_targets);
    for (int v = 0; v < n_targets; ++v) {
      std::vector<const Track*> cams;
      if (camera_of[v] >= 0) cams.push_back(&w.camera_tracks[camera_of[v]][v]);
      fused[v] = fuse(w.radar_tracks[v], w.ais_tracks[v], cams);
    }

    std::vector<bool> flags(n_targets, false);
    for (int v = 0; v < n_targets; ++v) {
      // Coverage is judged on the fused mean, the same position the cameras
      // track and the measurement model gates on.
      const Vec2 mean_pos(fused[v].mean[0], fused[v].mean[2]);
      bool seen = false;
      for (const CameraPose& pose : w.poses) seen = seen || in_fov(pose, mean_pos, cam_spec);
      flags[v] = is_observed(fused[v], seen, cfg.eps_m2);
      if (flags[v] && !prev_observed[v]) ++trace.observation_events[v];
      if (flags[v] && trace.first_observed_step[v] < 0) trace.first_observed_step[v] = step;
      observed_ever[v] = observed_ever[v] || flags[v];
      prev_observed[v] = flags[v];
    }

    for (int v = 0; v < n_targets; ++v) {
      trace.target_rows.push_back({w.truth[v].x, w.truth[v].y, fused[v].mean[0], fused[v].mean[2],
                                   fused[v].trace, flags[v]});
    }

    const bool all_observed =
        std::all_of(observed_ever.begin(), observed_ever.end(), [](bool b) { return b; });
    const bool stop_now =
        (cfg.mode == SimMode::StopOnFirstObservation && all_observed) || step >= cfg.max_steps;
    if (stop_now) {
      ++trace.steps;
      for (int c = 0; c < n_cams; ++c)
        trace.camera_rows.push_back(
            {w.poses[c].x, w.poses[c].y, w.poses[c].heading, 0.0, -1});
      trace.completed = cfg.mode == SimMode::Continuous ? true : all_observed;
      if (all_observed) {
        const int last =
            *std::max_element(trace.first_observed_step.begin(), trace.first_observed_step.end());
        trace.duration_s = cfg.dt_s * last;
      }
      break;
    }

    tick_clocks(clocks, flags);

    const auto t0 = std::chrono::steady_clock::now();

    // Step 1: allocation, refreshed at each planning epoch.
    std::vector<Vec2> mean_positions(n_targets);
    for (int v = 0; v < n_targets; ++v)
      mean_positions[v] = Vec2(fused[v].mean[0], fused[v].mean[2]);
    if (choice == PlannerChoice::Rml) {
      assignment = greedy_allocate(build_matrix(w.poses, mean_positions, clocks));
    } else {
      // Sticky pursuit: a camera keeps its target until it is observed, so a
      // chase is never aborted by rank churn. Freed cameras take the
      // greatest-trace unassigned target, nearest camera first. Ranking uses
      // an assignment-independent fusion over every camera track.
      std::vector<double> traces(n_targets);
      for (int v = 0; v < n_targets; ++v) {
        std::vector<const Track*> all_cams;
        for (int c = 0; c < n_cams; ++c) all_cams.push_back(&w.camera_tracks[c][v]);
        traces[v] = fuse(w.radar_tracks[v], w.ais_tracks[v], all_cams).trace;
      }
      std::vector<bool> cam_free(n_cams, true), target_taken(n_targets, false);
      for (int c = 0; c < n_cams; ++c) {
        const int v = assignment.target_of(c);
        if (v >= 0 && !flags[v]) {
          cam_free[c] = false;
          target_taken[v] = true;
        } else {
          assignment.target_of_camera[c] = -1;
        }
      }
      while (true) {
        int worst_v = -1;
        for (int v = 0; v < n_targets; ++v)
          if (!target_taken[v] && (worst_v < 0 || traces[v] > traces[worst_v])) worst_v = v;
        int nearest_c = -1;
        double nearest_d = 0.0;
        if (worst_v >= 0) {
          for (int c = 0; c < n_cams; ++c) {
            if (!cam_free[c]) continue;
            const double d = (mean_positions[worst_v] - w.poses[c].position()).norm();
            if (nearest_c < 0 || d < nearest_d) {
              nearest_c = c;
              nearest_d = d;
            }
          }
        }
        if (worst_v < 0 || nearest_c < 0) break;
        assignment.target_of_camera[nearest_c] = worst_v;
        cam_free[nearest_c] = false;
        target_taken[worst_v] = true;
      }
    }

    // Step 2: plan over the horizon, execute the first profile.
    PlannerState ps;
    ps.poses = w.poses;
    ps.assignment = assignment;
    ps.fused_means.resize(n_targets);
    ps.radar_cov.resize(n_targets);
    ps.ais_cov.resize(n_targets);
    ps.cam_cov.assign(n_targets, Mat4::Identity());
    const std::vector<int> new_camera_of = assignment.camera_of_target(n_targets);
    for (int v = 0; v < n_targets; ++v) {
      ps.fused_means[v] = fused[v].mean;
      ps.radar_cov[v] = w.radar_tracks[v].cov;
      ps.ais_cov[v] = w.ais_tracks[v].cov;
      if (new_camera_of[v] >= 0) ps.cam_cov[v] = w.camera_tracks[new_camera_of[v]][v].cov;
    }
    ps.radar = radar;
    ps.camera_spec = cam_spec;
    ps.sigma_ais = cfg.sigma_ais_m;
    ps.weights = weights;
    ps.F = F;
    ps.Q = Q;
    ps.dt = cfg.dt_s;

    const std::vector<std::vector<Action>> profiles =
        choice == PlannerChoice::Rml ? plan_horizon(ps, gcfg, rng_planner)
                                     : plan_baseline(ps, gcfg);
    trace.planning_seconds.push_back(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());

    const std::vector<Action>& actions = profiles.front();
    ++trace.steps;
    for (int c = 0; c < n_cams; ++c)
      trace.camera_rows.push_back({w.poses[c].x, w.poses[c].y, w.poses[c].heading,
                                   actions[c].speed, assignment.target_of(c)});

    for (int c = 0; c < n_cams; ++c) w.poses[c] = step_camera(w.poses[c], actions[c], cfg.dt_s, limits);
    std::vector<Vec2> predicted_means(n_targets);
    for (int v = 0; v < n_targets; ++v) {
      const Vec4 predicted = F * fused[v].mean;
      predicted_means[v] = Vec2(predicted[0], predicted[2]);
      w.truth[v] = clamp_speed(step_target(w.truth[v], F, process_noise, rng_truth),
                               cfg.target_speed_max_mps);
    }

    // Measurements arrive at the end of each executed step and feed the
    // next epoch's filter update. Camera arrival is gated on the predicted
    // nominal mean, matching the planners' coverage hypothesis.
    const int t_next = step + 1;
    for (int v = 0; v < n_targets; ++v) {
      pending.push_back(measure_radar(radar, v, w.truth[v], t_next, rng_radar));
      pending.push_back(measure_ais(cfg.sigma_ais_m, v, w.truth[v], t_next, rng_ais));
    }
    for (int c = 0; c < n_cams; ++c) {
      for (int v = 0; v < n_targets; ++v) {
        auto m = measure_camera(w.poses[c], cam_spec, c, v, w.truth[v], predicted_means[v], t_next,
                                rng_cams[c]);
        if (m) pending.push_back(*m);
      }
    }
  }
  return trace;
}

Metrics collect_metrics(const SimTrace& trace) {
  Metrics m;
  m.completed = trace.completed && trace.duration_s >= 0.0;
  m.duration_s = trace.duration_s;
  m.first_observed_step = trace.first_observed_step;
  m.observation_events = trace.observation_events;
  if (!trace.planning_seconds.empty()) {
    for (double s : trace.planning_seconds) {
      m.planning_total_s += s;
      m.planning_max_s = std::max(m.planning_max_s, s);
    }
    m.planning_mean_s = m.planning_total_s / trace.planning_seconds.size();
  }
  return m;
}

}  // namespace msa
