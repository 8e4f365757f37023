#include "msa/baseline.hpp"

#include <cassert>

namespace msa {

Assignment assign_baseline(std::span<const double> fused_traces,
                           std::span<const CameraPose> cameras,
                           std::span<const Vec2> target_means) {
  assert(fused_traces.size() == target_means.size());
  const int n_cams = static_cast<int>(cameras.size());
  const int n_targets = static_cast<int>(target_means.size());
  Assignment out;
  out.target_of_camera.assign(n_cams, -1);

  std::vector<bool> cam_done(n_cams, false), target_done(n_targets, false);
  const int rounds = std::min(n_cams, n_targets);
  for (int r = 0; r < rounds; ++r) {
    int worst_v = -1;
    for (int v = 0; v < n_targets; ++v) {
      if (target_done[v]) continue;
      if (worst_v < 0 || fused_traces[v] > fused_traces[worst_v]) worst_v = v;
    }
    int nearest_c = -1;
    double nearest_d = 0.0;
    for (int c = 0; c < n_cams; ++c) {
      if (cam_done[c]) continue;
      const double d = (target_means[worst_v] - cameras[c].position()).norm();
      if (nearest_c < 0 || d < nearest_d) {
        nearest_c = c;
        nearest_d = d;
      }
    }
    out.target_of_camera[nearest_c] = worst_v;
    cam_done[nearest_c] = true;
    target_done[worst_v] = true;
  }
  return out;
}

std::vector<std::vector<Action>> plan_baseline(PlannerState state, const GameConfig& cfg) {
  const int n_cams = static_cast<int>(state.poses.size());
  std::vector<std::vector<Action>> out;
  out.reserve(cfg.horizon);

  for (int h = 0; h < cfg.horizon; ++h) {
    const PlanningView view = make_planning_view(state);
    std::vector<Action> profile(n_cams);
    std::vector<Vec2> positions(n_cams);
    for (int c = 0; c < n_cams; ++c) {
      profile[c] = hold_action(state.poses[c], cfg.action_spec.limits);
      positions[c] = state.poses[c].position();
    }

    for (int c = 0; c < n_cams; ++c) {
      if (!state.assignment.has_target(c)) continue;
      const PlanningTarget& target = view.targets[state.assignment.target_of(c)];
      const ActionSet set = build_action_set(cfg.action_spec, state.poses[c].heading);

      int best_k = -1;
      double best_cost = 0.0, best_speed = 0.0, best_pointing = 0.0;
      for (int k = 0; k < set.size(); ++k) {
        const Action& a = set.actions[k];
        const CameraPose post = step_camera(state.poses[c], a, state.dt, cfg.action_spec.limits);

        double cost = clamp_mse(hypothetical_fused_trace(target, post, view.camera_spec),
                                state.weights.eps);
        const double d_cv = (target.position() - post.position()).norm();
        cost += state.weights.alpha1 *
                band_penalty(d_cv, state.weights.d_min, state.weights.d_max);
        double target_safety = 0.0;
        for (const PlanningTarget& t : view.targets)
          target_safety +=
              safety_penalty((t.position() - post.position()).norm(), state.weights.d_safe);
        cost += state.weights.alpha2 * target_safety;
        double camera_safety = 0.0;
        for (int other = 0; other < n_cams; ++other) {
          if (other == c) continue;
          camera_safety +=
              safety_penalty((positions[other] - post.position()).norm(), state.weights.d_safe);
        }
        cost += state.weights.alpha3 * camera_safety;

        // Cost ties break toward faster motion, then toward the heading
        // best covering the assigned target's nominal mean.
        const Vec2 offset = target.position() - post.position();
        const double pointing =
            offset.norm() > 0.0
                ? angular_distance(std::atan2(offset.y(), offset.x()), post.heading)
                : 0.0;
        const bool better =
            best_k < 0 || cost < best_cost ||
            (cost == best_cost &&
             (a.speed > best_speed || (a.speed == best_speed && pointing < best_pointing)));
        if (better) {
          best_k = k;
          best_cost = cost;
          best_speed = a.speed;
          best_pointing = pointing;
        }
      }
      profile[c] = set.actions[best_k];
      positions[c] = step_camera(state.poses[c], profile[c], state.dt, cfg.action_spec.limits)
                         .position();
    }

    advance_planner_state(state, view, profile, cfg.action_spec.limits);
    out.push_back(std::move(profile));
  }
  return out;
}

}  // namespace msa
