#include "msa/planner.hpp"

#include <cassert>
#include <numeric>

#include "msa/linalg.hpp"

namespace msa {
namespace {

constexpr double kMuFloor = 1e-9;
constexpr double kSigmaFloor = 1e-6;

int sample_index(std::span<const double> pmf, Rng& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double u = u01(rng);
  double acc = 0.0;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    acc += pmf[i];
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(pmf.size()) - 1;
}

}  // namespace

ActionSet build_action_set(const ActionSetSpec& spec, double prev_heading) {
  assert(spec.n_speeds >= 2);
  assert(spec.n_headings >= 1);
  ActionSet out;

  out.speeds.reserve(spec.n_speeds);
  for (int i = 0; i < spec.n_speeds; ++i) {
    const double frac = static_cast<double>(i) / (spec.n_speeds - 1);
    out.speeds.push_back(spec.limits.s_min + frac * (spec.limits.s_max - spec.limits.s_min));
  }

  // Cell-centered spacing: offsets -phi + (k + 1/2) * 2*phi/n. Spans the
  // turn window symmetrically with n distinct headings even when the window
  // wraps the full circle, and shifts the reachable direction comb by half a
  // cell each step so repeated turning is not confined to one fixed comb.
  const double phi = spec.limits.phi_max;
  if (spec.n_headings == 1) {
    out.headings.push_back(wrap_angle(prev_heading));
  } else {
    const double step = 2.0 * phi / spec.n_headings;
    for (int i = 0; i < spec.n_headings; ++i) {
      const double h = wrap_angle(prev_heading - phi + (i + 0.5) * step);
      bool duplicate = false;
      for (double existing : out.headings) {
        if (std::abs(wrap_angle(existing - h)) < 1e-12) duplicate = true;
      }
      if (!duplicate) out.headings.push_back(h);
    }
  }

  out.actions.reserve(out.speeds.size() * out.headings.size());
  for (double s : out.speeds) {
    for (double h : out.headings) out.actions.push_back({s, h});
  }
  return out;
}

std::vector<double> init_distribution(int n_actions) {
  assert(n_actions >= 1);
  return std::vector<double>(n_actions, 1.0 / n_actions);
}

double instantaneous_regret(double utility_alternative, double utility_played) {
  return utility_alternative - utility_played;
}

void update_regret(Eigen::MatrixXd& cum_regret, int played, std::span<const double> inst_regret,
                   double lambda) {
  assert(inst_regret.size() == static_cast<std::size_t>(cum_regret.cols()));
  for (Eigen::Index k = 0; k < cum_regret.cols(); ++k) {
    if (k == played) continue;
    cum_regret(played, k) = lambda * cum_regret(played, k) + (1.0 - lambda) * inst_regret[k];
  }
}

std::vector<double> update_distribution(const Eigen::MatrixXd& cum_regret, int played) {
  const int n = static_cast<int>(cum_regret.cols());
  std::vector<double> pi(n, 0.0);
  double positive_sum = 0.0;
  for (int k = 0; k < n; ++k) {
    if (k == played) continue;
    positive_sum += std::max(cum_regret(played, k), 0.0);
  }
  if (positive_sum <= 0.0) {
    pi[played] = 1.0;
    return pi;
  }
  const double mu = std::max(2.0 * positive_sum, kMuFloor);
  double total = 0.0;
  for (int k = 0; k < n; ++k) {
    if (k == played) continue;
    pi[k] = std::max(cum_regret(played, k), 0.0) / mu;
    total += pi[k];
  }
  pi[played] = 1.0 - total;
  return pi;
}

Action hold_action(const CameraPose& pose, const ActionLimits& limits) {
  return {limits.s_min, pose.heading};
}

PlanningView make_planning_view(const PlannerState& state) {
  PlanningView view;
  view.camera_spec = state.camera_spec;
  const int n_targets = static_cast<int>(state.fused_means.size());
  view.targets.resize(n_targets);
  const std::vector<int> camera_of = state.assignment.camera_of_target(n_targets);

  for (int v = 0; v < n_targets; ++v) {
    PlanningTarget& t = view.targets[v];
    t.mean_next = state.F * state.fused_means[v];

    const Mat4 radar_pred =
        linalg::sym(state.F * state.radar_cov[v] * state.F.transpose() + state.Q);
    const double d_radar = (t.position() - state.radar.position).norm();
    const double sigma_radar = std::max(distance_sigma(d_radar, state.radar.p_r), kSigmaFloor);
    t.info_radar = linalg::spd_inverse(radar_pred) + position_information(sigma_radar);

    const Mat4 ais_pred = linalg::sym(state.F * state.ais_cov[v] * state.F.transpose() + state.Q);
    t.info_ais = linalg::spd_inverse(ais_pred) + position_information(state.sigma_ais);

    if (camera_of[v] >= 0) {
      const Mat4 cam_pred = linalg::sym(state.F * state.cam_cov[v] * state.F.transpose() + state.Q);
      t.cam_info_pred = linalg::spd_inverse(cam_pred);
      t.has_assigned_camera = true;
    }
    t.trace_no_cover = linalg::spd_inverse(t.info_radar + t.info_ais + t.cam_info_pred).trace();
  }
  return view;
}

void advance_planner_state(PlannerState& state, const PlanningView& view,
                           const std::vector<Action>& executed, const ActionLimits& limits) {
  const int n_cams = static_cast<int>(state.poses.size());
  const int n_targets = static_cast<int>(state.fused_means.size());
  for (int c = 0; c < n_cams; ++c)
    state.poses[c] = step_camera(state.poses[c], executed[c], state.dt, limits);

  const std::vector<int> camera_of = state.assignment.camera_of_target(n_targets);
  for (int v = 0; v < n_targets; ++v) {
    const PlanningTarget& t = view.targets[v];
    state.fused_means[v] = t.mean_next;
    state.radar_cov[v] = linalg::spd_inverse(t.info_radar);
    state.ais_cov[v] = linalg::spd_inverse(t.info_ais);
    if (camera_of[v] < 0) continue;
    const CameraPose& post = state.poses[camera_of[v]];
    Mat4 cam_info = t.cam_info_pred;
    if (in_fov(post, t.position(), state.camera_spec)) {
      const double d = std::max((t.position() - post.position()).norm(), 1.0);
      const double sigma = std::max(distance_sigma(d, state.camera_spec.p_c), kSigmaFloor);
      cam_info += position_information(sigma);
    }
    state.cam_cov[v] = linalg::spd_inverse(cam_info);
  }
}

std::vector<Action> plan_step(const PlannerState& state, const PlanningView& view,
                              const GameConfig& cfg, std::span<Rng> camera_rngs,
                              std::span<const int> eval_order) {
  const int n_cams = static_cast<int>(state.poses.size());
  assert(camera_rngs.size() == static_cast<std::size_t>(n_cams));

  struct CameraGame {
    int cam = -1;
    int target = -1;
    ActionSet set;
    std::vector<CameraPose> post;
    std::vector<double> own_cost;  // trace + band + target-safety terms per action
    Eigen::MatrixXd regret;
    std::vector<double> dist;
    int played = -1;
  };

  std::vector<Action> chosen(n_cams);
  std::vector<Vec2> broadcast(n_cams);
  for (int c = 0; c < n_cams; ++c) {
    chosen[c] = hold_action(state.poses[c], cfg.action_spec.limits);
    broadcast[c] = state.poses[c].position();
  }

  std::vector<CameraGame> games;
  for (int c = 0; c < n_cams; ++c) {
    if (!state.assignment.has_target(c)) continue;
    CameraGame g;
    g.cam = c;
    g.target = state.assignment.target_of(c);
    g.set = build_action_set(cfg.action_spec, state.poses[c].heading);
    const PlanningTarget& target = view.targets[g.target];
    const int n = g.set.size();
    g.post.reserve(n);
    g.own_cost.reserve(n);
    for (const Action& a : g.set.actions) {
      const CameraPose post = step_camera(state.poses[c], a, state.dt, cfg.action_spec.limits);
      double cost = clamp_mse(hypothetical_fused_trace(target, post, view.camera_spec),
                              state.weights.eps);
      const double d_cv = (target.position() - post.position()).norm();
      cost += state.weights.alpha1 * band_penalty(d_cv, state.weights.d_min, state.weights.d_max);
      double target_safety = 0.0;
      for (const PlanningTarget& t : view.targets)
        target_safety += safety_penalty((t.position() - post.position()).norm(),
                                        state.weights.d_safe);
      cost += state.weights.alpha2 * target_safety;
      g.post.push_back(post);
      g.own_cost.push_back(cost);
    }
    g.regret = Eigen::MatrixXd::Zero(n, n);
    g.dist = init_distribution(n);
    games.push_back(std::move(g));
  }

  std::vector<int> order(games.size());
  std::iota(order.begin(), order.end(), 0);
  if (!eval_order.empty()) {
    assert(eval_order.size() == games.size());
    order.assign(eval_order.begin(), eval_order.end());
  }

  auto pair_cost = [&](const CameraGame& g, int k) {
    double s = 0.0;
    const Vec2 me = g.post[k].position();
    for (int other = 0; other < n_cams; ++other) {
      if (other == g.cam) continue;
      s += safety_penalty((broadcast[other] - me).norm(), state.weights.d_safe);
    }
    return s;
  };

  for (int tau = 1; tau <= cfg.iterations; ++tau) {
    // Synchronous action selection: every camera samples, then all updates
    // run against the same frozen profile.
    for (CameraGame& g : games) {
      g.played = sample_index(g.dist, camera_rngs[g.cam]);
      broadcast[g.cam] = g.post[g.played].position();
    }
    for (int idx : order) {
      CameraGame& g = games[idx];
      const int n = g.set.size();
      const double u_played =
          -(g.own_cost[g.played] + state.weights.alpha3 * pair_cost(g, g.played));
      std::vector<double> inst(n, 0.0);
      for (int k = 0; k < n; ++k) {
        if (k == g.played) continue;
        const double u_k = -(g.own_cost[k] + state.weights.alpha3 * pair_cost(g, k));
        inst[k] = instantaneous_regret(u_k, u_played);
      }
      update_regret(g.regret, g.played, inst, cfg.lambda);
      g.dist = update_distribution(g.regret, g.played);
    }
  }

  for (CameraGame& g : games) {
    const int final_idx = sample_index(g.dist, camera_rngs[g.cam]);
    chosen[g.cam] = g.set.actions[final_idx];
  }
  return chosen;
}

std::vector<std::vector<Action>> plan_horizon(PlannerState state, const GameConfig& cfg,
                                              std::span<Rng> camera_rngs) {
  std::vector<std::vector<Action>> out;
  out.reserve(cfg.horizon);
  for (int h = 0; h < cfg.horizon; ++h) {
    const PlanningView view = make_planning_view(state);
    std::vector<Action> profile = plan_step(state, view, cfg, camera_rngs);
    advance_planner_state(state, view, profile, cfg.action_spec.limits);
    out.push_back(std::move(profile));
  }
  return out;
}

}  // namespace msa
