#pragma once

#include "msa/cost.hpp"
#include "msa/dynamics.hpp"

namespace msa {

struct ActionSetSpec {
  int n_speeds = 2;    // |L_s|
  int n_headings = 8;  // |L_m|
  ActionLimits limits;
};

/// Cross product of evenly spaced speed levels and admissible headings.
struct ActionSet {
  std::vector<double> speeds;
  std::vector<double> headings;
  std::vector<Action> actions;

  int size() const { return static_cast<int>(actions.size()); }
};

/// Speeds span [s_min, s_max] inclusive. Headings are evenly spaced around
/// the previous heading within +/- phi_max; when the turn window covers the
/// full circle the spacing is periodic so the wraparound endpoint is not
/// duplicated (|L_m| distinct headings, straight-ahead included for even
/// |L_m|).
ActionSet build_action_set(const ActionSetSpec& spec, double prev_heading);

std::vector<double> init_distribution(int n_actions);

/// u(alternative) - u(played), holding the other agents' actions fixed.
/// Rows for actions that were not played this iteration receive zero.
double instantaneous_regret(double utility_alternative, double utility_played);

/// Forgetting-factor recursion on the played row only:
/// cum(played, k) = lambda * cum(played, k) + (1 - lambda) * inst[k].
void update_regret(Eigen::MatrixXd& cum_regret, int played, std::span<const double> inst_regret,
                   double lambda);

/// Regret-matching strategy from the played row: pi(k) proportional to the
/// positive part of the cumulative regret, pi(played) takes the remainder.
/// Normalizer mu = max(2 * sum_k max(cum(played,k), 0), 1e-9), so half the
/// mass stays on the played action whenever any alternative has positive
/// regret.
std::vector<double> update_distribution(const Eigen::MatrixXd& cum_regret, int played);

struct GameConfig {
  int iterations = 20;  // T
  int horizon = 1;      // H
  double lambda = 0.5;
  ActionSetSpec action_spec;
};

/// Snapshot of everything the planners need at the current step: camera
/// poses, the frozen assignment, and per-target fused means plus per-sensor
/// track covariances (the assigned camera's track only; other camera tracks
/// never enter the fused covariance).
struct PlannerState {
  std::vector<CameraPose> poses;
  Assignment assignment;
  std::vector<Vec4> fused_means;
  std::vector<Mat4> radar_cov;
  std::vector<Mat4> ais_cov;
  std::vector<Mat4> cam_cov;
  RadarSpec radar;
  CameraSpec camera_spec;
  double sigma_ais = 1e3;
  CostWeights weights;
  Mat4 F = Mat4::Identity();
  Mat4 Q = Mat4::Zero();
  double dt = 1.0;
};

/// Surplus cameras hold: minimum speed, keep heading.
Action hold_action(const CameraPose& pose, const ActionLimits& limits);

/// Nominal propagation one step ahead: radar and AIS posteriors assume they
/// keep reporting at the predicted geometry; the assigned camera contributes
/// predicted-track information only (the cover hypothesis is per action).
PlanningView make_planning_view(const PlannerState& state);

/// Apply an executed (or hypothesized) joint action: move poses, adopt the
/// propagated means and sensor posteriors, and update the assigned camera
/// tracks under the cover hypothesis of the new poses.
void advance_planner_state(PlannerState& state, const PlanningView& view,
                           const std::vector<Action>& executed, const ActionLimits& limits);

/// One iterative game: T synchronous iterations of sample - broadcast -
/// regret update - strategy update per assigned camera, then a final draw
/// from each camera's last distribution. eval_order permutes only the
/// order in which cameras process the frozen broadcast (results must not
/// depend on it).
std::vector<Action> plan_step(const PlannerState& state, const PlanningView& view,
                              const GameConfig& cfg, std::span<Rng> camera_rngs,
                              std::span<const int> eval_order = {});

/// Receding-horizon plan: one game per horizon step, advancing hypothetical
/// poses and nominal tracks with each sampled profile. The caller executes
/// only the first profile.
std::vector<std::vector<Action>> plan_horizon(PlannerState state, const GameConfig& cfg,
                                              std::span<Rng> camera_rngs);

}  // namespace msa
