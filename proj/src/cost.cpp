#include "msa/cost.hpp"

#include "msa/linalg.hpp"

namespace msa {

double clamp_mse(double trace, double eps) { return trace <= eps ? 0.0 : trace - eps; }

double band_penalty(double d, double d_min, double d_max) {
  const double f1 = d >= d_min ? 1.0 : d_min - d;
  const double f2 = d <= d_max ? 1.0 : d - d_max;
  return f1 * f2;
}

double safety_penalty(double d, double d_safe) { return std::max(0.0, d_safe - d); }

double hypothetical_fused_trace(const PlanningTarget& target, const CameraPose& post,
                                const CameraSpec& spec) {
  if (!target.has_assigned_camera || !in_fov(post, target.position(), spec))
    return target.trace_no_cover;
  const double d = std::max((target.position() - post.position()).norm(), 1.0);
  const double sigma = std::max(distance_sigma(d, spec.p_c), 1e-6);
  const Mat4 info =
      target.info_radar + target.info_ais + target.cam_info_pred + position_information(sigma);
  return linalg::spd_inverse(info).trace();
}

double camera_utility(int c, std::span<const CameraPose> post_poses, const PlanningView& view,
                      const Assignment& assignment, const CostWeights& weights) {
  if (!assignment.has_target(c))
    throw std::logic_error("camera_utility: camera has no assigned target");
  const int v = assignment.target_of(c);
  const CameraPose& post = post_poses[c];

  const double trace = hypothetical_fused_trace(view.targets[v], post, view.camera_spec);
  double cost = clamp_mse(trace, weights.eps);

  const double d_cv = (view.targets[v].position() - post.position()).norm();
  cost += weights.alpha1 * band_penalty(d_cv, weights.d_min, weights.d_max);

  double target_safety = 0.0;
  for (const PlanningTarget& t : view.targets)
    target_safety += safety_penalty((t.position() - post.position()).norm(), weights.d_safe);
  cost += weights.alpha2 * target_safety;

  double camera_safety = 0.0;
  for (int other = 0; other < static_cast<int>(post_poses.size()); ++other) {
    if (other == c) continue;
    camera_safety +=
        safety_penalty((post_poses[other].position() - post.position()).norm(), weights.d_safe);
  }
  cost += weights.alpha3 * camera_safety;

  return -cost;
}

double objective_step(std::span<const CameraPose> post_poses, const PlanningView& view,
                      const Assignment& assignment, const CostWeights& weights) {
  const int n_cams = static_cast<int>(post_poses.size());
  const std::vector<int> camera_of = assignment.camera_of_target(
      static_cast<int>(view.targets.size()));

  double total = 0.0;
  for (std::size_t v = 0; v < view.targets.size(); ++v) {
    const PlanningTarget& target = view.targets[v];
    const int cam = camera_of[v];
    const double trace = cam >= 0
                             ? hypothetical_fused_trace(target, post_poses[cam], view.camera_spec)
                             : target.trace_no_cover;
    total += clamp_mse(trace, weights.eps);
    if (cam >= 0) {
      const double d = (target.position() - post_poses[cam].position()).norm();
      total += weights.alpha1 * band_penalty(d, weights.d_min, weights.d_max);
    }
    for (int c = 0; c < n_cams; ++c) {
      const double d = (target.position() - post_poses[c].position()).norm();
      total += weights.alpha2 * safety_penalty(d, weights.d_safe);
    }
  }
  for (int c = 0; c < n_cams; ++c) {
    for (int other = 0; other < n_cams; ++other) {
      if (other == c) continue;
      const double d = (post_poses[c].position() - post_poses[other].position()).norm();
      total += weights.alpha3 * safety_penalty(d, weights.d_safe);
    }
  }
  return total;
}

}  // namespace msa
