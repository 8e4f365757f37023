#pragma once

#include <span>
#include <vector>

#include "msa/allocation.hpp"
#include "msa/sensors.hpp"
#include "msa/tracking.hpp"

namespace msa {

struct CostWeights {
  double alpha1 = 1.0;
  double alpha2 = 1.0;
  double alpha3 = 1.0;
  double eps = 7e5;     // fused-trace threshold, m^2
  double d_min = 80.0;  // m
  double d_max = 16e3;  // m
  double d_safe = 100.0;  // m
};

/// 0 when the trace is at or below the threshold, otherwise trace - eps.
double clamp_mse(double trace, double eps);

/// Product of the two clamped band factors: each factor is 1 while its side
/// of the band holds, so the in-band value is 1 (a constant offset), below
/// D_min it is (D_min - d) and beyond D_max it is (d - D_max).
double band_penalty(double d, double d_min, double d_max);

/// max(0, d_safe - d).
double safety_penalty(double d, double d_safe);

/// Frozen nominal state of one target for a single planning step.
/// Everything refers to the step being scored (t+1): radar and AIS are
/// assumed to keep reporting, so their posterior information is fixed, and
/// the assigned camera contributes its predicted-track information plus a
/// hypothetical position update when its field of view covers the mean.
struct PlanningTarget {
  Vec4 mean_next = Vec4::Zero();
  Mat4 info_radar = Mat4::Zero();
  Mat4 info_ais = Mat4::Zero();
  Mat4 cam_info_pred = Mat4::Zero();
  double trace_no_cover = 0.0;
  bool has_assigned_camera = false;

  Vec2 position() const { return Vec2(mean_next[0], mean_next[2]); }
};

struct PlanningView {
  std::vector<PlanningTarget> targets;
  CameraSpec camera_spec;
};

/// Fused-covariance trace for the assigned pair under the post-action pose:
/// the camera track is information-updated at the nominal geometry when the
/// pose covers the mean, otherwise it stays predicted.
double hypothetical_fused_trace(const PlanningTarget& target, const CameraPose& post,
                                const CameraSpec& spec);

/// Utility of camera c for a joint post-action pose profile. Terms: clamped
/// fused trace of the assigned target, band penalty toward it, safety
/// penalties against every target mean, and safety penalties against the
/// other cameras (pairs involving c only).
double camera_utility(int c, std::span<const CameraPose> post_poses, const PlanningView& view,
                      const Assignment& assignment, const CostWeights& weights);

/// One step of the global objective (diagnostics only): the four-term sum
/// over all targets and ordered camera pairs, with the band term weighted by
/// the assignment indicator.
double objective_step(std::span<const CameraPose> post_poses, const PlanningView& view,
                      const Assignment& assignment, const CostWeights& weights);

}  // namespace msa
