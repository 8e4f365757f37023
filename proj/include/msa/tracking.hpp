#pragma once

#include <span>
#include <vector>

#include "msa/sensors.hpp"

namespace msa {

/// H selecting (x, y) from (x, vx, y, vy); shared by radar, AIS and cameras.
Mat24 measurement_matrix();

/// Position-information matrix H^T R^-1 H for isotropic noise sigma^2 I.
Mat4 position_information(double sigma);

/// Per-sensor, per-target Gaussian belief.
struct Track {
  Vec4 mean = Vec4::Zero();
  Mat4 cov = Mat4::Identity();
  SensorKind sensor = SensorKind::Radar;
  int target_id = 0;
};

/// Time update: mean' = F mean, cov' = F cov F^T + Q (symmetrized).
Track kf_predict(const Track& track, const Mat4& F, const Mat4& Q);

/// Information-form measurement update:
///   cov' = (cov^-1 + H^T R^-1 H)^-1,  mean' = mean + K (z - H mean),
/// with gain K = cov' H^T R^-1. A target with no measurement keeps the
/// predicted track; callers simply skip the update.
Track kf_update(const Track& track, const Measurement& m);

/// One horizon step of the nominal covariance recursion: visible steps apply
/// the information update with the scheduled noise, invisible steps keep the
/// prediction.
struct VisibilityStep {
  bool visible = false;
  Mat2 noise_cov = Mat2::Identity();
};

/// Nominal belief propagation: means evolve as F * mean with no innovation,
/// covariances follow the predict/update recursion against the schedule.
/// Returns one track per horizon step (schedule.size() entries).
std::vector<Track> propagate_nominal(const Track& track, const Mat4& F, const Mat4& Q,
                                     std::span<const VisibilityStep> schedule);

/// Inverse-covariance fusion across radar, AIS and assigned cameras.
struct FusedEstimate {
  int target_id = 0;
  Vec4 mean = Vec4::Zero();  // information-weighted combination
  Mat4 cov = Mat4::Identity();
  double trace = 0.0;
};

/// P = (P_r^-1 + P_ais^-1 + sum_c P_c^-1)^-1 over the assigned camera tracks;
/// the mean is the matching information-weighted combination.
FusedEstimate fuse(const Track& radar, const Track& ais,
                   std::span<const Track* const> assigned_cameras);

/// Observed: some camera currently sees the true position and the fused
/// trace is at or below the threshold.
bool is_observed(const FusedEstimate& fused, bool any_camera_sees_truth, double eps);

}  // namespace msa
