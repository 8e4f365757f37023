#include "msa/tracking.hpp"

#include "msa/linalg.hpp"

namespace msa {

Mat24 measurement_matrix() {
  Mat24 h = Mat24::Zero();
  h(0, 0) = 1.0;
  h(1, 2) = 1.0;
  return h;
}

Mat4 position_information(double sigma) {
  Mat4 s = Mat4::Zero();
  const double inv = 1.0 / (sigma * sigma);
  s(0, 0) = inv;
  s(2, 2) = inv;
  return s;
}

Track kf_predict(const Track& track, const Mat4& F, const Mat4& Q) {
  Track out = track;
  out.mean = F * track.mean;
  out.cov = linalg::sym(F * track.cov * F.transpose() + Q);
  return out;
}

Track kf_update(const Track& track, const Measurement& m) {
  const Mat24 h = measurement_matrix();
  const Mat2 r_inv = linalg::spd_inverse(m.noise_cov);

  const Mat4 info = linalg::spd_inverse(track.cov) + h.transpose() * r_inv * h;
  Track out = track;
  out.cov = linalg::spd_inverse(info);
  const Mat42 gain = out.cov * h.transpose() * r_inv;
  out.mean = track.mean + gain * (m.z - h * track.mean);
  return out;
}

std::vector<Track> propagate_nominal(const Track& track, const Mat4& F, const Mat4& Q,
                                     std::span<const VisibilityStep> schedule) {
  std::vector<Track> out;
  out.reserve(schedule.size());
  Track current = track;
  for (const VisibilityStep& step : schedule) {
    current = kf_predict(current, F, Q);
    if (step.visible) {
      const Mat24 h = measurement_matrix();
      const Mat2 r_inv = linalg::spd_inverse(step.noise_cov);
      current.cov =
          linalg::spd_inverse(linalg::spd_inverse(current.cov) + h.transpose() * r_inv * h);
    }
    out.push_back(current);
  }
  return out;
}

FusedEstimate fuse(const Track& radar, const Track& ais,
                   std::span<const Track* const> assigned_cameras) {
  const Mat4 radar_info = linalg::spd_inverse(radar.cov);
  const Mat4 ais_info = linalg::spd_inverse(ais.cov);
  Mat4 info = radar_info + ais_info;
  Vec4 weighted = radar_info * radar.mean + ais_info * ais.mean;
  for (const Track* cam : assigned_cameras) {
    const Mat4 cam_info = linalg::spd_inverse(cam->cov);
    info += cam_info;
    weighted += cam_info * cam->mean;
  }
  FusedEstimate out;
  out.target_id = radar.target_id;
  out.cov = linalg::spd_inverse(info);
  out.mean = out.cov * weighted;
  out.trace = out.cov.trace();
  return out;
}

bool is_observed(const FusedEstimate& fused, bool any_camera_sees_truth, double eps) {
  return any_camera_sees_truth && fused.trace <= eps;
}

}  // namespace msa
