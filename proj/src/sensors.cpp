#include "msa/sensors.hpp"

namespace msa {
namespace {

// Keeps measurement covariances invertible when a sensor sits on top of a
// target (sigma would otherwise hit zero at distance 0).
constexpr double kSigmaFloor = 1e-6;

Vec2 noisy_position(const Vec2& truth, double sigma, Rng& rng) {
  std::normal_distribution<double> n01(0.0, 1.0);
  return truth + sigma * Vec2(n01(rng), n01(rng));
}

Measurement make_measurement(SensorKind kind, int sensor_id, int target_id, const Vec2& truth,
                             double sigma, int time, Rng& rng) {
  sigma = std::max(sigma, kSigmaFloor);
  Measurement m;
  m.sensor = kind;
  m.sensor_id = sensor_id;
  m.target_id = target_id;
  m.z = noisy_position(truth, sigma, rng);
  m.noise_cov = sigma * sigma * Mat2::Identity();
  m.time = time;
  return m;
}

}  // namespace

double distance_sigma(double d, double p) { return d * p / 100.0; }

bool in_fov(const CameraPose& pose, const Vec2& point, const CameraSpec& spec) {
  const Vec2 offset = point - pose.position();
  const double d = offset.norm();
  if (d > spec.range) return false;
  if (d == 0.0) return true;
  const double bearing = std::atan2(offset.y(), offset.x());
  return angular_distance(bearing, pose.heading) <= 0.5 * spec.hfov;
}

Measurement measure_radar(const RadarSpec& spec, int target_id, const TargetState& truth, int time,
                          Rng& rng) {
  const double d = (truth.position() - spec.position).norm();
  return make_measurement(SensorKind::Radar, 0, target_id, truth.position(),
                          distance_sigma(d, spec.p_r), time, rng);
}

Measurement measure_ais(double sigma_ais, int target_id, const TargetState& truth, int time,
                        Rng& rng) {
  return make_measurement(SensorKind::AIS, 0, target_id, truth.position(), sigma_ais, time, rng);
}

std::optional<Measurement> measure_camera(const CameraPose& pose, const CameraSpec& spec,
                                          int camera_id, int target_id, const TargetState& truth,
                                          const Vec2& nominal_mean, int time, Rng& rng) {
  if (!in_fov(pose, nominal_mean, spec)) return std::nullopt;
  const double d = (truth.position() - pose.position()).norm();
  return make_measurement(SensorKind::Camera, camera_id, target_id, truth.position(),
                          distance_sigma(d, spec.p_c), time, rng);
}

}  // namespace msa
