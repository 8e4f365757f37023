#pragma once

#include <optional>

#include "msa/types.hpp"

namespace msa {

enum class SensorKind { Radar, AIS, Camera };

/// Identity-tagged planar position measurement with isotropic noise.
struct Measurement {
  SensorKind sensor = SensorKind::Radar;
  int sensor_id = 0;
  int target_id = 0;
  Vec2 z = Vec2::Zero();
  Mat2 noise_cov = Mat2::Identity();
  int time = 0;
};

struct CameraSpec {
  double hfov = 3.0 * M_PI / 180.0;  // full horizontal field of view, rad
  double range = 16e3;               // detection range, m
  double p_c = 13.0;                 // percent noise coefficient
};

struct RadarSpec {
  Vec2 position = Vec2(95e3, -95e3);
  double p_r = 13.0;
};

/// Distance-proportional noise scale: d * p / 100.
double distance_sigma(double d, double p);

/// Point within detection range and within hfov/2 of the boresight, which is
/// aligned with the camera's current heading.
bool in_fov(const CameraPose& pose, const Vec2& point, const CameraSpec& spec);

/// Radar and AIS report every target at every step. A camera reports a
/// target only while the tracked nominal mean position sits inside its field
/// of view (the arrival rule the planners assume); the measurement value is
/// the true position plus noise scaled by the true distance.
Measurement measure_radar(const RadarSpec& spec, int target_id, const TargetState& truth, int time,
                          Rng& rng);
Measurement measure_ais(double sigma_ais, int target_id, const TargetState& truth, int time,
                        Rng& rng);
std::optional<Measurement> measure_camera(const CameraPose& pose, const CameraSpec& spec,
                                          int camera_id, int target_id, const TargetState& truth,
                                          const Vec2& nominal_mean, int time, Rng& rng);

}  // namespace msa
