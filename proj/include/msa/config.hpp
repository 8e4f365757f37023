#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace msa {

enum class SimMode { StopOnFirstObservation, Continuous };

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat scenario configuration; units are encoded in the field names.
/// Defaults mirror the standard experiment settings.
struct ScenarioConfig {
  int n_cameras = 2;
  int n_targets = 3;
  int horizon = 1;      // H, planning steps
  int iterations = 20;  // T, game iterations per step

  double dt_s = 1.0;
  double hfov_deg = 3.0;
  double camera_range_m = 16e3;
  double p_c_percent = 13.0;
  double p_r_percent = 13.0;
  double radar_x_m = 95e3;
  double radar_y_m = -95e3;
  // AIS noise scale. The default keeps the radar+AIS fused trace above the
  // observation threshold so camera coverage is what drives it below.
  double sigma_ais_m = 3.3e3;

  double alpha1 = 1.0;
  double alpha2 = 1.0;
  double alpha3 = 1.0;
  double eps_m2 = 7e5;
  double d_min_m = 80.0;
  double d_max_m = 16e3;
  double d_safe_m = 100.0;

  double s_min_mps = 0.0;
  double s_max_mps = 9.0;
  double phi_max_deg = 180.0;
  int n_speed_levels = 2;     // |L_s|
  int n_heading_levels = 20;  // |L_m|

  double sigma_v = 3.0;        // filter/planner process-noise scale
  double sigma_v_truth = 0.0;  // ground-truth process noise; 0 keeps target motion linear
  double lambda = 0.5;

  double target_speed_max_mps = 9.0;
  double annulus_min_m = 15e3;
  double annulus_max_m = 30e3;

  std::uint64_t seed = 1;
  int max_steps = 15000;
  SimMode mode = SimMode::StopOnFirstObservation;

  bool operator==(const ScenarioConfig&) const = default;
};

/// Parse a flat JSON object; omitted fields keep their defaults. Unknown
/// fields and out-of-range values raise ConfigError naming the field.
ScenarioConfig parse_config(const nlohmann::json& j);
ScenarioConfig parse_config_file(const std::string& path);

nlohmann::json emit_config(const ScenarioConfig& cfg);

std::string to_string(SimMode mode);
SimMode sim_mode_from_string(const std::string& s);

}  // namespace msa
