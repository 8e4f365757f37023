#include "msa/config.hpp"

#include <fstream>

namespace msa {
namespace {

void check(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

template <typename T>
T range_checked(const nlohmann::json& j, const std::string& field, T lo, T hi, T fallback) {
  if (!j.contains(field)) return fallback;
  T value;
  try {
    value = j.at(field).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("config field has wrong type: " + field);
  }
  check(value >= lo && value <= hi, "config field out of range: " + field);
  return value;
}

}  // namespace

std::string to_string(SimMode mode) {
  return mode == SimMode::Continuous ? "continuous" : "first";
}

SimMode sim_mode_from_string(const std::string& s) {
  if (s == "first") return SimMode::StopOnFirstObservation;
  if (s == "continuous") return SimMode::Continuous;
  throw ConfigError("config field out of range: mode (expected \"first\" or \"continuous\")");
}

ScenarioConfig parse_config(const nlohmann::json& j) {
  check(j.is_object(), "config root must be a JSON object");

  static const char* known[] = {
      "n_cameras",      "n_targets",     "horizon",          "iterations",
      "dt_s",           "hfov_deg",      "camera_range_m",   "p_c_percent",
      "p_r_percent",    "radar_x_m",     "radar_y_m",        "sigma_ais_m",
      "alpha1",         "alpha2",        "alpha3",           "eps_m2",
      "d_min_m",        "d_max_m",       "d_safe_m",         "s_min_mps",
      "s_max_mps",      "phi_max_deg",   "n_speed_levels",   "n_heading_levels",
      "sigma_v",        "sigma_v_truth",    "lambda",        "target_speed_max_mps", "annulus_min_m",
      "annulus_max_m",  "seed",          "max_steps",        "mode"};
  for (const auto& [key, value] : j.items()) {
    bool found = false;
    for (const char* k : known) found = found || key == k;
    check(found, "unknown config field: " + key);
  }

  ScenarioConfig cfg;
  cfg.n_cameras = range_checked(j, "n_cameras", 1, 30, cfg.n_cameras);
  cfg.n_targets = range_checked(j, "n_targets", 1, 100, cfg.n_targets);
  cfg.horizon = range_checked(j, "horizon", 1, 5, cfg.horizon);
  cfg.iterations = range_checked(j, "iterations", 10, 20, cfg.iterations);
  cfg.dt_s = range_checked(j, "dt_s", 1e-3, 60.0, cfg.dt_s);
  cfg.hfov_deg = range_checked(j, "hfov_deg", 1e-3, 360.0 - 1e-9, cfg.hfov_deg);
  cfg.camera_range_m = range_checked(j, "camera_range_m", 1.0, 1e6, cfg.camera_range_m);
  cfg.p_c_percent = range_checked(j, "p_c_percent", 0.0, 100.0, cfg.p_c_percent);
  cfg.p_r_percent = range_checked(j, "p_r_percent", 0.0, 100.0, cfg.p_r_percent);
  cfg.radar_x_m = range_checked(j, "radar_x_m", -1e7, 1e7, cfg.radar_x_m);
  cfg.radar_y_m = range_checked(j, "radar_y_m", -1e7, 1e7, cfg.radar_y_m);
  cfg.sigma_ais_m = range_checked(j, "sigma_ais_m", 1e-6, 1e6, cfg.sigma_ais_m);
  cfg.alpha1 = range_checked(j, "alpha1", 0.0, 1.0, cfg.alpha1);
  cfg.alpha2 = range_checked(j, "alpha2", 0.0, 1.0, cfg.alpha2);
  cfg.alpha3 = range_checked(j, "alpha3", 0.0, 1.0, cfg.alpha3);
  cfg.eps_m2 = range_checked(j, "eps_m2", 0.0, 1e12, cfg.eps_m2);
  cfg.d_min_m = range_checked(j, "d_min_m", 0.0, 1e6, cfg.d_min_m);
  cfg.d_max_m = range_checked(j, "d_max_m", 0.0, 1e6, cfg.d_max_m);
  cfg.d_safe_m = range_checked(j, "d_safe_m", 0.0, 1e6, cfg.d_safe_m);
  cfg.s_min_mps = range_checked(j, "s_min_mps", 0.0, 100.0, cfg.s_min_mps);
  cfg.s_max_mps = range_checked(j, "s_max_mps", 0.0, 100.0, cfg.s_max_mps);
  cfg.phi_max_deg = range_checked(j, "phi_max_deg", 1e-3, 180.0, cfg.phi_max_deg);
  cfg.n_speed_levels = range_checked(j, "n_speed_levels", 2, 10, cfg.n_speed_levels);
  cfg.n_heading_levels = range_checked(j, "n_heading_levels", 4, 20, cfg.n_heading_levels);
  cfg.sigma_v = range_checked(j, "sigma_v", 0.0, 1e3, cfg.sigma_v);
  cfg.sigma_v_truth = range_checked(j, "sigma_v_truth", 0.0, 1e3, cfg.sigma_v_truth);
  cfg.lambda = range_checked(j, "lambda", 0.0, 1.0, cfg.lambda);
  cfg.target_speed_max_mps =
      range_checked(j, "target_speed_max_mps", 0.0, 100.0, cfg.target_speed_max_mps);
  cfg.annulus_min_m = range_checked(j, "annulus_min_m", 0.0, 1e7, cfg.annulus_min_m);
  cfg.annulus_max_m = range_checked(j, "annulus_max_m", 0.0, 1e7, cfg.annulus_max_m);
  cfg.seed = range_checked<std::uint64_t>(j, "seed", 0, UINT64_MAX, cfg.seed);
  cfg.max_steps = range_checked(j, "max_steps", 1, 10000000, cfg.max_steps);
  if (j.contains("mode")) {
    check(j.at("mode").is_string(), "config field has wrong type: mode");
    cfg.mode = sim_mode_from_string(j.at("mode").get<std::string>());
  }

  check(cfg.s_min_mps < cfg.s_max_mps, "config requires s_min_mps < s_max_mps");
  check(cfg.d_min_m < cfg.d_safe_m && cfg.d_safe_m < cfg.d_max_m,
        "config requires d_min_m < d_safe_m < d_max_m");
  check(cfg.annulus_min_m < cfg.annulus_max_m,
        "config requires annulus_min_m < annulus_max_m");
  return cfg;
}

ScenarioConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("malformed config file " + path + ": " + e.what());
  }
  return parse_config(j);
}

nlohmann::json emit_config(const ScenarioConfig& cfg) {
  return nlohmann::json{{"n_cameras", cfg.n_cameras},
                        {"n_targets", cfg.n_targets},
                        {"horizon", cfg.horizon},
                        {"iterations", cfg.iterations},
                        {"dt_s", cfg.dt_s},
                        {"hfov_deg", cfg.hfov_deg},
                        {"camera_range_m", cfg.camera_range_m},
                        {"p_c_percent", cfg.p_c_percent},
                        {"p_r_percent", cfg.p_r_percent},
                        {"radar_x_m", cfg.radar_x_m},
                        {"radar_y_m", cfg.radar_y_m},
                        {"sigma_ais_m", cfg.sigma_ais_m},
                        {"alpha1", cfg.alpha1},
                        {"alpha2", cfg.alpha2},
                        {"alpha3", cfg.alpha3},
                        {"eps_m2", cfg.eps_m2},
                        {"d_min_m", cfg.d_min_m},
                        {"d_max_m", cfg.d_max_m},
                        {"d_safe_m", cfg.d_safe_m},
                        {"s_min_mps", cfg.s_min_mps},
                        {"s_max_mps", cfg.s_max_mps},
                        {"phi_max_deg", cfg.phi_max_deg},
                        {"n_speed_levels", cfg.n_speed_levels},
                        {"n_heading_levels", cfg.n_heading_levels},
                        {"sigma_v", cfg.sigma_v},
                        {"sigma_v_truth", cfg.sigma_v_truth},
                        {"lambda", cfg.lambda},
                        {"target_speed_max_mps", cfg.target_speed_max_mps},
                        {"annulus_min_m", cfg.annulus_min_m},
                        {"annulus_max_m", cfg.annulus_max_m},
                        {"seed", cfg.seed},
                        {"max_steps", cfg.max_steps},
                        {"mode", to_string(cfg.mode)}};
}

}  // namespace msa
