#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "msa/harness.hpp"

namespace msa {

inline constexpr const char* kTargetsCsvHeader =
    "step,target_id,true_x,true_y,est_x,est_y,fused_trace,observed";
inline constexpr const char* kCamerasCsvHeader =
    "step,camera_id,x,y,heading,speed,assigned_target";

/// Shortest round-trip decimal representation; locale-independent.
std::string format_double(double value);

nlohmann::json summary_json(const SimTrace& trace);

/// Writes <prefix>_targets.csv, <prefix>_cameras.csv and
/// <prefix>_summary.json into dir (created if missing).
void export_trace(const SimTrace& trace, const std::filesystem::path& dir,
                  const std::string& prefix);

}  // namespace msa
