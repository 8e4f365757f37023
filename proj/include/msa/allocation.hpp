#pragma once

#include <span>
#include <vector>

#include "msa/types.hpp"

namespace msa {

/// Camera-to-target map. At most one camera per target, one target per
/// camera; surplus cameras stay unassigned (-1) when targets run out.
struct Assignment {
  std::vector<int> target_of_camera;

  int target_of(int camera) const { return target_of_camera[camera]; }
  bool has_target(int camera) const { return target_of_camera[camera] >= 0; }
  int n_cameras() const { return static_cast<int>(target_of_camera.size()); }

  /// Inverse map; -1 for targets without a camera.
  std::vector<int> camera_of_target(int n_targets) const;
};

/// Staleness-over-distance allocation metric. Distance is floored at 1 m.
double compute_beta(int staleness_steps, double distance_m);

/// |C| x |V| matrix of betas from camera positions to current nominal means.
Eigen::MatrixXd build_matrix(std::span<const CameraPose> cameras,
                             std::span<const Vec2> target_means, std::span<const int> clocks);

/// Repeatedly take the maximum remaining element, assign that pair, drop its
/// row and column. Ties break toward the lowest camera index, then the lowest
/// target index. Stops when every camera is assigned or no targets remain.
Assignment greedy_allocate(const Eigen::MatrixXd& M);

/// Reset to zero for targets observed this step, otherwise increment by one.
void tick_clocks(std::vector<int>& clocks, const std::vector<bool>& observed);

}  // namespace msa
