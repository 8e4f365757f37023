#include "msa/allocation.hpp"

#include <cassert>

namespace msa {

std::vector<int> Assignment::camera_of_target(int n_targets) const {
  std::vector<int> out(n_targets, -1);
  for (int c = 0; c < n_cameras(); ++c) {
    if (has_target(c)) out[target_of_camera[c]] = c;
  }
  return out;
}

double compute_beta(int staleness_steps, double distance_m) {
  return static_cast<double>(staleness_steps) / std::max(distance_m, 1.0);
}

Eigen::MatrixXd build_matrix(std::span<const CameraPose> cameras,
                             std::span<const Vec2> target_means, std::span<const int> clocks) {
  assert(target_means.size() == clocks.size());
  Eigen::MatrixXd m(cameras.size(), target_means.size());
  for (Eigen::Index c = 0; c < m.rows(); ++c) {
    for (Eigen::Index v = 0; v < m.cols(); ++v) {
      const double d = (target_means[v] - cameras[c].position()).norm();
      m(c, v) = compute_beta(clocks[v], d);
    }
  }
  return m;
}

Assignment greedy_allocate(const Eigen::MatrixXd& M) {
  const int n_cams = static_cast<int>(M.rows());
  const int n_targets = static_cast<int>(M.cols());
  Assignment out;
  out.target_of_camera.assign(n_cams, -1);

  std::vector<bool> cam_done(n_cams, false), target_done(n_targets, false);
  const int rounds = std::min(n_cams, n_targets);
  for (int r = 0; r < rounds; ++r) {
    int best_c = -1, best_v = -1;
    double best = -1.0;
    for (int c = 0; c < n_cams; ++c) {
      if (cam_done[c]) continue;
      for (int v = 0; v < n_targets; ++v) {
        if (target_done[v]) continue;
        if (M(c, v) > best) {
          best = M(c, v);
          best_c = c;
          best_v = v;
        }
      }
    }
    out.target_of_camera[best_c] = best_v;
    cam_done[best_c] = true;
    target_done[best_v] = true;
  }
  return out;
}

void tick_clocks(std::vector<int>& clocks, const std::vector<bool>& observed) {
  assert(clocks.size() == observed.size());
  for (std::size_t v = 0; v < clocks.size(); ++v) clocks[v] = observed[v] ? 0 : clocks[v] + 1;
}

}  // namespace msa
