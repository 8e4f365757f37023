#pragma once

#include "msa/types.hpp"

namespace msa {

/// State-transition matrix of the nearly-constant-velocity model:
/// identity plus dt coupling position to velocity per axis.
Mat4 build_transition(double dt);

/// White-noise-acceleration process covariance with per-axis blocks
/// sigma_v^2 * [[dt^3/3, dt^2/2], [dt^2/2, dt]].
Mat4 build_process_noise(double sigma_v, double dt);

/// Zero-mean Gaussian draw with a fixed covariance factorization.
/// Handles positive semi-definite covariances (zero noise is valid).
class GaussianSampler {
 public:
  explicit GaussianSampler(const Mat4& cov);
  Vec4 sample(Rng& rng) const;

 private:
  Mat4 factor_;
};

/// One step of the NCV model: F * x + w, w ~ N(0, Q).
TargetState step_target(const TargetState& state, const Mat4& F, const Mat4& Q, Rng& rng);
TargetState step_target(const TargetState& state, const Mat4& F, const GaussianSampler& noise,
                        Rng& rng);

/// Speed within [s_min, s_max] and turn within phi_max of the previous heading.
bool validate_action(const Action& a, double prev_heading, const ActionLimits& limits);

/// Deterministic surface motion: displacement speed*dt along the action
/// heading; the pose keeps the executed heading. Rejects invalid actions.
CameraPose step_camera(const CameraPose& pose, const Action& a, double dt,
                       const ActionLimits& limits);

}  // namespace msa
