#include "msa/dynamics.hpp"

#include "msa/linalg.hpp"

namespace msa {

Mat4 build_transition(double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("build_transition: dt must be positive");
  Mat4 f = Mat4::Identity();
  f(0, 1) = dt;
  f(2, 3) = dt;
  return f;
}

Mat4 build_process_noise(double sigma_v, double dt) {
  if (sigma_v < 0.0) throw std::invalid_argument("build_process_noise: sigma_v must be >= 0");
  if (!(dt > 0.0)) throw std::invalid_argument("build_process_noise: dt must be positive");
  const double s2 = sigma_v * sigma_v;
  const double a = s2 * dt * dt * dt / 3.0;
  const double b = s2 * dt * dt / 2.0;
  const double c = s2 * dt;
  Mat4 q = Mat4::Zero();
  q(0, 0) = a;
  q(0, 1) = b;
  q(1, 0) = b;
  q(1, 1) = c;
  q(2, 2) = a;
  q(2, 3) = b;
  q(3, 2) = b;
  q(3, 3) = c;
  return q;
}

GaussianSampler::GaussianSampler(const Mat4& cov) {
  Eigen::SelfAdjointEigenSolver<Mat4> es(linalg::sym(cov));
  const Vec4 evals = es.eigenvalues().cwiseMax(0.0);  // clamp PSD roundoff
  factor_ = es.eigenvectors() * evals.cwiseSqrt().asDiagonal();
}

Vec4 GaussianSampler::sample(Rng& rng) const {
  std::normal_distribution<double> n01(0.0, 1.0);
  Vec4 z;
  for (int i = 0; i < 4; ++i) z[i] = n01(rng);
  return factor_ * z;
}

TargetState step_target(const TargetState& state, const Mat4& F, const Mat4& Q, Rng& rng) {
  return step_target(state, F, GaussianSampler(Q), rng);
}

TargetState step_target(const TargetState& state, const Mat4& F, const GaussianSampler& noise,
                        Rng& rng) {
  return TargetState::from_vec(F * state.vec() + noise.sample(rng));
}

bool validate_action(const Action& a, double prev_heading, const ActionLimits& limits) {
  if (!(a.speed >= limits.s_min && a.speed <= limits.s_max)) return false;
  return angular_distance(a.heading, prev_heading) <= limits.phi_max + 1e-12;
}

CameraPose step_camera(const CameraPose& pose, const Action& a, double dt,
                       const ActionLimits& limits) {
  if (!validate_action(a, pose.heading, limits))
    throw std::invalid_argument("step_camera: action violates speed or turn limits");
  CameraPose next;
  next.x = pose.x + a.speed * std::cos(a.heading) * dt;
  next.y = pose.y + a.speed * std::sin(a.heading) * dt;
  next.heading = wrap_angle(a.heading);
  return next;
}

}  // namespace msa
