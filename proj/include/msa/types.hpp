#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace msa {

template <typename Scalar>
using Vec2T = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Vec4T = Eigen::Matrix<Scalar, 4, 1>;
template <typename Scalar>
using Mat2T = Eigen::Matrix<Scalar, 2, 2>;
template <typename Scalar>
using Mat4T = Eigen::Matrix<Scalar, 4, 4>;

using Vec2 = Vec2T<double>;
using Vec4 = Vec4T<double>;
using Mat2 = Mat2T<double>;
using Mat4 = Mat4T<double>;
using Mat24 = Eigen::Matrix<double, 2, 4>;
using Mat42 = Eigen::Matrix<double, 4, 2>;

using Rng = std::mt19937_64;

/// Thrown when a covariance loses positive definiteness or a solve fails.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Planar target state (x, vx, y, vy) in metres and metres per second.
struct TargetState {
  double x = 0.0;
  double vx = 0.0;
  double y = 0.0;
  double vy = 0.0;

  Vec4 vec() const { return Vec4(x, vx, y, vy); }
  Vec2 position() const { return Vec2(x, y); }
  double speed() const { return std::hypot(vx, vy); }

  static TargetState from_vec(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }
};

/// Camera boat pose; heading is the last executed moving angle.
struct CameraPose {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;  // rad

  Vec2 position() const { return Vec2(x, y); }
};

/// One camera decision: a speed level and a moving angle.
struct Action {
  double speed = 0.0;    // m/s
  double heading = 0.0;  // rad, normalized to (-pi, pi]
};

struct ActionLimits {
  double s_min = 0.0;
  double s_max = 9.0;
  double phi_max = M_PI;  // max turn per step, shortest arc
};

/// Normalize an angle to (-pi, pi].
double wrap_angle(double a);

/// Shortest-arc absolute difference between two angles, in [0, pi].
double angular_distance(double a, double b);

/// splitmix64 mix of a master seed and a stream tag.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream);

/// Independent deterministic RNG stream derived from a master seed.
Rng make_stream(std::uint64_t master, std::uint64_t stream);

// Stream tags; per-entity streams add the entity index.
inline constexpr std::uint64_t kStreamScenario = 1;
inline constexpr std::uint64_t kStreamTruth = 2;
inline constexpr std::uint64_t kStreamRadar = 3;
inline constexpr std::uint64_t kStreamAis = 4;
inline constexpr std::uint64_t kStreamCameraMeas = 1000;
inline constexpr std::uint64_t kStreamPlanner = 2000;

}  // namespace msa
