#include "msa/types.hpp"

namespace msa {

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * M_PI);
  if (a <= -M_PI) a += 2.0 * M_PI;
  if (a > M_PI) a -= 2.0 * M_PI;
  return a;
}

double angular_distance(double a, double b) { return std::abs(wrap_angle(a - b)); }

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) {
  // splitmix64 finalizer over the combined word
  std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Rng make_stream(std::uint64_t master, std::uint64_t stream) { return Rng(mix_seed(master, stream)); }

}  // namespace msa
