//
// Project TreeDock - Copyright 2026 TreeDock Contributors
// SPDX-License-Identifier: Apache-2.0
//

#include "treedock/rng.hpp"

#include <cmath>
#include <numbers>

namespace treedock {

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // u1 in (0, 1] so the log is finite.
  double u1 = 1.0 - uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

Eigen::Vector3d Rng::unit_vector() {
  while (true) {
    Eigen::Vector3d v(normal(), normal(), normal());
    double n = v.norm();
    if (n > 1e-12) return v / n;
  }
}

Eigen::Matrix3d Rng::random_rotation() {
  while (true) {
    Eigen::Vector4d q(normal(), normal(), normal(), normal());
    double n = q.norm();
    if (n <= 1e-12) continue;
    q /= n;
    return Eigen::Quaterniond(q(0), q(1), q(2), q(3)).toRotationMatrix();
  }
}

Eigen::Matrix3d Rng::random_rotation_angle(double angle) {
  return Eigen::AngleAxisd(angle, unit_vector()).toRotationMatrix();
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over a golden-ratio stream offset.
  std::uint64_t x = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

}  // namespace treedock
