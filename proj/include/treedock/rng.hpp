//
// Project TreeDock - Copyright 2026 TreeDock Contributors
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

namespace treedock {

// Deterministic random source. All sampling is implemented on top of the
// raw 64-bit stream so that results are bit-identical across platforms and
// standard-library versions (std::normal_distribution et al. are not
// portable between implementations).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  // Uniform in [0, 1) with 53 random mantissa bits.
  double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n).
  int uniform_int(int n) { return static_cast<int>(uniform() * n); }

  // Standard normal via Box-Muller, one spare cached.
  double normal();

  Eigen::Vector3d unit_vector();

  // Uniform rotation from a normalized Gaussian quaternion.
  Eigen::Matrix3d random_rotation();

  // Rotation by `angle` radians about a uniformly random axis.
  Eigen::Matrix3d random_rotation_angle(double angle);

  // Stream derivation: independent child seeds from one master seed.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace treedock
