//
// Project TreeDock - Copyright 2026 TreeDock Contributors
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <Eigen/Dense>

#include "treedock/errors.hpp"

namespace treedock::geom {

// Residue-level coordinates, one row per residue, Angstrom.
using PointCloud = Eigen::Matrix<double, Eigen::Dynamic, 3>;

struct RigidTransform {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  static RigidTransform identity() { return {}; }
};

// Row-wise R*x + t.
PointCloud apply(const RigidTransform& t, const PointCloud& p);

// Result applies b first, then a: apply(compose(a,b), p) == apply(a, apply(b, p)).
RigidTransform compose(const RigidTransform& a, const RigidTransform& b);

RigidTransform inverse(const RigidTransform& t);

Eigen::Vector3d centroid(const PointCloud& p);

// Max distance of any point from the centroid.
double radius(const PointCloud& p);

struct KabschResult {
  RigidTransform transform;
  double rmsd = 0.0;
};

// Least-squares rigid superposition of `mobile` onto `target` (SVD with
// determinant-sign correction, so the rotation is always proper).
// Throws DegenerateInput for fewer than 3 points or covariance rank < 2.
KabschResult kabsch(const PointCloud& mobile, const PointCloud& target);

// RMSD after optimal superposition.
double rmsd_aligned(const PointCloud& pred, const PointCloud& truth);

// TM-score normalization scale d0(L).
double tm_d0(int length);

// Length-normalized similarity in (0, 1]. Superposition is Kabsch on all
// points followed by iterative re-superposition on the subset with d_i < d0
// until the subset stabilizes (max 20 rounds); the best score seen is kept.
double tm_score(const PointCloud& pred, const PointCloud& truth);

}  // namespace treedock::geom
