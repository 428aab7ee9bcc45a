#pragma once

// Brute-force reference computations for the tests. They share no code with
// the library algorithms they check.

#include "radii/linalg.hpp"
#include "radii/rng.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace oracle {

using radii::PointSet;
using radii::Vector;

// Center of the smallest sphere through all of `pts` inside their affine hull.
inline bool circumcenter(const PointSet& pts, Eigen::VectorXd& center) {
  const auto k = static_cast<Eigen::Index>(pts.size()) - 1;
  const Eigen::VectorXd p0 = pts[0];
  if (k == 0) {
    center = p0;
    return true;
  }
  Eigen::MatrixXd a(k, k);
  Eigen::VectorXd b(k);
  for (Eigen::Index r = 0; r < k; ++r) {
    const Eigen::VectorXd dr = Eigen::VectorXd(pts[static_cast<std::size_t>(r + 1)]) - p0;
    for (Eigen::Index c = 0; c < k; ++c) a(r, c) = 2.0 * dr.dot(Eigen::VectorXd(pts[static_cast<std::size_t>(c + 1)]) - p0);
    b(r) = dr.squaredNorm();
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  if (lu.rank() < k) return false;
  const Eigen::VectorXd lam = lu.solve(b);
  center = p0;
  for (Eigen::Index r = 0; r < k; ++r) center += lam(r) * (Eigen::VectorXd(pts[static_cast<std::size_t>(r + 1)]) - p0);
  return true;
}

// Smallest enclosing ball radius by trying every subset of at most d + 1 points.
inline double min_ball_radius(const PointSet& pts) {
  const int d = static_cast<int>(pts.front().size());
  const int m = static_cast<int>(pts.size());
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> idx;
  auto consider = [&] {
    PointSet sub;
    for (int k : idx) sub.push_back(pts[static_cast<std::size_t>(k)]);
    Eigen::VectorXd c;
    if (!circumcenter(sub, c)) return;
    double r = 0.0;
    for (const auto& p : pts) r = std::max(r, (Eigen::VectorXd(p) - c).norm());
    best = std::min(best, r);
  };
  auto rec = [&](auto&& self, int start) -> void {
    if (!idx.empty()) consider();
    if (static_cast<int>(idx.size()) == d + 1) return;
    for (int k = start; k < m; ++k) {
      idx.push_back(k);
      self(self, k + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

// Roughly uniform unit vectors in R^3 (Fibonacci lattice on the upper half sphere).
inline std::vector<Eigen::Vector3d> hemisphere(int count) {
  std::vector<Eigen::Vector3d> out;
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int k = 0; k < count; ++k) {
    const double z = (k + 0.5) / count;
    const double rad = std::sqrt(1.0 - z * z);
    out.emplace_back(rad * std::cos(golden * k), rad * std::sin(golden * k), z);
  }
  return out;
}

// Orthonormal basis of the plane with normal u.
inline Eigen::Matrix<double, 3, 2> plane_basis(const Eigen::Vector3d& u) {
  const Eigen::Vector3d a = std::abs(u.x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
  const Eigen::Vector3d e1 = u.cross(a).normalized();
  const Eigen::Vector3d e2 = u.cross(e1);
  Eigen::Matrix<double, 3, 2> m;
  m << e1, e2;
  return m;
}

// min over sampled planes of the circumradius of the shadow (an upper bound of R_2).
inline double grid_outer_radius_2(const PointSet& pts, int samples) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& u : hemisphere(samples)) {
    const auto basis = plane_basis(u);
    PointSet shadow;
    for (const auto& p : pts) shadow.push_back(Vector(basis.transpose() * Eigen::Vector3d(p(0), p(1), p(2))));
    best = std::min(best, min_ball_radius(shadow));
  }
  return best;
}

// Triangle inradius and circumradius from side lengths and area.
inline double triangle_inradius(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
  const double area = 0.5 * std::abs((b - a).x() * (c - a).y() - (b - a).y() * (c - a).x());
  return 2.0 * area / ((a - b).norm() + (b - c).norm() + (c - a).norm());
}

inline double triangle_circumradius(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
  // Obtuse or right triangles: half the longest side.
  const double x = (b - c).squaredNorm();
  const double y = (a - c).squaredNorm();
  const double z = (a - b).squaredNorm();
  const double longest = std::max({x, y, z});
  if (2.0 * longest >= x + y + z) return 0.5 * std::sqrt(longest);
  const double area = 0.5 * std::abs((b - a).x() * (c - a).y() - (b - a).y() * (c - a).x());
  return std::sqrt(x * y * z) / (4.0 * area);
}

inline Eigen::Matrix3d random_rotation(std::uint64_t seed) {
  const radii::CounterRng rng(seed, 77);
  Eigen::Matrix3d g;
  for (int k = 0; k < 9; ++k) g(k / 3, k % 3) = rng.gaussian(static_cast<std::uint64_t>(k));
  Eigen::HouseholderQR<Eigen::Matrix3d> qr(g);
  Eigen::Matrix3d q = qr.householderQ();
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

}  // namespace oracle
