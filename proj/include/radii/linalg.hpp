#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace radii {

/// Largest ambient dimension a body may have.
inline constexpr int kMaxDim = 5;

// Storage is inline (no heap) up to kMaxDim + 1 so that LP variable vectors
// (n coordinates plus a radius) fit in the same type.
using Vector = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxDim + 1, 1>;
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxDim + 1, kMaxDim + 1>;
using PointSet = std::vector<Vector>;

Vector make_vector(std::initializer_list<double> coords);
Vector unit_vector(int n, int axis);

/// Column-orthonormal n x i matrix spanning a linear subspace.
class Frame {
 public:
  /// Validates orthonormality (max |F^T F - I| < tol).
  explicit Frame(Matrix columns, double tol = 1e-12);

  static Frame identity(int n);
  /// Columns e_{axes[0]}, e_{axes[1]}, ...
  static Frame coordinate(int n, std::span<const int> axes);

  int ambient_dim() const { return static_cast<int>(cols_.rows()); }
  int sub_dim() const { return static_cast<int>(cols_.cols()); }
  const Matrix& columns() const { return cols_; }
  Vector column(int k) const { return cols_.col(k); }

  /// Orthonormal basis of the orthogonal complement, n x (n - i).
  Matrix complement() const;
  /// First k columns as a frame of the sub-subspace.
  Frame leading(int k) const;

  Vector coordinates(const Vector& p) const;
  Vector embed(const Vector& z) const;
  double gram_deviation() const;

 private:
  Matrix cols_;
};

struct RigidMotion {
  Matrix rotation;
  Vector translation;

  static RigidMotion identity(int n);
  Vector apply(const Vector& p) const { return rotation * p + translation; }
  PointSet apply(std::span<const Vector> points) const;
  RigidMotion inverse() const;
  /// this after other: x -> this(other(x)).
  RigidMotion compose(const RigidMotion& other) const;
};

/// Gram-Schmidt with a rank check on the smallest singular value.
/// Throws DependentInput.
Frame orthonormalize(std::span<const Vector> vectors, double tol = 1e-10);

/// Coordinates of each point in the frame basis (frame^T p). Throws DimensionMismatch.
PointSet project_points(std::span<const Vector> points, const Frame& frame);

/// Rotation in span{u, v} taking u to v. Antipodal pairs rotate by pi in the
/// plane of u and the coordinate axis least aligned with u (lowest index on ties).
/// Throws NotUnit.
RigidMotion rotation_taking(const Vector& u, const Vector& v, double tol = 1e-10);

/// Retraction of a tangent perturbation: columns base + G T, re-orthonormalized,
/// where G is the complement basis and T the (n-i) x i parameter matrix stored
/// column-major in params. params.size() must equal i * (n - i).
Frame frame_from_chart(const Frame& base, std::span<const double> params);
/// Same, with a precomputed complement basis of base.
Frame frame_from_chart(const Frame& base, const Matrix& complement, std::span<const double> params);

/// Plane (or hyperplane) orthogonal to a nonzero vector.
Frame orthogonal_complement_frame(const Vector& normal);

/// Smallest singular value of the matrix whose columns are the given vectors.
double smallest_singular_value(const Matrix& m);

/// Rank of points - centroid with singular values above tol * scale.
int affine_rank(std::span<const Vector> points, double tol = 1e-9);

}  // namespace radii
