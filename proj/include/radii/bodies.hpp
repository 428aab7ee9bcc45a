#pragma once

#include "radii/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace radii {

struct VPolytope {
  PointSet vertices;
  bool symmetric = false;

  int dim() const { return vertices.empty() ? 0 : static_cast<int>(vertices.front().size()); }
};

/// { x : normals[k] . x <= offsets[k] for all k }, unit normals.
struct HPolytope {
  PointSet normals;
  std::vector<double> offsets;
  int dimension = 0;

  int dim() const { return dimension; }
  std::size_t size() const { return normals.size(); }
  /// min_k (offsets[k] - normals[k] . x); negative outside.
  double slack(const Vector& x) const;
};

/// center + orientation * diag(semiaxes) * unit ball, semiaxes descending.
struct Ellipsoid {
  Vector semiaxes;
  Matrix orientation;
  Vector center;

  int dim() const { return static_cast<int>(semiaxes.size()); }
  /// The linear map taking the unit ball onto the centered ellipsoid.
  Matrix shape() const { return orientation * semiaxes.asDiagonal(); }
  bool centered(double tol = 1e-12) const { return center.cwiseAbs().maxCoeff() <= tol; }

  /// Validates positivity and orthogonality, sorts axes in descending order.
  static Ellipsoid make(Vector semiaxes, Matrix orientation, Vector center);
  /// Ellipsoid a(B) + center for a nonsingular linear map a (via SVD).
  static Ellipsoid from_linear_map(const Matrix& a, const Vector& center);
};

enum class BodyKind { VPolytope, HPolytope, Ellipsoid };

class Body {
 public:
  explicit Body(VPolytope p, std::string label = "vpolytope");
  explicit Body(HPolytope p, std::string label = "hpolytope");
  explicit Body(Ellipsoid e, std::string label = "ellipsoid");

  int dim() const { return dim_; }
  BodyKind kind() const { return static_cast<BodyKind>(rep_.index()); }
  bool is_polytope() const { return kind() != BodyKind::Ellipsoid; }
  bool symmetric() const { return symmetric_; }
  const std::string& label() const { return label_; }

  const VPolytope* vpolytope() const { return std::get_if<VPolytope>(&rep_); }
  const HPolytope* hpolytope() const { return std::get_if<HPolytope>(&rep_); }
  const Ellipsoid* ellipsoid() const { return std::get_if<Ellipsoid>(&rep_); }

  /// Deterministic content hash (bit patterns of the representation).
  std::uint64_t hash() const;

 private:
  std::variant<VPolytope, HPolytope, Ellipsoid> rep_;
  int dim_ = 0;
  bool symmetric_ = false;
  std::string label_;
};

/// Both representations of a polytope, materialized once.
struct PolytopeModel {
  int n = 0;
  PointSet vertices;
  HPolytope hrep;
  bool symmetric = false;
};

/// Throws UnsupportedDimension when facet/vertex enumeration is needed and n > 4,
/// InvalidInput for ellipsoids.
PolytopeModel polytope_model(const Body& body);

enum class CanonicalKind { Ball, Cube, Crosspolytope, RegularSimplex };

Body make_canonical(CanonicalKind kind, int n);
Body make_antiprism_P(double eps);
Body make_remark_simplex(double eps);
/// m vertices uniform on the unit sphere; when symmetric, m/2 draws and their
/// negations (m must be even). Throws DegenerateAfterRetries.
Body random_polytope(int n, int m, bool symmetric, std::uint64_t seed);
/// Random centered ellipsoid with semiaxes in [0.5, 2] and random orientation.
Body random_ellipsoid(int n, std::uint64_t seed);
/// Circumscribed polytope {u_k . x <= 1} approximating the unit ball (n = 2, 3, 4).
HPolytope ball_hrep(int n, int count);

/// Checks the vertex-set-equals-its-negation property.
bool point_set_symmetric(const PointSet& points, double tol = 1e-12);

/// Facet enumeration by exhaustive search over n-subsets of vertices (n <= 4).
/// Throws NotFullDimensional, UnsupportedDimension.
HPolytope hrep_from_vrep(const VPolytope& p, double membership_tol = 1e-9, double dedup_tol = 1e-8);
/// Vertex enumeration over n-subsets of constraints. Throws EmptyBody.
PointSet vrep_from_hrep(const HPolytope& h, double tol = 1e-9);

/// K cap (offset + span F) expressed in frame coordinates; nullopt when empty.
/// Throws InvalidInput if the offset is not orthogonal to the frame.
std::optional<HPolytope> section_hrep(const HPolytope& h, const Frame& frame, const Vector& offset);

/// x -> a x + t applied to any body.
Body transform_body(const Body& body, const Matrix& a, const Vector& t);
Body scale_body(const Body& body, double factor);
Body move_body(const Body& body, const RigidMotion& motion);

/// Half-space representation of a planar convex polygon given by points (n = 2 hull).
HPolytope polygon_hrep(const PointSet& points2d);
/// Convex hull of planar points, counter-clockwise, collinear points dropped.
PointSet convex_hull_2d(const PointSet& points2d);

}  // namespace radii
