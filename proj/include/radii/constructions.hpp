#pragma once

#include "radii/bodies.hpp"
#include "radii/config.hpp"
#include "radii/linalg.hpp"

#include <array>
#include <vector>

namespace radii {

/// Midpoint lift over a plane: for p in the shadow K|L, the point of K above p
/// halfway along the fiber p + t n_L. Works on the facet description of K.
class FiberLift {
 public:
  FiberLift(HPolytope h, Frame plane);

  const Frame& plane() const { return plane_; }
  const Vector& normal() const { return normal_; }
  /// Fiber parameter interval {t : F p + t n in K}; lo > hi when empty.
  std::pair<double, double> fiber(const Vector& p2) const;
  /// Midpoint parameter h(p). Throws DiscNotContained when the fiber is empty.
  double height(const Vector& p2) const;
  /// The lifted point F p + h(p) n.
  Vector lift(const Vector& p2) const;

 private:
  HPolytope h_;
  Frame plane_;
  Vector normal_;
};

struct HexagonWitness {
  std::array<Vector, 3> p;  // hexagon half-vertices, ambient coordinates (lie in L)
  std::array<Vector, 3> q;  // lifts in K
  Vector plane_normal;      // unit normal of span{+-q}
  double radius = 0.0;      // hexagon circumradius r (1 - delta)
  double theta = 0.0;       // angle of p[0] in the plane's basis
  double residual = 0.0;    // distance of q[0] from span{q[1], q[2]}
  double regularity = 0.0;  // deviation of the p from a regular hexagon
  double max_slack_violation = 0.0;  // max over +-q of the H-rep violation (0 if inside)
  int bisection_steps = 0;
};

struct SquareWitness {
  std::array<Vector, 2> p;  // square half-vertices (ambient, in L)
  std::array<Vector, 2> q_plus;   // lifts of +p[k]
  std::array<Vector, 2> q_minus;  // lifts of -p[k]
  double radius = 0.0;
  double theta = 0.0;
  double balance_residual = 0.0;  // |(q1+ + q1-) - (q2+ + q2-)| along the fiber
  double regularity = 0.0;
  int bisection_steps = 0;
};

/// Hexagonal planar set in a symmetric K in R^3 whose projection onto L is a
/// regular hexagon of circumradius r (1 - delta). Throws NotSymmetric,
/// DiscNotContained.
HexagonWitness hexagon_section(const Body& body, const Frame& plane, double r, const Tolerances& tol = kDefaultTolerances);
/// Square inscribed in r (1 - delta) B in L whose lifted diagonals bisect each
/// other. Throws DiscNotContained.
SquareWitness square_section(const Body& body, const Frame& plane, double r, const Tolerances& tol = kDefaultTolerances);

struct SymmetricSectionBound {
  double projection_inradius = 0.0;  // r~_2 estimate (lower bound of the max)
  Frame projection_frame = Frame::identity(1);
  HexagonWitness hexagon;
  Frame section_frame = Frame::identity(1);  // L' = span C, an r_2 witness
  double section_inradius = 0.0;             // r(C; L'), certified lower bound of r_2
  double hexagon_inradius = 0.0;             // (sqrt(3)/2) * hexagon circumradius
  double ratio = 0.0;                        // projection_inradius / section_inradius
};

/// Runs the hexagon construction on the r~_2 witness plane. Throws
/// CertificateFailed if r(C) < (sqrt(3)/2) r(H) - 1e-7.
SymmetricSectionBound symmetric_section_bound(const Body& body, const SearchConfig& config = {});

/// Inradius of a centrally symmetric hexagon conv{+-q} in its plane, with the
/// vertices given in cyclic order q[0], q[1], q[2], -q[0], -q[1], -q[2].
double symmetric_hexagon_inradius(const std::array<Vector, 3>& cyclic);

struct ParallelogramWitness {
  Vector center;                 // midpoint of the diameter pair
  Vector p;                      // diameter half-vector (endpoints center +- p)
  std::array<int, 2> diameter_pair{};
  std::array<int, 2> projected_pair{};
  std::array<Vector, 2> q;       // lifts (relative to center) of the projected diameter endpoints
  std::array<Vector, 4> vertices;  // (+-p + q_j)/2 + center
  double diameter = 0.0;           // D(K)
  double projected_diameter = 0.0; // D(K|p-perp)
  double h = 0.0;                  // height over the edge parallel to q1 - q2
  double h_prime = 0.0;            // height over the edge parallel to p
  double half_width = 0.0;         // w(P; aff P) / 2 = r(P; aff P)
  double parallelogram_defect = 0.0;
  double max_slack_violation = 0.0;
  double projection_circumradius = 0.0;  // R(K|p-perp) >= R_{n-1}(K)
  double jung_bound = 0.0;               // sqrt((n-1)/(2n)) D(K|p-perp)
  bool half_width_ok = false;            // half_width >= D(K|p-perp)/4 - 1e-9
  bool certified_chain_ok = false;       // R(K|p-perp) <= 2 sqrt2 sqrt((n-1)/n) half_width
  // Estimates-based chain R_{n-1} <= 2 sqrt2 sqrt((n-1)/n) r_2.
  double outer_estimate = 0.0;
  double inner_estimate = 0.0;
  double chain_bound = 0.0;
  bool chain_ok = false;
};

ParallelogramWitness parallelogram_diameter_bound(const Body& body, const SearchConfig& config = {});

struct TrapezoidWitness {
  double omega = 0.0;         // directional width along the chosen min-width direction
  Vector width_direction;
  double chord_length = 0.0;  // longest chord of K along that direction
  double omega_prime = 0.0;   // width of K cap e2-perp inside e2-perp
  double a = 0.0;             // support of the section along +e1
  double b = 0.0;             // support of the section along -e1
  std::array<double, 4> box{};  // [x_min, x_max, y_min, y_max] = [-2b, 2a, -w/2, w/2]
  double box_excess = 0.0;      // largest violation of box containment by projected vertices
  double plane_circumradius = 0.0;  // R(K | span{e1, e2}) in the moved position, >= R_2
  double box_circumradius = 0.0;
  double section_inradius = 0.0;    // r(K cap e2-perp) <= r_{n-1}
  RigidMotion motion;               // maps K to the normalized position
  bool width_ok = false;            // omega <= 2 omega' + 1e-7
  bool box_ok = false;              // box_excess <= 1e-7
  bool outer_ok = false;            // plane_circumradius <= sqrt2 omega' + 1e-7
  bool certified_chain_ok = false;  // plane_circumradius <= 2 sqrt2 sqrt(n) section_inradius
  double outer_estimate = 0.0;      // R_2 estimate
  double inner_estimate = 0.0;      // r_{n-1} estimate
  double chain_bound = 0.0;         // 2 sqrt2 sqrt(n)
  bool chain_ok = false;
};

TrapezoidWitness trapezoid_width_bound(const Body& body, const SearchConfig& config = {});

struct TouchingSet {
  std::vector<int> indices;      // into the input points
  std::vector<double> lambda;    // convex coefficients
  Vector center;
  double radius = 0.0;
  double residual = 0.0;         // |sum lambda (p - center)|
};

/// Contact points of the smallest enclosing ball whose convex hull contains its
/// center, with at most n + 1 points. Throws CertificateFailed.
TouchingSet touching_points(std::span<const Vector> points, const Tolerances& tol = kDefaultTolerances);
TouchingSet touching_points(const Body& body, const Tolerances& tol = kDefaultTolerances);

struct PerelmanConstant {
  double t_star = 0.0;
  double bound = 0.0;
};
PerelmanConstant perelman_constant();

/// 2R(2R + sqrt(4R^2 - D^2)) r - D^2 sqrt(4R^2 - D^2). Throws InvalidTriple.
double santalo_slack(double R, double D, double r);
/// Exact (R, D, r) of a planar polygon given by points.
std::array<double, 3> planar_radii(const PointSet& points2d);

struct PerelmanPipeline {
  Vector diameter_direction;      // unit p
  double projected_diameter = 0.0;  // D(K|p-perp)
  TouchingSet touching;           // in K|p-perp
  double triangle_circumradius = 0.0;  // R(S) = R(K|p-perp)
  double triangle_diameter = 0.0;      // D(S)
  double triangle_inradius = 0.0;      // r(S; p-perp)
  double lifted_inradius = 0.0;        // r(S'; aff S') >= r(S; p-perp)
  double santalo = 0.0;                // santalo_slack on S
  bool lift_ok = false;                // r(S) <= r(S') + 1e-9
  bool diameter_ok = false;            // D(K|p-perp) <= 4 r_2 estimate + 1e-9
  double outer_estimate = 0.0;         // R_2
  double inner_estimate = 0.0;         // r_2
  double ratio = 0.0;
  double bound = 2.151;
  bool pass = false;                   // ratio <= bound + 1e-6
};

PerelmanPipeline perelman_pipeline(const Body& body, const SearchConfig& config = {});

}  // namespace radii
