#pragma once

#include "radii/bodies.hpp"
#include "radii/linalg.hpp"

#include <span>
#include <utility>
#include <vector>

namespace radii {

struct BallResult {
  Vector center;
  double radius = 0.0;
  std::vector<int> support;  // indices into the input, at most n + 1
};

/// Smallest enclosing ball (Welzl, move-to-front). The returned radius is the
/// largest distance from the returned center to any input point, so it always
/// encloses the input exactly as computed.
BallResult min_enclosing_ball(std::span<const Vector> points);
/// Radius only; avoids bookkeeping in the inner search loops.
double min_ball_radius(std::span<const Vector> points);

/// Largest inscribed ball {c + rho B} of an H-polytope. Throws EmptyBody.
std::pair<double, Vector> chebyshev_center(const HPolytope& h);

/// Exhaustive pair scan; lexicographically smallest maximizing pair. Throws TooFewPoints.
std::pair<double, std::pair<int, int>> diameter(std::span<const Vector> points);

/// max u.p - min u.p. Throws NotUnit.
double width_in_direction(std::span<const Vector> points, const Vector& u);

struct WidthResult {
  double omega = 0.0;
  Vector direction;
  bool exact = false;  // true when the candidate set provably contains the minimizer (n <= 3)
};

/// Minimal width. Exact for n <= 3 (facet normals and edge-edge directions);
/// an upper bound from facet normals plus local descent for n = 4.
WidthResult min_width(const VPolytope& p);
WidthResult min_width(const PolytopeModel& model);

/// Classical radii of a body (ellipsoids in closed form).
struct ClassicalRadii {
  double circumradius = 0.0;
  double inradius = 0.0;
  double diameter = 0.0;
  double width = 0.0;
  bool width_exact = true;
  Vector circumcenter;
  Vector incenter;
  Vector width_direction;
};
ClassicalRadii classical_radii(const Body& body);

}  // namespace radii
