#include "radii/constructions.hpp"

#include "radii/base_radii.hpp"
#include "radii/errors.hpp"
#include "radii/lp.hpp"
#include "radii/successive_radii.hpp"

#include <cmath>
#include <limits>

namespace radii {

namespace {

PointSet vertices_of(const Body& body) {
  if (body.ellipsoid()) fail(ErrorKind::InvalidInput, "this construction needs a polytope");
  if (const auto* v = body.vpolytope()) return v->vertices;
  return polytope_model(body).vertices;
}

// Inradius of a triangle inside its own plane; 0 for fewer than three points.
double triangle_inradius(std::span<const Vector> pts) {
  if (pts.size() < 3) return 0.0;
  const double a = (pts[1] - pts[2]).norm();
  const double b = (pts[0] - pts[2]).norm();
  const double c = (pts[0] - pts[1]).norm();
  const Eigen::VectorXd u = pts[1] - pts[0];
  const Eigen::VectorXd v = pts[2] - pts[0];
  const double twice_area = std::sqrt(std::max(0.0, u.squaredNorm() * v.squaredNorm() - std::pow(u.dot(v), 2)));
  return twice_area / (a + b + c);
}

}  // namespace

ParallelogramWitness parallelogram_diameter_bound(const Body& body, const SearchConfig& config) {
  const int n = body.dim();
  if (n < 2) fail(ErrorKind::BadDimension, "the parallelogram construction needs n >= 2");
  const PointSet verts = vertices_of(body);
  ParallelogramWitness w;
  const auto [d, pair] = diameter(verts);
  w.diameter = d;
  w.diameter_pair = {pair.first, pair.second};
  w.center = 0.5 * (verts[static_cast<std::size_t>(pair.first)] + verts[static_cast<std::size_t>(pair.second)]);
  w.p = verts[static_cast<std::size_t>(pair.second)] - w.center;

  const Frame perp = orthogonal_complement_frame(w.p);
  PointSet centered;
  for (const auto& v : verts) centered.push_back(v - w.center);
  const PointSet shadow = project_points(centered, perp);
  if (n == 2) {
    // The shadow is a segment; its endpoints are the extreme coordinates.
    int lo = 0;
    int hi = 0;
    for (int k = 1; k < static_cast<int>(shadow.size()); ++k) {
      if (shadow[static_cast<std::size_t>(k)](0) < shadow[static_cast<std::size_t>(lo)](0)) lo = k;
      if (shadow[static_cast<std::size_t>(k)](0) > shadow[static_cast<std::size_t>(hi)](0)) hi = k;
    }
    w.projected_pair = {std::min(lo, hi), std::max(lo, hi)};
    w.projected_diameter = shadow[static_cast<std::size_t>(hi)](0) - shadow[static_cast<std::size_t>(lo)](0);
  } else {
    const auto [dp, pp] = diameter(shadow);
    w.projected_diameter = dp;
    w.projected_pair = {pp.first, pp.second};
  }
  w.q = {centered[static_cast<std::size_t>(w.projected_pair[0])], centered[static_cast<std::size_t>(w.projected_pair[1])]};
  w.vertices = {0.5 * (w.p + w.q[0]) + w.center, 0.5 * (w.p + w.q[1]) + w.center, 0.5 * (-w.p + w.q[1]) + w.center,
                0.5 * (-w.p + w.q[0]) + w.center};
  const Vector e01 = w.vertices[1] - w.vertices[0];
  const Vector e12 = w.vertices[2] - w.vertices[1];
  const Vector e23 = w.vertices[3] - w.vertices[2];
  const Vector e30 = w.vertices[0] - w.vertices[3];
  w.parallelogram_defect = std::max((e01 + e23).norm(), (e12 + e30).norm());

  if (n <= 4) {
    const HPolytope h = polytope_model(body).hrep;
    for (const auto& v : w.vertices) w.max_slack_violation = std::max(w.max_slack_violation, -h.slack(v));
  }

  // Edge vectors u = (q2 - q1)/2 and p; heights over each edge direction.
  const Vector u = 0.5 * (w.q[1] - w.q[0]);
  const double area = std::sqrt(std::max(0.0, u.squaredNorm() * w.p.squaredNorm() - std::pow(u.dot(w.p), 2)));
  w.h = area / u.norm();
  w.h_prime = area / w.p.norm();
  w.half_width = 0.5 * std::min(w.h, w.h_prime);
  w.half_width_ok = w.half_width >= w.projected_diameter / 4.0 - 1e-9;

  w.projection_circumradius = min_ball_radius(shadow);
  const double nn = n;
  w.jung_bound = std::sqrt((nn - 1.0) / (2.0 * nn)) * w.projected_diameter;
  w.chain_bound = 2.0 * std::sqrt(2.0) * std::sqrt((nn - 1.0) / nn);
  w.certified_chain_ok = w.projection_circumradius <= w.chain_bound * w.half_width + 1e-9;

  w.outer_estimate = outer_radius(body, n - 1, config).value;
  w.inner_estimate = inner_radius_section(body, 2, config).value;
  w.chain_ok = w.outer_estimate <= w.chain_bound * w.inner_estimate + 1e-6;
  return w;
}

TrapezoidWitness trapezoid_width_bound(const Body& body, const SearchConfig& config) {
  const int n = body.dim();
  if (n < 2 || n > 4) fail(ErrorKind::UnsupportedDimension, "the trapezoid construction supports 2 <= n <= 4");
  if (body.ellipsoid()) fail(ErrorKind::InvalidInput, "the trapezoid construction needs a polytope");
  const PolytopeModel model = polytope_model(body);
  TrapezoidWitness w;
  const WidthResult wr = min_width(model);
  w.width_direction = wr.direction;
  w.omega = width_in_direction(model.vertices, wr.direction);

  // Longest chord along u: max t with y and y + t u both in K.
  const auto m = static_cast<Eigen::Index>(model.hrep.size());
  LPProblem lp;
  lp.objective = Eigen::VectorXd::Zero(n + 1);
  lp.objective(n) = 1.0;
  lp.constraints = Eigen::MatrixXd::Zero(2 * m, n + 1);
  lp.offsets = Eigen::VectorXd(2 * m);
  for (Eigen::Index k = 0; k < m; ++k) {
    const Vector& a = model.hrep.normals[static_cast<std::size_t>(k)];
    lp.constraints.row(k).head(n) = Eigen::VectorXd(a).transpose();
    lp.constraints.row(m + k).head(n) = Eigen::VectorXd(a).transpose();
    lp.constraints(m + k, n) = a.dot(wr.direction);
    lp.offsets(k) = model.hrep.offsets[static_cast<std::size_t>(k)];
    lp.offsets(m + k) = model.hrep.offsets[static_cast<std::size_t>(k)];
  }
  const auto [t, sol] = solve_lp(lp);
  w.chord_length = t;
  const Vector mid = Vector(sol.head(n)) + 0.5 * t * wr.direction;

  // Move the chord onto the e2 axis, centered at the origin.
  const Vector e2 = unit_vector(n, 1);
  RigidMotion motion = rotation_taking(wr.direction, e2);
  motion.translation = -(motion.rotation * mid);

  auto moved_hrep = [&](const RigidMotion& g) {
    HPolytope h;
    h.dimension = n;
    for (std::size_t k = 0; k < model.hrep.size(); ++k) {
      const Vector a = g.rotation * model.hrep.normals[k];
      h.normals.push_back(a);
      h.offsets.push_back(model.hrep.offsets[k] + a.dot(g.translation));
    }
    return h;
  };
  std::vector<int> axes;
  for (int k = 0; k < n; ++k) {
    if (k != 1) axes.push_back(k);
  }
  const Frame perp = Frame::coordinate(n, axes);
  auto section_of = [&](const RigidMotion& g) {
    auto s = section_hrep(moved_hrep(g), perp, Vector::Zero(n));
    if (!s) fail(ErrorKind::CertificateFailed, "the width chord midpoint section is empty");
    return *s;
  };

  // Rotate the section's min-width direction onto e1 inside e2-perp.
  HPolytope sec = section_of(motion);
  PointSet sec_verts = vrep_from_hrep(sec);
  const WidthResult sw = min_width(VPolytope{sec_verts, false});
  const Vector w_amb = perp.embed(sw.direction);
  const RigidMotion spin = rotation_taking(w_amb, unit_vector(n, 0));
  motion = spin.compose(motion);
  w.motion = motion;
  sec = section_of(motion);
  sec_verts = vrep_from_hrep(sec);

  w.a = -std::numeric_limits<double>::infinity();
  w.b = -std::numeric_limits<double>::infinity();
  for (const auto& v : sec_verts) {
    w.a = std::max(w.a, v(0));
    w.b = std::max(w.b, -v(0));
  }
  w.omega_prime = w.a + w.b;
  w.box = {-2.0 * w.b, 2.0 * w.a, -0.5 * w.omega, 0.5 * w.omega};

  const PointSet moved = motion.apply(model.vertices);
  PointSet plane_pts;
  for (const auto& v : moved) {
    plane_pts.push_back(make_vector({v(0), v(1)}));
    w.box_excess = std::max({w.box_excess, w.box[0] - v(0), v(0) - w.box[1], w.box[2] - v(1), v(1) - w.box[3]});
  }
  w.plane_circumradius = min_ball_radius(plane_pts);
  w.box_circumradius = 0.5 * std::hypot(w.box[1] - w.box[0], w.box[3] - w.box[2]);
  w.section_inradius = chebyshev_center(sec).first;

  w.width_ok = w.omega <= 2.0 * w.omega_prime + 1e-7;
  w.box_ok = w.box_excess <= 1e-7;
  w.outer_ok = w.plane_circumradius <= std::sqrt(2.0) * w.omega_prime + 1e-7;
  w.chain_bound = 2.0 * std::sqrt(2.0) * std::sqrt(static_cast<double>(n));
  w.certified_chain_ok = w.plane_circumradius <= w.chain_bound * w.section_inradius + 1e-7;
  w.outer_estimate = outer_radius(body, 2, config).value;
  w.inner_estimate = inner_radius_section(body, n - 1, config).value;
  w.chain_ok = w.outer_estimate <= w.chain_bound * w.inner_estimate + 1e-6;
  return w;
}

TouchingSet touching_points(std::span<const Vector> points, const Tolerances& tol) {
  if (points.size() < 2) fail(ErrorKind::TooFewPoints, "touching points need at least two points");
  const BallResult ball = min_enclosing_ball(points);
  std::vector<int> contacts;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if ((points[k] - ball.center).norm() >= ball.radius - tol.contact) contacts.push_back(static_cast<int>(k));
  }
  if (contacts.size() < 2) fail(ErrorKind::CertificateFailed, "fewer than two contact points");
  const auto n = static_cast<Eigen::Index>(ball.center.size());
  const auto k = static_cast<Eigen::Index>(contacts.size());
  StandardLP lp;
  lp.a = Eigen::MatrixXd::Zero(n + 1, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    lp.a.col(j).head(n) = points[static_cast<std::size_t>(contacts[static_cast<std::size_t>(j)])] - ball.center;
    lp.a(n, j) = 1.0;
  }
  lp.b = Eigen::VectorXd::Zero(n + 1);
  lp.b(n) = 1.0;
  lp.c = Eigen::VectorXd::Zero(k);
  const LpSolution s = solve_standard_lp(lp, tol.lp_feasibility);
  if (s.status != LpStatus::Optimal) fail(ErrorKind::CertificateFailed, "the ball center is not in the hull of the contacts");

  TouchingSet out;
  out.center = ball.center;
  out.radius = ball.radius;
  double total = 0.0;
  for (Eigen::Index j = 0; j < k; ++j) {
    if (s.argmax(j) > 0.0) {
      out.indices.push_back(contacts[static_cast<std::size_t>(j)]);
      out.lambda.push_back(s.argmax(j));
      total += s.argmax(j);
    }
  }
  if (out.indices.size() < 2) fail(ErrorKind::CertificateFailed, "degenerate touching set");
  Vector sum = Vector::Zero(n);
  for (std::size_t j = 0; j < out.indices.size(); ++j) {
    out.lambda[j] /= total;
    sum += out.lambda[j] * (points[static_cast<std::size_t>(out.indices[j])] - ball.center);
  }
  out.residual = sum.norm();
  return out;
}

TouchingSet touching_points(const Body& body, const Tolerances& tol) {
  const PointSet verts = vertices_of(body);
  return touching_points(std::span<const Vector>(verts), tol);
}

PerelmanConstant perelman_constant() {
  auto g = [](double t) { return 4.0 * t - std::sqrt(2.0) * std::sqrt(t + 1.0 + std::sqrt(1.0 - 2.0 * t)); };
  double lo = 0.0;
  double hi = 0.5;
  for (int k = 0; k < 80; ++k) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double t = 0.5 * (lo + hi);
  return {t, 1.0 / t};
}

double santalo_slack(double R, double D, double r) {
  if (!std::isfinite(R) || !std::isfinite(D) || !std::isfinite(r) || R < 0 || D < 0 || r < 0) {
    fail(ErrorKind::InvalidTriple, "radii must be finite and nonnegative");
  }
  if (r > R + 1e-9) fail(ErrorKind::InvalidTriple, "inradius exceeds circumradius");
  if (D > 2.0 * R + 1e-9) fail(ErrorKind::InvalidTriple, "diameter exceeds twice the circumradius");
  const double s = std::sqrt(std::max(0.0, 4.0 * R * R - D * D));
  return 2.0 * R * (2.0 * R + s) * r - D * D * s;
}

std::array<double, 3> planar_radii(const PointSet& points2d) {
  const PointSet hull = convex_hull_2d(points2d);
  if (hull.size() < 3) fail(ErrorKind::NotFullDimensional, "planar radii need a polygon with interior");
  const double R = min_ball_radius(hull);
  const double D = diameter(hull).first;
  // Triangles in closed form; other polygons through the Chebyshev LP.
  const double r = hull.size() == 3 ? triangle_inradius(hull) : chebyshev_center(polygon_hrep(hull)).first;
  return {R, D, r};
}

PerelmanPipeline perelman_pipeline(const Body& body, const SearchConfig& config) {
  if (body.dim() != 3) fail(ErrorKind::BadDimension, "the pipeline is stated in R^3");
  const PointSet verts = vertices_of(body);
  PerelmanPipeline out;
  const auto [d, pair] = diameter(verts);
  out.diameter_direction = (verts[static_cast<std::size_t>(pair.second)] - verts[static_cast<std::size_t>(pair.first)]) / d;
  const Frame perp = orthogonal_complement_frame(out.diameter_direction);
  const PointSet shadow = project_points(verts, perp);
  out.projected_diameter = diameter(shadow).first;
  out.touching = touching_points(std::span<const Vector>(shadow));

  PointSet s2;
  PointSet s3;
  for (int idx : out.touching.indices) {
    s2.push_back(shadow[static_cast<std::size_t>(idx)]);
    s3.push_back(verts[static_cast<std::size_t>(idx)]);
  }
  out.triangle_circumradius = min_ball_radius(s2);
  out.triangle_diameter = diameter(s2).first;
  out.triangle_inradius = triangle_inradius(s2);
  out.lifted_inradius = triangle_inradius(s3);
  out.santalo = santalo_slack(out.triangle_circumradius, out.triangle_diameter, out.triangle_inradius);
  out.lift_ok = out.triangle_inradius <= out.lifted_inradius + 1e-9;

  out.outer_estimate = outer_radius(body, 2, config).value;
  out.inner_estimate = inner_radius_section(body, 2, config).value;
  out.diameter_ok = out.projected_diameter <= 4.0 * out.inner_estimate + 1e-9;
  out.ratio = out.outer_estimate / out.inner_estimate;
  out.pass = out.ratio <= out.bound + 1e-6;
  return out;
}

}  // namespace radii
