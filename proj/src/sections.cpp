#include "radii/constructions.hpp"

#include "radii/base_radii.hpp"
#include "radii/errors.hpp"
#include "radii/successive_radii.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace radii {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kBisectionDepth = 60;

Vector on_circle(double rho, double theta) { return make_vector({rho * std::cos(theta), rho * std::sin(theta)}); }

Vector cross3(const Vector& a, const Vector& b) {
  return make_vector({a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0)});
}

HPolytope facets_of(const Body& body) {
  if (body.ellipsoid()) fail(ErrorKind::InvalidInput, "the lift constructions need a polytope");
  if (const auto* h = body.hpolytope()) return *h;
  return polytope_model(body).hrep;
}

void check_plane(const Body& body, const Frame& plane) {
  if (body.dim() != 3) fail(ErrorKind::BadDimension, "the planar constructions live in R^3");
  if (plane.ambient_dim() != 3 || plane.sub_dim() != 2) fail(ErrorKind::DimensionMismatch, "the construction plane must be 2-dimensional in R^3");
}

// rho B cap L inside K|L, checked on the facet description of the shadow.
void check_disc(const Body& body, const Frame& plane, double rho) {
  const PolytopeModel m = polytope_model(body);
  const HPolytope shadow = polygon_hrep(project_points(m.vertices, plane));
  for (double b : shadow.offsets) {
    if (b < rho) fail(ErrorKind::DiscNotContained, "the disc of radius r(1 - delta) is not inside the projection");
  }
}

// Bisection for a sign change of f on [lo, hi]; f(hi) is expected to have the
// opposite sign of f(lo). Returns the final abscissa and the number of steps.
std::pair<double, int> bisect(const std::function<double(double)>& f, double lo, double hi, double zero_tol) {
  double flo = f(lo);
  if (std::abs(flo) <= zero_tol) return {lo, 0};
  const double fhi = f(hi);
  if (std::abs(fhi) <= zero_tol) return {hi, 0};
  if ((flo > 0) == (fhi > 0)) fail(ErrorKind::CertificateFailed, "lift balance does not change sign over the bracket");
  int steps = 0;
  for (; steps < kBisectionDepth; ++steps) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return {mid, steps + 1};
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return {0.5 * (lo + hi), steps};
}

}  // namespace

FiberLift::FiberLift(HPolytope h, Frame plane) : h_(std::move(h)), plane_(std::move(plane)) {
  const Matrix comp = plane_.complement();
  if (comp.cols() != 1) fail(ErrorKind::DimensionMismatch, "fiber lifts need a hyperplane frame");
  normal_ = comp.col(0);
}

std::pair<double, double> FiberLift::fiber(const Vector& p2) const {
  const Vector base = plane_.embed(p2);
  double lo = -kInf;
  double hi = kInf;
  for (std::size_t k = 0; k < h_.size(); ++k) {
    const double an = h_.normals[k].dot(normal_);
    const double rhs = h_.offsets[k] - h_.normals[k].dot(base);
    if (std::abs(an) < 1e-14) {
      if (rhs < -1e-12) return {kInf, -kInf};
      continue;
    }
    if (an > 0) {
      hi = std::min(hi, rhs / an);
    } else {
      lo = std::max(lo, rhs / an);
    }
  }
  return {lo, hi};
}

double FiberLift::height(const Vector& p2) const {
  const auto [lo, hi] = fiber(p2);
  if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    fail(ErrorKind::DiscNotContained, "point outside the projection (empty fiber)");
  }
  return 0.5 * (lo + hi);
}

Vector FiberLift::lift(const Vector& p2) const { return plane_.embed(p2) + height(p2) * normal_; }

double symmetric_hexagon_inradius(const std::array<Vector, 3>& cyclic) {
  const std::array<Vector, 6> v{cyclic[0], cyclic[1], cyclic[2], -cyclic[0], -cyclic[1], -cyclic[2]};
  double r = kInf;
  for (std::size_t k = 0; k < 6; ++k) {
    const Vector& a = v[k];
    const Vector d = v[(k + 1) % 6] - a;
    const double dist2 = a.squaredNorm() - std::pow(a.dot(d), 2) / d.squaredNorm();
    r = std::min(r, std::sqrt(std::max(0.0, dist2)));
  }
  return r;
}

HexagonWitness hexagon_section(const Body& body, const Frame& plane, double r, const Tolerances& tol) {
  check_plane(body, plane);
  if (!body.symmetric()) fail(ErrorKind::NotSymmetric, "the hexagon construction needs a centrally symmetric body");
  if (!(r > 0)) fail(ErrorKind::InvalidInput, "radius must be positive");
  const double rho = r * (1.0 - tol.interior_shrink);
  check_disc(body, plane, rho);
  const FiberLift lift(facets_of(body), plane);
  const double third = std::numbers::pi / 3.0;
  auto f = [&](double theta) {
    return lift.height(on_circle(rho, theta + third)) + lift.height(on_circle(rho, theta - third)) - lift.height(on_circle(rho, theta));
  };
  const auto [theta, steps] = bisect(f, 0.0, std::numbers::pi, 1e-13 * std::max(1.0, rho));

  HexagonWitness w;
  w.radius = rho;
  w.theta = theta;
  w.bisection_steps = steps;
  const std::array<Vector, 3> p2{on_circle(rho, theta), on_circle(rho, theta + third), on_circle(rho, theta - third)};
  for (std::size_t k = 0; k < 3; ++k) {
    w.p[k] = plane.embed(p2[k]);
    w.q[k] = lift.lift(p2[k]);
  }
  Vector nu = cross3(w.q[1], w.q[2]);
  nu /= nu.norm();
  w.plane_normal = nu;
  w.residual = std::abs(w.q[0].dot(nu));
  w.regularity = (p2[0] - p2[1] - p2[2]).norm();
  for (const auto& p : p2) w.regularity = std::max(w.regularity, std::abs(p.norm() - rho));
  const HPolytope h = facets_of(body);
  for (const auto& q : w.q) {
    w.max_slack_violation = std::max({w.max_slack_violation, -h.slack(q), -h.slack(-q)});
  }
  return w;
}

SquareWitness square_section(const Body& body, const Frame& plane, double r, const Tolerances& tol) {
  check_plane(body, plane);
  if (!(r > 0)) fail(ErrorKind::InvalidInput, "radius must be positive");
  const double rho = r * (1.0 - tol.interior_shrink);
  check_disc(body, plane, rho);
  const FiberLift lift(facets_of(body), plane);
  const double quarter = 0.5 * std::numbers::pi;
  auto sum = [&](double theta) { return lift.height(on_circle(rho, theta)) + lift.height(on_circle(rho, theta + std::numbers::pi)); };
  auto g = [&](double theta) { return sum(theta) - sum(theta + quarter); };
  const auto [theta, steps] = bisect(g, 0.0, quarter, 1e-13 * std::max(1.0, rho));

  SquareWitness w;
  w.radius = rho;
  w.theta = theta;
  w.bisection_steps = steps;
  const std::array<Vector, 2> p2{on_circle(rho, theta), on_circle(rho, theta + quarter)};
  for (std::size_t k = 0; k < 2; ++k) {
    w.p[k] = plane.embed(p2[k]);
    w.q_plus[k] = lift.lift(p2[k]);
    w.q_minus[k] = lift.lift(-p2[k]);
  }
  const Vector& nrm = lift.normal();
  w.balance_residual = std::abs((w.q_plus[0] + w.q_minus[0]).dot(nrm) - (w.q_plus[1] + w.q_minus[1]).dot(nrm));
  w.regularity = std::abs(p2[0].dot(p2[1]));
  for (const auto& p : p2) w.regularity = std::max(w.regularity, std::abs(p.norm() - rho));
  return w;
}

SymmetricSectionBound symmetric_section_bound(const Body& body, const SearchConfig& config) {
  if (body.dim() != 3) fail(ErrorKind::BadDimension, "the hexagon bound is stated in R^3");
  if (!body.symmetric()) fail(ErrorKind::NotSymmetric, "the hexagon bound needs a centrally symmetric body");
  SymmetricSectionBound out;
  const RadiusEstimate proj = inner_radius_projection(body, 2, config);
  out.projection_inradius = proj.value;
  out.projection_frame = proj.witness_frame;
  out.hexagon = hexagon_section(body, proj.witness_frame, proj.value);
  const auto& q = out.hexagon.q;
  // Cyclic order by angle of the shadows: theta - 60, theta, theta + 60.
  out.section_inradius = symmetric_hexagon_inradius({q[2], q[0], q[1]});
  out.hexagon_inradius = 0.5 * std::sqrt(3.0) * out.hexagon.radius;
  if (out.section_inradius < out.hexagon_inradius - 1e-7) {
    fail(ErrorKind::CertificateFailed, "lifted hexagon is thinner than its shadow");
  }
  const std::array<Vector, 2> span{q[1], q[2]};
  out.section_frame = orthonormalize(span);
  out.ratio = out.projection_inradius / out.section_inradius;
  return out;
}

}  // namespace radii
