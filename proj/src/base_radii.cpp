#include "radii/base_radii.hpp"

#include "radii/errors.hpp"
#include "radii/grassmann_search.hpp"
#include "radii/lp.hpp"
#include "radii/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace radii {

namespace {

double width_raw(std::span<const Vector> points, const Vector& u) {
  double hi = -std::numeric_limits<double>::infinity();
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& p : points) {
    const double t = u.dot(p);
    hi = std::max(hi, t);
    lo = std::min(lo, t);
  }
  return hi - lo;
}

void consider(std::span<const Vector> pts, Vector u, WidthResult& best) {
  const double len = u.norm();
  if (!(len > 0)) return;
  u /= len;
  const double w = width_raw(pts, u);
  if (w < best.omega) {
    best.omega = w;
    best.direction = u;
  }
}

// Pairs of vertices joined by an edge: their common facets have normals of rank n - 1.
std::vector<std::pair<int, int>> polytope_edges(const PolytopeModel& m) {
  const int n = m.n;
  std::vector<std::vector<int>> incident(m.vertices.size());
  for (std::size_t v = 0; v < m.vertices.size(); ++v) {
    for (std::size_t f = 0; f < m.hrep.size(); ++f) {
      if (std::abs(m.hrep.normals[f].dot(m.vertices[v]) - m.hrep.offsets[f]) <= 1e-8) incident[v].push_back(static_cast<int>(f));
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < m.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < m.vertices.size(); ++b) {
      if ((m.vertices[a] - m.vertices[b]).norm() < 1e-9) continue;
      std::vector<int> common;
      std::set_intersection(incident[a].begin(), incident[a].end(), incident[b].begin(), incident[b].end(),
                            std::back_inserter(common));
      if (static_cast<int>(common.size()) < n - 1) continue;
      Eigen::MatrixXd normals(static_cast<Eigen::Index>(common.size()), n);
      for (std::size_t k = 0; k < common.size(); ++k) normals.row(static_cast<Eigen::Index>(k)) = m.hrep.normals[static_cast<std::size_t>(common[k])].transpose();
      Eigen::FullPivLU<Eigen::MatrixXd> lu(normals);
      lu.setThreshold(1e-9);
      if (lu.rank() == n - 1) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return edges;
}

// Local descent on the sphere from u0 (chart around u0).
void descend(std::span<const Vector> pts, const Vector& u0, WidthResult& best) {
  const Frame base(u0 / u0.norm(), 1e-10);
  const Matrix comp = base.complement();
  auto f = [&](std::span<const double> p) { return width_raw(pts, frame_from_chart(base, comp, p).column(0)); };
  const NelderMeadResult nm = nelder_mead(f, std::vector<double>(static_cast<std::size_t>(comp.cols()), 0.0), 0.2, 400, 1e-10, 1);
  consider(pts, frame_from_chart(base, comp, nm.x).column(0), best);
}

}  // namespace

std::pair<double, Vector> chebyshev_center(const HPolytope& h) {
  const int n = h.dim();
  if (h.size() == 0) fail(ErrorKind::InvalidInput, "H-polytope has no constraints");
  LPProblem lp;
  lp.objective = Eigen::VectorXd::Zero(n + 1);
  lp.objective(n) = 1.0;
  lp.constraints = Eigen::MatrixXd(static_cast<Eigen::Index>(h.size()), n + 1);
  lp.offsets = Eigen::VectorXd(static_cast<Eigen::Index>(h.size()));
  for (std::size_t k = 0; k < h.size(); ++k) {
    lp.constraints.row(static_cast<Eigen::Index>(k)).head(n) = h.normals[k].transpose();
    lp.constraints(static_cast<Eigen::Index>(k), n) = h.normals[k].norm();
    lp.offsets(static_cast<Eigen::Index>(k)) = h.offsets[k];
  }
  const LpSolution s = solve_lp_status(lp);
  if (s.status == LpStatus::Infeasible) fail(ErrorKind::EmptyBody, "H-polytope is empty");
  if (s.status == LpStatus::Unbounded) fail(ErrorKind::Unbounded, "H-polytope is unbounded");
  if (s.optimum < -1e-9) fail(ErrorKind::EmptyBody, "H-polytope is empty");
  Vector c = s.argmax.head(n);
  // Report the radius the center actually achieves.
  return {std::max(0.0, h.slack(c)), c};
}

std::pair<double, std::pair<int, int>> diameter(std::span<const Vector> points) {
  if (points.size() < 2) fail(ErrorKind::TooFewPoints, "diameter needs at least two points");
  double best = -1.0;
  std::pair<int, int> pair{0, 1};
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      const double d = (points[a] - points[b]).squaredNorm();
      if (d > best) {
        best = d;
        pair = {static_cast<int>(a), static_cast<int>(b)};
      }
    }
  }
  return {std::sqrt(best), pair};
}

double width_in_direction(std::span<const Vector> points, const Vector& u) {
  if (std::abs(u.norm() - 1.0) > 1e-10) fail(ErrorKind::NotUnit, "width direction must be a unit vector");
  if (points.empty()) return 0.0;
  return width_raw(points, u);
}

WidthResult min_width(const VPolytope& p) {
  if (p.dim() > 4) {
    if (affine_rank(p.vertices) < p.dim()) fail(ErrorKind::NotFullDimensional, "vertices do not span R^n");
    PolytopeModel m;
    m.n = p.dim();
    m.vertices = p.vertices;
    return min_width(m);
  }
  return min_width(PolytopeModel{p.dim(), p.vertices, hrep_from_vrep(p), p.symmetric});
}

WidthResult min_width(const PolytopeModel& m) {
  const int n = m.n;
  const std::span<const Vector> pts(m.vertices);
  WidthResult best;
  best.omega = std::numeric_limits<double>::infinity();
  best.exact = n <= 3;
  if (n == 1) {
    consider(pts, make_vector({1.0}), best);
    return best;
  }
  for (const auto& a : m.hrep.normals) consider(pts, a, best);
  if (n == 3) {
    const auto edges = polytope_edges(m);
    for (std::size_t a = 0; a < edges.size(); ++a) {
      const Vector e = m.vertices[static_cast<std::size_t>(edges[a].second)] - m.vertices[static_cast<std::size_t>(edges[a].first)];
      for (std::size_t b = a + 1; b < edges.size(); ++b) {
        const Vector f = m.vertices[static_cast<std::size_t>(edges[b].second)] - m.vertices[static_cast<std::size_t>(edges[b].first)];
        const Vector c = make_vector({e(1) * f(2) - e(2) * f(1), e(2) * f(0) - e(0) * f(2), e(0) * f(1) - e(1) * f(0)});
        if (c.norm() > 1e-9 * e.norm() * f.norm()) consider(pts, c, best);
      }
    }
  }
  if (n >= 4) {
    // Descent from the best facet normals and from deterministic sphere starts.
    std::vector<std::pair<double, std::size_t>> ranked;
    for (std::size_t k = 0; k < m.hrep.normals.size(); ++k) ranked.emplace_back(width_raw(pts, m.hrep.normals[k]), k);
    std::sort(ranked.begin(), ranked.end());
    for (std::size_t k = 0; k < std::min<std::size_t>(8, ranked.size()); ++k) descend(pts, m.hrep.normals[ranked[k].second], best);
    const CounterRng rng(0x5eedULL, static_cast<std::uint64_t>(n));
    std::uint64_t counter = 0;
    for (int s = 0; s < 64; ++s) {
      Vector u(n);
      for (int c = 0; c < n; ++c) u(c) = rng.gaussian(counter++);
      descend(pts, u, best);
    }
  }
  return best;
}

ClassicalRadii classical_radii(const Body& body) {
  ClassicalRadii out;
  if (const auto* e = body.ellipsoid()) {
    const int n = e->dim();
    out.circumradius = e->semiaxes(0);
    out.inradius = e->semiaxes(n - 1);
    out.diameter = 2.0 * e->semiaxes(0);
    out.width = 2.0 * e->semiaxes(n - 1);
    out.circumcenter = e->center;
    out.incenter = e->center;
    out.width_direction = e->orientation.col(n - 1);
    return out;
  }
  const PolytopeModel m = polytope_model(body);
  const BallResult ball = min_enclosing_ball(m.vertices);
  out.circumradius = ball.radius;
  out.circumcenter = ball.center;
  const auto [r, c] = chebyshev_center(m.hrep);
  out.inradius = r;
  out.incenter = c;
  out.diameter = diameter(m.vertices).first;
  const WidthResult w = min_width(m);
  out.width = w.omega;
  out.width_direction = w.direction;
  out.width_exact = w.exact;
  return out;
}

}  // namespace radii
