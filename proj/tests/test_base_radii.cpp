#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "radii/base_radii.hpp"
#include "radii/errors.hpp"

#include <cmath>

using namespace radii;

namespace {

PointSet random_points(int n, int m, std::uint64_t seed) {
  const CounterRng rng(seed, 3);
  PointSet pts;
  for (int k = 0; k < m; ++k) {
    Vector v(n);
    for (int j = 0; j < n; ++j) v(j) = rng.gaussian(static_cast<std::uint64_t>(k * n + j));
    pts.push_back(v);
  }
  return pts;
}

}  // namespace

TEST_CASE("min ball matches brute force") {
  for (int n = 2; n <= 4; ++n) {
    for (std::uint64_t s = 0; s < 25; ++s) {
      const PointSet pts = random_points(n, 8, s * 11 + n);
      const BallResult b = min_enclosing_ball(pts);
      CHECK(b.radius == doctest::Approx(oracle::min_ball_radius(pts)).epsilon(1e-9));
      CHECK(static_cast<int>(b.support.size()) <= n + 1);
      for (const auto& p : pts) CHECK((p - b.center).norm() <= b.radius * (1 + 1e-12));
      CHECK(min_ball_radius(pts) == doctest::Approx(b.radius).epsilon(1e-12));
    }
  }
}

TEST_CASE("min ball edge cases") {
  const PointSet one{make_vector({1, 2})};
  CHECK(min_enclosing_ball(one).radius == 0.0);
  const PointSet twice{make_vector({1, 2}), make_vector({1, 2}), make_vector({3, 2})};
  CHECK(min_enclosing_ball(twice).radius == doctest::Approx(1.0));
  // Collinear points in R^3.
  const PointSet line{make_vector({0, 0, 0}), make_vector({1, 1, 1}), make_vector({2, 2, 2})};
  CHECK(min_enclosing_ball(line).radius == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("chebyshev center of canonical polytopes") {
  const auto cube = polytope_model(make_canonical(CanonicalKind::Cube, 3));
  const auto [rc, cc] = chebyshev_center(cube.hrep);
  CHECK(rc == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cc.norm() < 1e-9);
  for (int n = 2; n <= 4; ++n) {
    const auto simplex = polytope_model(make_canonical(CanonicalKind::RegularSimplex, n));
    CHECK(chebyshev_center(simplex.hrep).first == doctest::Approx(1.0 / n).epsilon(1e-10));
  }
}

TEST_CASE("diameter and directional width") {
  const Body cube = make_canonical(CanonicalKind::Cube, 3);
  const auto& v = cube.vpolytope()->vertices;
  const auto [d, pair] = diameter(v);
  CHECK(d == doctest::Approx(2.0 * std::sqrt(3.0)));
  CHECK(pair.first < pair.second);
  CHECK(width_in_direction(v, unit_vector(3, 0)) == doctest::Approx(2.0));
  CHECK_THROWS_AS(width_in_direction(v, make_vector({1, 1, 0})), RadiiError);
  CHECK_THROWS_AS(diameter(PointSet{make_vector({0, 0})}), RadiiError);
}

TEST_CASE("minimal width") {
  const WidthResult cube = min_width(*make_canonical(CanonicalKind::Cube, 3).vpolytope());
  CHECK(cube.omega == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(cube.exact);
  // Regular tetrahedron: the minimizer is an edge-edge direction, not a facet normal.
  const WidthResult tet = min_width(*make_canonical(CanonicalKind::RegularSimplex, 3).vpolytope());
  CHECK(tet.omega == doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-10));
  const WidthResult tri = min_width(*make_canonical(CanonicalKind::RegularSimplex, 2).vpolytope());
  CHECK(tri.omega == doctest::Approx(1.5).epsilon(1e-12));
  // Brute force: the minimizer is normal to two difference vectors of vertices.
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Body b = random_polytope(3, 12, s % 2 == 0, s);
    const auto& pts = b.vpolytope()->vertices;
    std::vector<Eigen::Vector3d> diffs;
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t c = a + 1; c < pts.size(); ++c) diffs.emplace_back(Eigen::Vector3d(pts[c](0) - pts[a](0), pts[c](1) - pts[a](1), pts[c](2) - pts[a](2)));
    double brute = 1e9;
    for (std::size_t a = 0; a < diffs.size(); ++a) {
      for (std::size_t c = a + 1; c < diffs.size(); ++c) {
        const Eigen::Vector3d u = diffs[a].cross(diffs[c]);
        if (u.norm() < 1e-9) continue;
        brute = std::min(brute, width_in_direction(pts, Vector(u.normalized())));
      }
    }
    const WidthResult w = min_width(*b.vpolytope());
    CHECK(w.omega == doctest::Approx(brute).epsilon(1e-10));
    CHECK(width_in_direction(pts, w.direction) == doctest::Approx(w.omega).epsilon(1e-12));
  }
}

TEST_CASE("classical radii of an ellipsoid are the extreme semiaxes") {
  const Body e(Ellipsoid::make(make_vector({3, 2, 1}), oracle::random_rotation(4), Vector::Zero(3)));
  const ClassicalRadii c = classical_radii(e);
  CHECK(c.circumradius == doctest::Approx(3.0));
  CHECK(c.inradius == doctest::Approx(1.0));
  CHECK(c.diameter == doctest::Approx(6.0));
  CHECK(c.width == doctest::Approx(2.0));
}

TEST_CASE("classical radii are invariant under rotation") {
  const Body b = random_polytope(3, 14, true, 9);
  const Body r = transform_body(b, oracle::random_rotation(1), Vector::Zero(3));
  const ClassicalRadii x = classical_radii(b);
  const ClassicalRadii y = classical_radii(r);
  CHECK(x.circumradius == doctest::Approx(y.circumradius).epsilon(1e-10));
  CHECK(x.inradius == doctest::Approx(y.inradius).epsilon(1e-10));
  CHECK(x.diameter == doctest::Approx(y.diameter).epsilon(1e-10));
  CHECK(x.width == doctest::Approx(y.width).epsilon(1e-10));
}
