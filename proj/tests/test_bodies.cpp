#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radii/bodies.hpp"
#include "radii/errors.hpp"

#include <cmath>

using namespace radii;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const RadiiError& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("facet counts of the canonical polytopes") {
  CHECK(polytope_model(make_canonical(CanonicalKind::Cube, 3)).hrep.size() == 6);
  CHECK(polytope_model(make_canonical(CanonicalKind::Crosspolytope, 3)).hrep.size() == 8);
  CHECK(polytope_model(make_canonical(CanonicalKind::RegularSimplex, 3)).hrep.size() == 4);
  CHECK(polytope_model(make_canonical(CanonicalKind::Cube, 4)).hrep.size() == 8);
  CHECK(polytope_model(make_canonical(CanonicalKind::Crosspolytope, 4)).hrep.size() == 16);
  CHECK(polytope_model(make_canonical(CanonicalKind::Cube, 2)).hrep.size() == 4);
}

TEST_CASE("regular simplex has unit circumradius and equal edges") {
  for (int n = 2; n <= 5; ++n) {
    const Body simplex = make_canonical(CanonicalKind::RegularSimplex, n);
    const auto& v = simplex.vpolytope()->vertices;
    REQUIRE(static_cast<int>(v.size()) == n + 1);
    const double edge = std::sqrt(2.0 * (n + 1.0) / n);
    for (std::size_t a = 0; a < v.size(); ++a) {
      CHECK(v[a].norm() == doctest::Approx(1.0).epsilon(1e-12));
      for (std::size_t b = a + 1; b < v.size(); ++b) CHECK((v[a] - v[b]).norm() == doctest::Approx(edge).epsilon(1e-12));
    }
  }
}

TEST_CASE("vertex and facet enumeration round trip") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Body b = random_polytope(3, 12, seed % 2 == 0, seed);
    const PolytopeModel m = polytope_model(b);
    for (const auto& v : m.vertices) CHECK(m.hrep.slack(v) > -1e-9);
    const PointSet back = vrep_from_hrep(m.hrep);
    // Every recovered vertex is one of the originals.
    for (const auto& p : back) {
      double nearest = 1e9;
      for (const auto& v : m.vertices) nearest = std::min(nearest, (p - v).norm());
      CHECK(nearest < 1e-8);
    }
  }
}

TEST_CASE("random polytopes are deterministic in the seed") {
  const Body a = random_polytope(3, 20, true, 5);
  const Body b = random_polytope(3, 20, true, 5);
  const Body c = random_polytope(3, 20, true, 6);
  CHECK(a.hash() == b.hash());
  CHECK(a.hash() != c.hash());
  CHECK(a.symmetric());
  CHECK(point_set_symmetric(a.vpolytope()->vertices));
  CHECK_FALSE(random_polytope(3, 20, false, 5).symmetric());
  CHECK(kind_of([] { random_polytope(3, 7, true, 0); }) == ErrorKind::InvalidInput);
}

TEST_CASE("symmetry flag is validated") {
  VPolytope p;
  p.vertices = {make_vector({1, 0}), make_vector({0, 1}), make_vector({-1, -1})};
  p.symmetric = true;
  CHECK(kind_of([&] { Body b(p); }) == ErrorKind::NotSymmetric);
}

TEST_CASE("ellipsoid validation and symmetry") {
  CHECK(kind_of([] { Ellipsoid::make(make_vector({1, -1}), Matrix::Identity(2, 2), Vector::Zero(2)); }) == ErrorKind::InvalidInput);
  const Body centered(Ellipsoid::make(make_vector({1, 2}), Matrix::Identity(2, 2), Vector::Zero(2)));
  const Body moved(Ellipsoid::make(make_vector({1, 2}), Matrix::Identity(2, 2), make_vector({0.5, 0})));
  CHECK(centered.symmetric());
  CHECK_FALSE(moved.symmetric());
  CHECK(centered.ellipsoid()->semiaxes(0) == 2.0);  // sorted descending
}

TEST_CASE("central section of the cube is a square") {
  const PolytopeModel m = polytope_model(make_canonical(CanonicalKind::Cube, 3));
  const auto s = section_hrep(m.hrep, Frame::coordinate(3, std::vector<int>{0, 1}), Vector::Zero(3));
  REQUIRE(s.has_value());
  const PointSet v = vrep_from_hrep(*s);
  CHECK(v.size() == 4);
  for (const auto& p : v) CHECK(p.cwiseAbs().minCoeff() == doctest::Approx(1.0));
  // A plane missing the cube gives no section.
  CHECK_FALSE(section_hrep(m.hrep, Frame::coordinate(3, std::vector<int>{0, 1}), make_vector({0, 0, 2})).has_value());
}

TEST_CASE("planar hull drops interior and collinear points") {
  const PointSet pts{make_vector({0, 0}), make_vector({1, 0}), make_vector({2, 0}), make_vector({2, 2}),
                     make_vector({0, 2}), make_vector({1, 1})};
  CHECK(convex_hull_2d(pts).size() == 4);
  const HPolytope h = polygon_hrep(pts);
  CHECK(h.size() == 4);
  CHECK(h.slack(make_vector({1, 1})) == doctest::Approx(1.0));
}

TEST_CASE("affine maps act on every representation") {
  const Body cube = make_canonical(CanonicalKind::Cube, 3);
  const Body big = scale_body(cube, 2.0);
  for (const auto& v : big.vpolytope()->vertices) CHECK(v.cwiseAbs().maxCoeff() == 2.0);
  const Body ball = make_canonical(CanonicalKind::Ball, 3);
  const Body shifted = transform_body(ball, 2.0 * Matrix::Identity(3, 3), make_vector({1, 0, 0}));
  CHECK(shifted.ellipsoid()->semiaxes(0) == doctest::Approx(2.0));
  CHECK_FALSE(shifted.symmetric());
}

TEST_CASE("degenerate input") {
  VPolytope flat;
  flat.vertices = {make_vector({0, 0, 0}), make_vector({1, 0, 0}), make_vector({0, 1, 0}), make_vector({1, 1, 0})};
  CHECK(kind_of([&] { polytope_model(Body(flat)); }) == ErrorKind::NotFullDimensional);
}
