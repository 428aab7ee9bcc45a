#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "radii/base_radii.hpp"
#include "radii/constructions.hpp"
#include "radii/errors.hpp"
#include "radii/successive_radii.hpp"

#include <cmath>
#include <numbers>

using namespace radii;

namespace {

const Frame kPlane12 = Frame::coordinate(3, std::vector<int>{0, 1});

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const RadiiError& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidInput;
}

Body prism(int sides) {
  VPolytope p;
  for (int k = 0; k < sides; ++k) {
    const double t = 2.0 * std::numbers::pi * k / sides;
    for (double z : {-1.0, 1.0}) p.vertices.push_back(make_vector({std::cos(t), std::sin(t), z}));
  }
  p.symmetric = sides % 2 == 0;
  return Body(p, "prism");
}

// Circumscribed ball approximation closed under every coordinate reflection,
// so fibers over span{e1, e2} are centered on the plane.
HPolytope mirrored_ball(int per_octant) {
  HPolytope h;
  h.dimension = 3;
  for (const auto& u : oracle::hemisphere(4 * per_octant)) {
    if (u.x() <= 0 || u.y() <= 0) continue;
    for (int signs = 0; signs < 8; ++signs) {
      h.normals.push_back(make_vector({signs & 1 ? -u.x() : u.x(), signs & 2 ? -u.y() : u.y(), signs & 4 ? -u.z() : u.z()}));
      h.offsets.push_back(1.0);
    }
  }
  return h;
}

}  // namespace

TEST_CASE("fiber lift of the cube") {
  const FiberLift lift(polytope_model(make_canonical(CanonicalKind::Cube, 3)).hrep, kPlane12);
  const auto [lo, hi] = lift.fiber(make_vector({0.5, 0.5}));
  CHECK(std::abs(lo) == doctest::Approx(1.0));
  CHECK(std::abs(hi) == doctest::Approx(1.0));
  CHECK(lift.height(make_vector({0.5, 0.5})) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(lift.height(make_vector({2.0, 0.0})), RadiiError);
}

TEST_CASE("hexagon in the H-approximated ball") {
  const Body ball(mirrored_ball(40), "ball");
  const HexagonWitness w = hexagon_section(ball, kPlane12, 0.99);
  CHECK(w.residual < 1e-7);
  CHECK(w.regularity < 1e-9);
  for (const auto& q : w.q) CHECK(std::abs(q(2)) < 1e-7);
}

TEST_CASE("hexagon in the antiprism") {
  const HexagonWitness w = hexagon_section(make_antiprism_P(0.01), kPlane12, 1.0 - 1e-6);
  CHECK(w.residual < 1e-7);
  CHECK(w.regularity < 1e-9);
  CHECK(w.max_slack_violation <= 1e-9);
  CHECK(w.bisection_steps <= 60);
  // The inscribed hexagon touches the shadow at its edge midpoints, which lift
  // to the central section: the regular hexagon of unit circumradius.
  for (const auto& q : w.q) {
    CHECK(q.norm() == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(std::abs(q(2)) < 1e-5);
  }
  CHECK(std::abs(w.q[0].dot(w.plane_normal)) < 1e-7);
}

TEST_CASE("hexagon in a prism stays on the equator") {
  const HexagonWitness w = hexagon_section(prism(24), kPlane12, 0.9);
  for (const auto& q : w.q) CHECK(std::abs(q(2)) < 1e-9);
}

TEST_CASE("hexagon preconditions") {
  CHECK(kind_of([] { hexagon_section(make_canonical(CanonicalKind::RegularSimplex, 3), kPlane12, 0.1); }) ==
        ErrorKind::NotSymmetric);
  CHECK(kind_of([] { hexagon_section(make_canonical(CanonicalKind::Cube, 3), kPlane12, 1.2); }) ==
        ErrorKind::DiscNotContained);
}

TEST_CASE("square sections") {
  // Symmetric body: g vanishes, every lift pair is balanced.
  const SquareWitness cube = square_section(make_canonical(CanonicalKind::Cube, 3), kPlane12, 0.9);
  CHECK(cube.balance_residual < 1e-9);

  // The remark simplex: the largest disc in the shadow has radius 1/sqrt2, and
  // the balanced square is the one through (+-1/2, +-1/2).
  const Body simplex = make_remark_simplex(0.01);
  const SquareWitness s = square_section(simplex, kPlane12, 1.0 / std::sqrt(2.0));
  CHECK(s.balance_residual < 1e-7);
  CHECK(s.regularity < 1e-9);
  const Vector mid_plus = 0.5 * (s.q_plus[0] + s.q_minus[0]);
  const Vector mid_minus = 0.5 * (s.q_plus[1] + s.q_minus[1]);
  CHECK((mid_plus - mid_minus).norm() < 1e-7);
  CHECK(std::abs(std::abs(s.p[0](0)) - 0.5) < 1e-6);
  CHECK(std::abs(std::abs(s.p[0](1)) - 0.5) < 1e-6);

  CHECK(kind_of([&] { square_section(simplex, kPlane12, 0.8); }) == ErrorKind::DiscNotContained);
}

TEST_CASE("symmetric section bound") {
  SUBCASE("antiprism attains the constant") {
    const SymmetricSectionBound b = symmetric_section_bound(make_antiprism_P(0.01));
    CHECK(b.projection_inradius == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(b.section_inradius >= std::sqrt(3.0) / 2 - 1e-3);
    CHECK(b.ratio == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-2));
  }
  SUBCASE("cube certifies the section radius") {
    const SymmetricSectionBound b = symmetric_section_bound(make_canonical(CanonicalKind::Cube, 3));
    CHECK(b.section_inradius >= std::sqrt(3.0) / 2 * b.projection_inradius - 1e-7);
    CHECK(b.section_inradius <= inner_radius_section(make_canonical(CanonicalKind::Cube, 3), 2).upper + 1e-9);
    CHECK(b.ratio <= 2.0 / std::sqrt(3.0) + 1e-6);
  }
  SUBCASE("regular hexagon inradius") {
    std::array<Vector, 3> hex;
    for (int k = 0; k < 3; ++k) hex[k] = make_vector({std::cos(k * std::numbers::pi / 3), std::sin(k * std::numbers::pi / 3), 0.0});
    CHECK(symmetric_hexagon_inradius(hex) == doctest::Approx(std::sqrt(3.0) / 2));
  }
}

TEST_CASE("parallelogram under the projected diameter") {
  const ParallelogramWitness cube = parallelogram_diameter_bound(make_canonical(CanonicalKind::Cube, 3));
  CHECK(cube.diameter == doctest::Approx(2.0 * std::sqrt(3.0)));
  CHECK(std::abs(std::abs(cube.p(0)) - 1.0) < 1e-12);
  CHECK(cube.half_width_ok);
  CHECK(cube.parallelogram_defect < 1e-9);
  CHECK(cube.chain_ok);
  for (std::uint64_t s = 0; s < 6; ++s) {
    const ParallelogramWitness w = parallelogram_diameter_bound(random_polytope(3, 14, s % 2 == 0, s), SearchConfig{.starts = 16});
    CHECK(w.half_width_ok);
    CHECK(w.half_width >= w.projected_diameter / 4 - 1e-9);
    CHECK(w.max_slack_violation <= 1e-9);
    CHECK(w.chain_ok);
  }
}

TEST_CASE("trapezoid box") {
  const TrapezoidWitness cube = trapezoid_width_bound(make_canonical(CanonicalKind::Cube, 3));
  CHECK(cube.omega == doctest::Approx(2.0));
  CHECK(cube.omega_prime == doctest::Approx(2.0));
  CHECK(cube.box_ok);
  CHECK(cube.outer_ok);
  CHECK(cube.chain_ok);
  const TrapezoidWitness simplex = trapezoid_width_bound(make_canonical(CanonicalKind::RegularSimplex, 3));
  CHECK(simplex.width_ok);
  CHECK(simplex.box_ok);
  CHECK(simplex.chain_ok);
  const TrapezoidWitness square = trapezoid_width_bound(make_canonical(CanonicalKind::Cube, 2));
  CHECK(square.omega == doctest::Approx(2.0));
  CHECK(square.chain_ok);
}

TEST_CASE("touching points") {
  SUBCASE("equilateral triangle") {
    const Body tri = make_canonical(CanonicalKind::RegularSimplex, 2);
    const TouchingSet t = touching_points(tri);
    CHECK(t.indices.size() == 3);
    for (double l : t.lambda) CHECK(l == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(t.residual < 1e-9);
  }
  SUBCASE("segment with interior points") {
    const PointSet pts{make_vector({1, 0}), make_vector({-1, 0}), make_vector({0.2, 0.1}), make_vector({-0.3, -0.2})};
    const TouchingSet t = touching_points(pts);
    CHECK(t.indices.size() == 2);
    for (double l : t.lambda) CHECK(l == doctest::Approx(0.5));
  }
  SUBCASE("square uses a basic solution") {
    const TouchingSet t = touching_points(make_canonical(CanonicalKind::Cube, 2));
    CHECK(t.indices.size() >= 2);
    CHECK(t.indices.size() <= 3);
    double sum = 0.0;
    for (double l : t.lambda) sum += l;
    CHECK(sum == doctest::Approx(1.0));
    CHECK(t.residual < 1e-9);
  }
  SUBCASE("random point sets") {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Body b = random_polytope(3, 12, false, 200 + s);
      const TouchingSet t = touching_points(b);
      CHECK(t.indices.size() >= 2);
      CHECK(t.indices.size() <= 4);
      for (int k : t.indices) CHECK((b.vpolytope()->vertices[k] - t.center).norm() >= t.radius - 1e-8);
    }
  }
}

TEST_CASE("Perel'man constant") {
  const PerelmanConstant c = perelman_constant();
  CHECK(c.t_star == doctest::Approx(0.46498).epsilon(2e-5));
  CHECK(c.bound == doctest::Approx(2.15063).epsilon(5e-5));
  CHECK(c.bound == doctest::Approx(1.0 / c.t_star));
  auto g = [](double t) { return 4 * t - std::sqrt(2.0) * std::sqrt(t + 1 + std::sqrt(1 - 2 * t)); };
  CHECK(g(0.5) > 0);
  CHECK(g(0.25) < 0);
  CHECK(std::abs(g(c.t_star)) < 1e-12);
}

TEST_CASE("planar radii and the Santalo slack") {
  CHECK(std::abs(santalo_slack(1.0, std::sqrt(3.0), 0.5)) < 1e-9);
  CHECK(santalo_slack(1.0, 2.0, 1.0) == doctest::Approx(4.0));
  CHECK(kind_of([] { santalo_slack(1.0, 2.0, 1.5); }) == ErrorKind::InvalidTriple);
  CHECK(kind_of([] { santalo_slack(1.0, 2.5, 0.5); }) == ErrorKind::InvalidTriple);
  CHECK(kind_of([] { santalo_slack(-1.0, 1.0, 0.5); }) == ErrorKind::InvalidTriple);

  const CounterRng rng(9);
  for (int k = 0; k < 100; ++k) {
    Eigen::Vector2d v[3];
    for (int j = 0; j < 3; ++j) v[j] = Eigen::Vector2d(rng.gaussian(6 * k + 2 * j), rng.gaussian(6 * k + 2 * j + 1));
    const auto [R, D, r] = planar_radii(PointSet{Vector(v[0]), Vector(v[1]), Vector(v[2])});
    CHECK(R == doctest::Approx(oracle::triangle_circumradius(v[0], v[1], v[2])).epsilon(1e-9));
    CHECK(r == doctest::Approx(oracle::triangle_inradius(v[0], v[1], v[2])).epsilon(1e-9));
    CHECK(santalo_slack(R, D, r) >= -1e-9);
  }
}

TEST_CASE("lifting a triangle does not shrink its inradius") {
  // Shadow triangles against their lifts in random directions.
  const CounterRng rng(21);
  for (int k = 0; k < 50; ++k) {
    Eigen::Vector3d a[3];
    for (int j = 0; j < 3; ++j)
      a[j] = Eigen::Vector3d(rng.gaussian(9 * k + 3 * j), rng.gaussian(9 * k + 3 * j + 1), rng.gaussian(9 * k + 3 * j + 2));
    const Eigen::Vector3d e1 = (a[1] - a[0]).normalized();
    const Eigen::Vector3d e2 = (a[2] - a[0] - (a[2] - a[0]).dot(e1) * e1).normalized();
    Eigen::Vector2d own[3];
    PointSet shadow;
    for (int j = 0; j < 3; ++j) {
      own[j] = Eigen::Vector2d((a[j] - a[0]).dot(e1), (a[j] - a[0]).dot(e2));
      shadow.push_back(make_vector({a[j](0), a[j](1)}));
    }
    if (affine_rank(shadow) < 2) continue;
    const double lifted = oracle::triangle_inradius(own[0], own[1], own[2]);
    CHECK(planar_radii(shadow)[2] <= lifted + 1e-12);
  }
}

TEST_CASE("Perel'man pipeline") {
  const PerelmanPipeline simplex = perelman_pipeline(make_canonical(CanonicalKind::RegularSimplex, 3));
  CHECK(simplex.pass);
  CHECK(simplex.lift_ok);
  CHECK(simplex.ratio < 2.151);
  CHECK(simplex.santalo >= -1e-9);
  const PerelmanPipeline cube = perelman_pipeline(make_canonical(CanonicalKind::Cube, 3), SearchConfig{.starts = 16});
  CHECK(cube.pass);
  CHECK(cube.diameter_ok);
  CHECK(cube.ratio == doctest::Approx(std::sqrt(2.0) / std::sqrt(1.5)).epsilon(2e-3));
}
