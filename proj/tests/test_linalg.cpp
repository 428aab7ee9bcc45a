#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radii/errors.hpp"
#include "radii/linalg.hpp"
#include "radii/rng.hpp"

#include <cmath>
#include <vector>

using namespace radii;

namespace {

Vector random_vector(int n, std::uint64_t seed) {
  const CounterRng rng(seed);
  Vector v(n);
  for (int k = 0; k < n; ++k) v(k) = rng.gaussian(static_cast<std::uint64_t>(k));
  return v;
}

}  // namespace

TEST_CASE("orthonormalize gives an orthonormal frame spanning the input") {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      std::vector<Vector> vs;
      for (int k = 0; k < i; ++k) vs.push_back(random_vector(n, 100 * n + 10 * i + k));
      const Frame f = orthonormalize(vs);
      CHECK(f.gram_deviation() < 1e-12);
      // Each input vector lies in the span.
      for (const auto& v : vs) {
        const Vector back = f.embed(f.coordinates(v));
        CHECK((back - v).norm() < 1e-10 * v.norm());
      }
    }
  }
}

TEST_CASE("dependent or oversized input is rejected") {
  const Vector a = make_vector({1, 2, 3});
  std::vector<Vector> dep{a, 2.0 * a};
  CHECK_THROWS_AS(orthonormalize(dep), RadiiError);
  try {
    orthonormalize(dep);
  } catch (const RadiiError& e) {
    CHECK(e.kind() == ErrorKind::DependentInput);
  }
  std::vector<Vector> many{unit_vector(2, 0), unit_vector(2, 1), make_vector({1, 1})};
  CHECK_THROWS_AS(orthonormalize(many), RadiiError);
  CHECK_THROWS_AS(Frame(Matrix::Identity(6, 2)), RadiiError);
}

TEST_CASE("rotation_taking is a proper rotation mapping u to v") {
  for (int n = 2; n <= 5; ++n) {
    for (std::uint64_t s = 0; s < 10; ++s) {
      Vector u = random_vector(n, s);
      Vector v = random_vector(n, s + 1000);
      u.normalize();
      v.normalize();
      for (const Vector& target : {v, Vector(-u), u}) {
        const RigidMotion r = rotation_taking(u, target);
        CHECK((r.rotation * u - target).norm() < 1e-12);
        CHECK((r.rotation.transpose() * r.rotation - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(r.rotation.determinant() == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }
  CHECK_THROWS_AS(rotation_taking(make_vector({2, 0}), make_vector({0, 1})), RadiiError);
}

TEST_CASE("chart at zero is the base frame; complement is orthogonal") {
  const Frame base = orthonormalize(std::vector<Vector>{random_vector(4, 1), random_vector(4, 2)});
  const std::vector<double> zero(4, 0.0);
  const Frame same = frame_from_chart(base, zero);
  CHECK((same.columns() - base.columns()).cwiseAbs().maxCoeff() < 1e-14);
  const Matrix c = base.complement();
  CHECK(c.cols() == 2);
  CHECK((base.columns().transpose() * c).cwiseAbs().maxCoeff() < 1e-14);
  const std::vector<double> params{0.3, -0.2, 0.1, 0.7};
  CHECK(frame_from_chart(base, params).gram_deviation() < 1e-12);
}

TEST_CASE("orthogonal complement of a normal") {
  const Vector u = make_vector({1, 1, 1});
  const Frame f = orthogonal_complement_frame(u);
  CHECK(f.sub_dim() == 2);
  CHECK((f.columns().transpose() * u).norm() < 1e-14);
}

TEST_CASE("projection coordinates and affine rank") {
  const Frame f = Frame::coordinate(3, std::vector<int>{0, 2});
  const PointSet p = project_points(PointSet{make_vector({1, 2, 3})}, f);
  CHECK(p[0](0) == 1.0);
  CHECK(p[0](1) == 3.0);
  const PointSet line{make_vector({0, 0, 0}), make_vector({1, 1, 1}), make_vector({2, 2, 2})};
  CHECK(affine_rank(line) == 1);
  const PointSet tet{make_vector({0, 0, 0}), make_vector({1, 0, 0}), make_vector({0, 1, 0}), make_vector({0, 0, 1})};
  CHECK(affine_rank(tet) == 3);
}

TEST_CASE("counter RNG is a pure function of its counter") {
  const CounterRng a(42);
  const CounterRng b(42);
  CHECK(a.uniform(7) == b.uniform(7));
  CHECK(a.uniform(7) != a.uniform(8));
  double mean = 0.0;
  for (int k = 0; k < 20000; ++k) mean += a.gaussian(static_cast<std::uint64_t>(k));
  CHECK(std::abs(mean / 20000) < 0.03);
}
