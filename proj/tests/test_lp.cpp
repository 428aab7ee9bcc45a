#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radii/errors.hpp"
#include "radii/lp.hpp"
#include "radii/rng.hpp"

#include <cmath>
#include <limits>

using namespace radii;

namespace {

// Reference optimum of a bounded 2-variable LP: best feasible pairwise intersection.
double vertex_enumeration(const LPProblem& p) {
  double best = -std::numeric_limits<double>::infinity();
  for (int a = 0; a < p.rows(); ++a) {
    for (int b = a + 1; b < p.rows(); ++b) {
      Eigen::Matrix2d m;
      m << p.constraints.row(a), p.constraints.row(b);
      if (std::abs(m.determinant()) < 1e-12) continue;
      const Eigen::Vector2d x = m.partialPivLu().solve(Eigen::Vector2d(p.offsets(a), p.offsets(b)));
      if (((p.constraints * x - p.offsets).array() <= 1e-9).all()) best = std::max(best, p.objective.dot(x));
    }
  }
  return best;
}

LPProblem random_polygon_lp(std::uint64_t seed, int rows) {
  const CounterRng rng(seed);
  LPProblem p;
  p.objective = Eigen::Vector2d(rng.gaussian(0), rng.gaussian(1));
  p.constraints.resize(rows, 2);
  p.offsets.resize(rows);
  for (int k = 0; k < rows; ++k) {
    const double t = 2.0 * M_PI * rng.uniform(static_cast<std::uint64_t>(10 + k));
    p.constraints.row(k) << std::cos(t), std::sin(t);
    p.offsets(k) = 0.5 + rng.uniform(static_cast<std::uint64_t>(1000 + k));
  }
  // A box keeps every instance bounded.
  p.constraints.conservativeResize(rows + 4, 2);
  p.offsets.conservativeResize(rows + 4);
  p.constraints.bottomRows(4) << 1, 0, -1, 0, 0, 1, 0, -1;
  p.offsets.tail(4).setConstant(3.0);
  return p;
}

}  // namespace

TEST_CASE("textbook LP") {
  // max 3x + 2y, x + y <= 4, x + 3y <= 6, x <= 3, x, y >= 0 -> 11 at (3, 1).
  LPProblem p;
  p.objective = Eigen::Vector2d(3, 2);
  p.constraints.resize(5, 2);
  p.constraints << 1, 1, 1, 3, 1, 0, -1, 0, 0, -1;
  p.offsets.resize(5);
  p.offsets << 4, 6, 3, 0, 0;
  const auto [value, x] = solve_lp(p);
  CHECK(value == doctest::Approx(11.0).epsilon(1e-12));
  CHECK(x(0) == doctest::Approx(3.0));
  CHECK(x(1) == doctest::Approx(1.0));
}

TEST_CASE("random polygon LPs agree with vertex enumeration") {
  // Few rows go through the primal tableau, many rows through the dual shortcut.
  for (int rows : {3, 6, 40}) {
    for (std::uint64_t s = 0; s < 30; ++s) {
      const LPProblem p = random_polygon_lp(s * 7 + rows, rows);
      const LpSolution sol = solve_lp_status(p);
      REQUIRE(sol.status == LpStatus::Optimal);
      CHECK(sol.optimum == doctest::Approx(vertex_enumeration(p)).epsilon(1e-9));
      CHECK(((p.constraints * sol.argmax - p.offsets).array() <= 1e-9).all());
    }
  }
}

TEST_CASE("infeasible and unbounded programs") {
  LPProblem p;
  p.objective = Eigen::Vector2d(1, 0);
  p.constraints.resize(2, 2);
  p.constraints << 1, 0, -1, 0;
  p.offsets = Eigen::Vector2d(-1, -1);  // x <= -1 and x >= 1
  CHECK(solve_lp_status(p).status == LpStatus::Infeasible);
  CHECK_THROWS_AS(solve_lp(p), RadiiError);

  p.offsets = Eigen::Vector2d(1, 1);
  p.objective = Eigen::Vector2d(0, 1);  // y is free
  CHECK(solve_lp_status(p).status == LpStatus::Unbounded);
}

TEST_CASE("standard form returns a basic solution") {
  // Convex weights writing the origin from four points: at most 3 nonzeros.
  StandardLP s;
  s.a.resize(3, 4);
  s.a << 1, -1, 0, 0, 0, 0, 1, -1, 1, 1, 1, 1;
  s.b = Eigen::Vector3d(0, 0, 1);
  s.c = Eigen::VectorXd::Zero(4);
  const LpSolution sol = solve_standard_lp(s);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK((sol.argmax.array() > 1e-12).count() <= 3);
  CHECK((s.a * sol.argmax - s.b).norm() < 1e-12);
}
