#include "radii/certify.hpp"

#include "radii/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>

namespace radii {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Cell {
  int face;
  double s0, s1, t0, t1;
  double value;  // objective at the center
  double bound;  // upper bound over the cell
};

struct ByBound {
  bool operator()(const Cell& a, const Cell& b) const { return a.bound < b.bound; }
};

Vector face_point(int face, double s, double t) {
  Vector u = Vector::Zero(3);
  u(face) = 1.0;
  u((face + 1) % 3) = s;
  u((face + 2) % 3) = t;
  return u / u.norm();
}

// Maximizes g over planes; upper(g_center, theta') bounds g on the cell.
// The incumbent is the best cell center seen, so the bound does not depend on
// any outside search (and hence not on its start budget).
CertifiedBound branch_and_bound(const std::function<double(const Frame&)>& g, const std::function<double(double, double)>& upper,
                                double scale, const CertifyConfig& config) {
  CertifiedBound out;
  double best = -kInf;
  std::priority_queue<Cell, std::vector<Cell>, ByBound> queue;
  auto evaluate = [&](int face, double s0, double s1, double t0, double t1) {
    const Vector center = face_point(face, 0.5 * (s0 + s1), 0.5 * (t0 + t1));
    double theta = 0.0;
    for (double s : {s0, s1}) {
      for (double t : {t0, t1}) theta = std::max(theta, std::acos(std::clamp(center.dot(face_point(face, s, t)), -1.0, 1.0)));
    }
    const double chord = 2.0 * std::sin(0.5 * theta) + 1e-15;
    const double v = g(orthogonal_complement_frame(center));
    ++out.evaluations;
    best = std::max(best, v);
    queue.push(Cell{face, s0, s1, t0, t1, v, upper(v, chord)});
  };
  const int grid = std::max(1, config.initial_grid);
  for (int face = 0; face < 3; ++face) {
    for (int a = 0; a < grid; ++a) {
      for (int b = 0; b < grid; ++b) {
        evaluate(face, -1.0 + 2.0 * a / grid, -1.0 + 2.0 * (a + 1) / grid, -1.0 + 2.0 * b / grid, -1.0 + 2.0 * (b + 1) / grid);
      }
    }
  }
  const double gap = config.relative_gap * std::max(scale, 1e-300);
  while (!queue.empty()) {
    const Cell top = queue.top();
    if (top.bound <= best + gap) {
      out.reached_gap = true;
      break;
    }
    if (out.evaluations + 4 > config.max_evaluations) break;
    queue.pop();
    const double sm = 0.5 * (top.s0 + top.s1);
    const double tm = 0.5 * (top.t0 + top.t1);
    evaluate(top.face, top.s0, sm, top.t0, tm);
    evaluate(top.face, sm, top.s1, top.t0, tm);
    evaluate(top.face, top.s0, sm, tm, top.t1);
    evaluate(top.face, sm, top.s1, tm, top.t1);
  }
  out.bound = queue.empty() ? best : std::max(best, queue.top().bound);
  return out;
}

void require_3d(const RadiusEvaluator& ev) {
  if (ev.dim() != 3) fail(ErrorKind::UnsupportedDimension, "plane branch-and-bound works in R^3");
}

}  // namespace

CertifiedBound certify_outer_lower(const RadiusEvaluator& ev, const CertifyConfig& config) {
  require_3d(ev);
  const double rho = ev.spread();
  const double margin = 1e-9 * std::max(1.0, rho);
  // Maximize -R(K|L).
  CertifiedBound b = branch_and_bound([&](const Frame& f) { return -ev.outer(f); },
                                      [&](double v, double chord) { return v + margin + chord * rho; }, rho, config);
  b.bound = -b.bound;
  return b;
}

CertifiedBound certify_section_upper(const RadiusEvaluator& ev, const CertifyConfig& config) {
  require_3d(ev);
  const double r = ev.classical().inradius;
  const double margin = 1e-9 * std::max(1.0, ev.spread());
  return branch_and_bound([&](const Frame& f) { return ev.section(f).first; },
                          [&](double v, double chord) {
                            const double s = v + margin;
                            const double denom = r - chord * s;
                            return denom > 0 ? s * r / denom : kInf;
                          },
                          ev.spread(), config);
}

CertifiedBound certify_projection_upper(const RadiusEvaluator& ev, const CertifyConfig& config) {
  require_3d(ev);
  const double rho = ev.spread();
  const double margin = 1e-9 * std::max(1.0, rho);
  return branch_and_bound([&](const Frame& f) { return ev.projection(f); },
                          [&](double v, double chord) { return v + margin + chord * rho; }, ev.spread(), config);
}

}  // namespace radii
