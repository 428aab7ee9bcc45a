#include "radii/base_radii.hpp"

#include "radii/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace radii {

namespace {

// Welzl's algorithm with the move-to-front heuristic. Recursion depth is
// bounded by the support size (<= d + 1), not by the number of points.
class Miniball {
 public:
  explicit Miniball(std::span<const Vector> pts) : pts_(pts), d_(static_cast<int>(pts.front().size())) {
    order_.resize(pts.size());
    std::iota(order_.begin(), order_.end(), 0);
    double scale = 0.0;
    for (const auto& p : pts) scale = std::max(scale, p.cwiseAbs().maxCoeff());
    slack_ = 1e-13 * std::max(1.0, scale * scale);
    std::vector<int> support;
    support.reserve(static_cast<std::size_t>(d_) + 1);
    mtf(static_cast<int>(pts.size()), support);
  }

  const Vector& center() const { return center_; }
  const std::vector<int>& support() const { return best_support_; }

 private:
  void set_from_support(const std::vector<int>& s) {
    best_support_ = s;
    if (s.empty()) {
      center_ = Vector::Zero(d_);
      radius2_ = -1.0;
      return;
    }
    const Vector& p0 = pts_[static_cast<std::size_t>(s[0])];
    const int k = static_cast<int>(s.size()) - 1;
    if (k == 0) {
      center_ = p0;
      radius2_ = 0.0;
      return;
    }
    Matrix q(k, d_);
    for (int j = 0; j < k; ++j) q.row(j) = (pts_[static_cast<std::size_t>(s[static_cast<std::size_t>(j + 1)])] - p0).transpose();
    const Matrix gram = q * q.transpose();
    const Vector rhs = 0.5 * gram.diagonal();
    const Vector lambda = gram.completeOrthogonalDecomposition().solve(rhs);
    center_ = p0 + q.transpose() * lambda;
    radius2_ = (center_ - p0).squaredNorm();
  }

  bool outside(int idx) const {
    return (pts_[static_cast<std::size_t>(idx)] - center_).squaredNorm() > radius2_ + slack_;
  }

  void mtf(int end, std::vector<int>& support) {
    set_from_support(support);
    if (static_cast<int>(support.size()) == d_ + 1) return;
    for (int k = 0; k < end; ++k) {
      const int idx = order_[static_cast<std::size_t>(k)];
      if (!outside(idx)) continue;
      support.push_back(idx);
      mtf(k, support);
      support.pop_back();
      std::rotate(order_.begin(), order_.begin() + k, order_.begin() + k + 1);
    }
  }

  std::span<const Vector> pts_;
  int d_;
  double slack_ = 0.0;
  std::vector<int> order_;
  Vector center_;
  double radius2_ = -1.0;
  std::vector<int> best_support_;
};

}  // namespace

BallResult min_enclosing_ball(std::span<const Vector> points) {
  if (points.empty()) fail(ErrorKind::TooFewPoints, "min_enclosing_ball needs at least one point");
  const Miniball mb(points);
  BallResult out;
  out.center = mb.center();
  for (const auto& p : points) out.radius = std::max(out.radius, (p - out.center).norm());
  out.support = mb.support();
  std::sort(out.support.begin(), out.support.end());
  return out;
}

double min_ball_radius(std::span<const Vector> points) {
  const Miniball mb(points);
  double r2 = 0.0;
  for (const auto& p : points) r2 = std::max(r2, (p - mb.center()).squaredNorm());
  return std::sqrt(r2);
}

}  // namespace radii
