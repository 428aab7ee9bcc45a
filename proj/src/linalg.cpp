#include "radii/linalg.hpp"

#include "radii/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace radii {

Vector make_vector(std::initializer_list<double> coords) {
  Vector v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index k = 0;
  for (double c : coords) v(k++) = c;
  return v;
}

Vector unit_vector(int n, int axis) {
  Vector v = Vector::Zero(n);
  v(axis) = 1.0;
  return v;
}

Frame::Frame(Matrix columns, double tol) : cols_(std::move(columns)) {
  const auto n = cols_.rows();
  const auto i = cols_.cols();
  if (n < 1 || n > kMaxDim || i < 1 || i > n) {
    fail(ErrorKind::BadDimension, "frame must be n x i with 1 <= i <= n <= 5");
  }
  if (!cols_.allFinite()) fail(ErrorKind::InvalidInput, "frame has non-finite entries");
  if (gram_deviation() >= tol) {
    fail(ErrorKind::DependentInput, "frame columns are not orthonormal");
  }
}

Frame Frame::identity(int n) { return Frame(Matrix::Identity(n, n)); }

Frame Frame::coordinate(int n, std::span<const int> axes) {
  Matrix m = Matrix::Zero(n, static_cast<Eigen::Index>(axes.size()));
  for (std::size_t k = 0; k < axes.size(); ++k) {
    if (axes[k] < 0 || axes[k] >= n) fail(ErrorKind::BadDimension, "axis index out of range");
    m(axes[k], static_cast<Eigen::Index>(k)) = 1.0;
  }
  return Frame(std::move(m));
}

Matrix Frame::complement() const {
  const auto n = cols_.rows();
  const auto i = cols_.cols();
  if (i == n) return Matrix(n, 0);
  Eigen::HouseholderQR<Matrix> qr(cols_);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  return q.rightCols(n - i);
}

Frame Frame::leading(int k) const { return Frame(cols_.leftCols(k), 1e-10); }

Vector Frame::coordinates(const Vector& p) const {
  if (p.size() != cols_.rows()) fail(ErrorKind::DimensionMismatch, "point and frame dimensions differ");
  return cols_.transpose() * p;
}

Vector Frame::embed(const Vector& z) const {
  if (z.size() != cols_.cols()) fail(ErrorKind::DimensionMismatch, "coordinate and frame dimensions differ");
  return cols_ * z;
}

double Frame::gram_deviation() const {
  const Matrix gram = cols_.transpose() * cols_;
  return (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

RigidMotion RigidMotion::identity(int n) { return {Matrix::Identity(n, n), Vector::Zero(n)}; }

PointSet RigidMotion::apply(std::span<const Vector> points) const {
  PointSet out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(apply(p));
  return out;
}

RigidMotion RigidMotion::inverse() const {
  Matrix rt = rotation.transpose();
  return {rt, -(rt * translation)};
}

RigidMotion RigidMotion::compose(const RigidMotion& other) const {
  return {rotation * other.rotation, rotation * other.translation + translation};
}

double smallest_singular_value(const Matrix& m) {
  if (m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

namespace {

// Two passes of modified Gram-Schmidt; returns false if a column collapses.
bool gram_schmidt(Matrix& m, double tol) {
  for (Eigen::Index k = 0; k < m.cols(); ++k) {
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index j = 0; j < k; ++j) {
        m.col(k) -= m.col(j).dot(m.col(k)) * m.col(j);
      }
    }
    const double norm = m.col(k).norm();
    if (!(norm > tol)) return false;
    m.col(k) /= norm;
  }
  return true;
}

}  // namespace

Frame orthonormalize(std::span<const Vector> vectors, double tol) {
  if (vectors.empty()) fail(ErrorKind::DependentInput, "no vectors");
  const auto n = vectors.front().size();
  if (n < 1 || n > kMaxDim) fail(ErrorKind::BadDimension, "dimension must be in 1..5");
  if (static_cast<Eigen::Index>(vectors.size()) > n) {
    fail(ErrorKind::DependentInput, "more vectors than the ambient dimension");
  }
  Matrix m(n, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].size() != n) fail(ErrorKind::DimensionMismatch, "vectors differ in dimension");
    m.col(static_cast<Eigen::Index>(k)) = vectors[k];
  }
  if (smallest_singular_value(m) < tol) fail(ErrorKind::DependentInput, "vectors are linearly dependent");
  if (!gram_schmidt(m, tol)) fail(ErrorKind::DependentInput, "vectors are linearly dependent");
  return Frame(std::move(m));
}

PointSet project_points(std::span<const Vector> points, const Frame& frame) {
  PointSet out;
  out.reserve(points.size());
  const Matrix ft = frame.columns().transpose();
  for (const auto& p : points) {
    if (p.size() != frame.ambient_dim()) fail(ErrorKind::DimensionMismatch, "point and frame dimensions differ");
    out.emplace_back(ft * p);
  }
  return out;
}

RigidMotion rotation_taking(const Vector& u, const Vector& v, double tol) {
  if (u.size() != v.size()) fail(ErrorKind::DimensionMismatch, "u and v differ in dimension");
  if (std::abs(u.norm() - 1.0) > tol || std::abs(v.norm() - 1.0) > tol) {
    fail(ErrorKind::NotUnit, "rotation_taking needs unit vectors");
  }
  const auto n = u.size();
  const double c = std::clamp(u.dot(v), -1.0, 1.0);
  Vector w = v - c * u;
  double s = w.norm();
  if (s < 1e-12) {
    if (c > 0) return RigidMotion::identity(static_cast<int>(n));
    if (n == 1) fail(ErrorKind::InvalidInput, "no proper rotation reverses a line");
    Eigen::Index axis = 0;
    for (Eigen::Index k = 1; k < n; ++k) {
      if (std::abs(u(k)) < std::abs(u(axis))) axis = k;
    }
    w = unit_vector(static_cast<int>(n), static_cast<int>(axis));
    w -= w.dot(u) * u;
    w.normalize();
    s = 0.0;
  } else {
    w /= s;
  }
  // Rotation by angle t with cos t = c, sin t = s in the oriented plane (u, w).
  Matrix r = Matrix::Identity(n, n);
  r += (c - 1.0) * (u * u.transpose() + w * w.transpose());
  r += s * (w * u.transpose() - u * w.transpose());
  return {r, Vector::Zero(n)};
}

Frame frame_from_chart(const Frame& base, std::span<const double> params) {
  return frame_from_chart(base, base.complement(), params);
}

Frame frame_from_chart(const Frame& base, const Matrix& complement, std::span<const double> params) {
  const int n = base.ambient_dim();
  const int i = base.sub_dim();
  const int co = n - i;
  if (static_cast<int>(params.size()) != i * co) {
    fail(ErrorKind::DimensionMismatch, "chart parameters must have length i*(n-i)");
  }
  Matrix m = base.columns();
  for (int col = 0; col < i; ++col) {
    for (int row = 0; row < co; ++row) {
      m.col(col) += params[static_cast<std::size_t>(col * co + row)] * complement.col(row);
    }
  }
  if (!gram_schmidt(m, 1e-300)) fail(ErrorKind::DependentInput, "chart retraction collapsed");
  return Frame(std::move(m));
}

Frame orthogonal_complement_frame(const Vector& normal) {
  const double len = normal.norm();
  if (!(len > 0)) fail(ErrorKind::NotUnit, "zero normal");
  Matrix u(normal.size(), 1);
  u.col(0) = normal / len;
  return Frame(Frame(u, 1e-10).complement(), 1e-12);
}

int affine_rank(std::span<const Vector> points, double tol) {
  if (points.empty()) return -1;
  const auto n = points.front().size();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(points.size()), n);
  Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
  for (const auto& p : points) centroid += p;
  centroid /= static_cast<double>(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    m.row(static_cast<Eigen::Index>(k)) = (Eigen::VectorXd(points[k]) - centroid).transpose();
  }
  double scale = m.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  int rank = 0;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
    if (svd.singularValues()(k) > tol * std::max(1.0, scale)) ++rank;
  }
  return rank;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DependentInput: return "DependentInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotUnit: return "NotUnit";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::DegenerateAfterRetries: return "DegenerateAfterRetries";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::EmptyBody: return "EmptyBody";
    case ErrorKind::TooFewPoints: return "TooFewPoints";
    case ErrorKind::NotCentered: return "NotCentered";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::DiscNotContained: return "DiscNotContained";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::CertificateFailed: return "CertificateFailed";
    case ErrorKind::InvalidTriple: return "InvalidTriple";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace radii
