#include "radii/bodies.hpp"

#include "radii/errors.hpp"
#include "radii/lp.hpp"
#include "radii/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>

namespace radii {

namespace {

void check_dim(int n) {
  if (n < 1 || n > kMaxDim) fail(ErrorKind::BadDimension, "dimension must be in 1..5, got " + std::to_string(n));
}

void check_points(const PointSet& pts, const char* what) {
  if (pts.empty()) fail(ErrorKind::InvalidInput, std::string(what) + " is empty");
  const auto n = pts.front().size();
  check_dim(static_cast<int>(n));
  for (const auto& p : pts) {
    if (p.size() != n) fail(ErrorKind::DimensionMismatch, std::string(what) + " mixes dimensions");
    if (!p.allFinite()) fail(ErrorKind::InvalidInput, std::string(what) + " has non-finite coordinates");
  }
}

std::uint64_t hash_doubles(std::uint64_t h, const double* data, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    std::uint64_t bits = 0;
    double v = data[k] == 0.0 ? 0.0 : data[k];  // fold -0.0 into 0.0
    std::memcpy(&bits, &v, sizeof bits);
    h = mix64(h ^ bits);
  }
  return h;
}

bool hrep_symmetric(const HPolytope& h) {
  for (std::size_t k = 0; k < h.size(); ++k) {
    bool found = false;
    for (std::size_t j = 0; j < h.size() && !found; ++j) {
      found = (h.normals[k] + h.normals[j]).cwiseAbs().maxCoeff() < 1e-9 && std::abs(h.offsets[k] - h.offsets[j]) < 1e-9;
    }
    if (!found) return false;
  }
  return true;
}

// Normal of the hyperplane through n points in R^n (unnormalized; zero if degenerate).
Vector hyperplane_normal(const PointSet& pts, const std::vector<int>& idx) {
  const int n = static_cast<int>(pts.front().size());
  Eigen::MatrixXd d(n - 1, n);
  for (int r = 1; r < n; ++r) d.row(r - 1) = (pts[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])] - pts[static_cast<std::size_t>(idx[0])]).transpose();
  Vector normal(n);
  if (n == 2) {
    normal << d(0, 1), -d(0, 0);
  } else if (n == 3) {
    normal << d(0, 1) * d(1, 2) - d(0, 2) * d(1, 1), d(0, 2) * d(1, 0) - d(0, 0) * d(1, 2),
        d(0, 0) * d(1, 1) - d(0, 1) * d(1, 0);
  } else {
    for (int k = 0; k < n; ++k) {
      Eigen::MatrixXd minor(n - 1, n - 1);
      int c = 0;
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        minor.col(c++) = d.col(j);
      }
      normal(k) = ((k % 2 == 0) ? 1.0 : -1.0) * minor.determinant();
    }
  }
  return normal;
}

// Calls f(idx) for every k-subset of {0..m-1} in lexicographic order.
template <typename F>
void for_each_subset(int m, int k, F&& f) {
  if (k > m) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) idx[static_cast<std::size_t>(j)] = j;
  while (true) {
    f(idx);
    int j = k - 1;
    while (j >= 0 && idx[static_cast<std::size_t>(j)] == m - k + j) --j;
    if (j < 0) return;
    ++idx[static_cast<std::size_t>(j)];
    for (int t = j + 1; t < k; ++t) idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
  }
}

void add_unique_facet(HPolytope& h, const Vector& normal, double offset, double tol) {
  for (std::size_t k = 0; k < h.size(); ++k) {
    if ((h.normals[k] - normal).cwiseAbs().maxCoeff() <= tol && std::abs(h.offsets[k] - offset) <= tol) return;
  }
  h.normals.push_back(normal);
  h.offsets.push_back(offset);
}

double cross2(const Vector& o, const Vector& a, const Vector& b) {
  return (a(0) - o(0)) * (b(1) - o(1)) - (a(1) - o(1)) * (b(0) - o(0));
}

}  // namespace

double HPolytope::slack(const Vector& x) const {
  double s = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < normals.size(); ++k) s = std::min(s, offsets[k] - normals[k].dot(x));
  return s;
}

Ellipsoid Ellipsoid::make(Vector semiaxes, Matrix orientation, Vector center) {
  const auto n = semiaxes.size();
  check_dim(static_cast<int>(n));
  if (orientation.rows() != n || orientation.cols() != n || center.size() != n) {
    fail(ErrorKind::DimensionMismatch, "ellipsoid semiaxes, rotation and center disagree in dimension");
  }
  if (!(semiaxes.array() > 0).all() || !semiaxes.allFinite()) fail(ErrorKind::InvalidInput, "semiaxes must be positive");
  const Matrix gram = orientation.transpose() * orientation;
  if ((gram - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-12) {
    fail(ErrorKind::InvalidInput, "ellipsoid rotation is not orthogonal");
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) order[static_cast<std::size_t>(k)] = k;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return semiaxes(a) > semiaxes(b); });
  Ellipsoid e;
  e.semiaxes = Vector(n);
  e.orientation = Matrix(n, n);
  for (int k = 0; k < n; ++k) {
    e.semiaxes(k) = semiaxes(order[static_cast<std::size_t>(k)]);
    e.orientation.col(k) = orientation.col(order[static_cast<std::size_t>(k)]);
  }
  e.center = std::move(center);
  return e;
}

Ellipsoid Ellipsoid::from_linear_map(const Matrix& a, const Vector& center) {
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Vector sigma = svd.singularValues();
  if (!(sigma.minCoeff() > 0)) fail(ErrorKind::InvalidInput, "linear map is singular");
  Matrix u = svd.matrixU();
  // Re-orthonormalize to absorb rounding from the SVD.
  Eigen::HouseholderQR<Matrix> qr(u);
  Matrix q = qr.householderQ() * Matrix::Identity(u.rows(), u.cols());
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    if (q.col(k).dot(u.col(k)) < 0) q.col(k) *= -1.0;
  }
  return make(sigma, q, center);
}

Body::Body(VPolytope p, std::string label) : rep_(std::move(p)), label_(std::move(label)) {
  const auto& v = std::get<VPolytope>(rep_);
  check_points(v.vertices, "vertex list");
  dim_ = v.dim();
  if (v.symmetric && !point_set_symmetric(v.vertices, 1e-12)) {
    fail(ErrorKind::NotSymmetric, "vertex set flagged symmetric is not closed under negation");
  }
  symmetric_ = v.symmetric;
}

Body::Body(HPolytope p, std::string label) : rep_(std::move(p)), label_(std::move(label)) {
  const auto& h = std::get<HPolytope>(rep_);
  check_points(h.normals, "normal list");
  if (h.offsets.size() != h.normals.size()) fail(ErrorKind::DimensionMismatch, "normals and offsets differ in count");
  dim_ = static_cast<int>(h.normals.front().size());
  if (h.dimension != dim_) fail(ErrorKind::DimensionMismatch, "H-polytope dimension field disagrees with normals");
  for (const auto& a : h.normals) {
    if (std::abs(a.norm() - 1.0) > 1e-10) fail(ErrorKind::NotUnit, "H-polytope normals must be unit vectors");
  }
  symmetric_ = hrep_symmetric(h);
}

Body::Body(Ellipsoid e, std::string label) : rep_(std::move(e)), label_(std::move(label)) {
  const auto& el = std::get<Ellipsoid>(rep_);
  dim_ = el.dim();
  check_dim(dim_);
  symmetric_ = el.centered();
}

std::uint64_t Body::hash() const {
  std::uint64_t h = mix64(static_cast<std::uint64_t>(rep_.index()) + 17u * static_cast<std::uint64_t>(dim_));
  if (const auto* v = vpolytope()) {
    for (const auto& p : v->vertices) h = hash_doubles(h, p.data(), static_cast<std::size_t>(p.size()));
  } else if (const auto* hp = hpolytope()) {
    for (std::size_t k = 0; k < hp->size(); ++k) {
      h = hash_doubles(h, hp->normals[k].data(), static_cast<std::size_t>(hp->normals[k].size()));
      h = hash_doubles(h, &hp->offsets[k], 1);
    }
  } else if (const auto* e = ellipsoid()) {
    h = hash_doubles(h, e->semiaxes.data(), static_cast<std::size_t>(e->semiaxes.size()));
    h = hash_doubles(h, e->orientation.data(), static_cast<std::size_t>(e->orientation.size()));
    h = hash_doubles(h, e->center.data(), static_cast<std::size_t>(e->center.size()));
  }
  return h;
}

PolytopeModel polytope_model(const Body& body) {
  PolytopeModel m;
  m.n = body.dim();
  m.symmetric = body.symmetric();
  if (const auto* v = body.vpolytope()) {
    m.vertices = v->vertices;
    m.hrep = hrep_from_vrep(*v);
  } else if (const auto* h = body.hpolytope()) {
    m.hrep = *h;
    m.vertices = vrep_from_hrep(*h);
  } else {
    fail(ErrorKind::InvalidInput, "an ellipsoid has no polytope model");
  }
  return m;
}

bool point_set_symmetric(const PointSet& points, double tol) {
  for (const auto& p : points) {
    bool found = false;
    for (const auto& q : points) {
      if ((p + q).cwiseAbs().maxCoeff() <= tol) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Body make_canonical(CanonicalKind kind, int n) {
  check_dim(n);
  switch (kind) {
    case CanonicalKind::Ball:
      return Body(Ellipsoid::make(Vector::Ones(n), Matrix::Identity(n, n), Vector::Zero(n)), "ball");
    case CanonicalKind::Cube: {
      VPolytope p;
      p.symmetric = true;
      for (int mask = 0; mask < (1 << n); ++mask) {
        Vector v(n);
        for (int k = 0; k < n; ++k) v(k) = (mask >> (n - 1 - k)) & 1 ? 1.0 : -1.0;
        p.vertices.push_back(v);
      }
      return Body(std::move(p), "cube");
    }
    case CanonicalKind::Crosspolytope: {
      VPolytope p;
      p.symmetric = true;
      for (int k = 0; k < n; ++k) {
        p.vertices.push_back(unit_vector(n, k));
        p.vertices.push_back(-unit_vector(n, k));
      }
      return Body(std::move(p), "crosspolytope");
    }
    case CanonicalKind::RegularSimplex: {
      // Centered standard basis of R^{n+1}, expressed in an orthonormal basis of
      // the hyperplane sum(x) = 0 and scaled to circumradius 1.
      const int d = n + 1;
      Eigen::MatrixXd diffs(d, n);
      for (int k = 0; k < n; ++k) {
        diffs.col(k).setZero();
        diffs(k, k) = 1.0;
        diffs(k + 1, k) = -1.0;
      }
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(diffs);
      Eigen::MatrixXd basis = qr.householderQ() * Eigen::MatrixXd::Identity(d, n);
      VPolytope p;
      for (int k = 0; k < d; ++k) {
        Eigen::VectorXd e = Eigen::VectorXd::Constant(d, -1.0 / d);
        e(k) += 1.0;
        Eigen::VectorXd c = basis.transpose() * e;
        p.vertices.emplace_back(c / c.norm());
      }
      if (n == 1) p.symmetric = true;
      return Body(std::move(p), "regular_simplex");
    }
  }
  fail(ErrorKind::InvalidInput, "unknown canonical kind");
}

Body make_antiprism_P(double eps) {
  if (!(eps > 0)) fail(ErrorKind::InvalidInput, "eps must be positive");
  const double s = 1.0 / std::sqrt(3.0);
  const Vector v1 = make_vector({s, 1.0, eps});
  const Vector v2 = make_vector({s, -1.0, eps});
  const Vector v3 = make_vector({-2.0 * s, 0.0, eps});
  VPolytope p;
  p.symmetric = true;
  p.vertices = {v1, v2, v3, -v1, -v2, -v3};
  return Body(std::move(p), "antiprism_P");
}

Body make_remark_simplex(double eps) {
  if (!(eps > 0)) fail(ErrorKind::InvalidInput, "eps must be positive");
  VPolytope p;
  p.vertices = {make_vector({1.0, 0.0, eps}), make_vector({-1.0, 0.0, eps}), make_vector({0.0, 1.0, -eps}),
                make_vector({0.0, -1.0, -eps})};
  return Body(std::move(p), "remark_simplex");
}

Body random_polytope(int n, int m, bool symmetric, std::uint64_t seed) {
  check_dim(n);
  if (m < n + 1) fail(ErrorKind::InvalidInput, "need at least n+1 vertices");
  if (symmetric && m % 2 != 0) fail(ErrorKind::InvalidInput, "symmetric polytopes need an even vertex count");
  const int draws = symmetric ? m / 2 : m;
  constexpr int kAttempts = 8;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const CounterRng rng(seed, static_cast<std::uint64_t>(attempt));
    VPolytope p;
    p.symmetric = symmetric;
    std::uint64_t counter = 0;
    for (int k = 0; k < draws; ++k) {
      Vector v(n);
      for (int c = 0; c < n; ++c) v(c) = rng.gaussian(counter++);
      const double len = v.norm();
      if (!(len > 1e-12)) {
        --k;
        continue;
      }
      p.vertices.push_back(v / len);
    }
    if (symmetric) {
      for (int k = 0; k < draws; ++k) p.vertices.push_back(-p.vertices[static_cast<std::size_t>(k)]);
    }
    bool distinct = true;
    for (std::size_t a = 0; a < p.vertices.size() && distinct; ++a) {
      for (std::size_t b = a + 1; b < p.vertices.size() && distinct; ++b) {
        distinct = (p.vertices[a] - p.vertices[b]).norm() > 1e-6;
      }
    }
    if (distinct && affine_rank(p.vertices, 1e-6) == n) {
      return Body(std::move(p), std::string(symmetric ? "random_symmetric_" : "random_general_") + std::to_string(seed));
    }
  }
  fail(ErrorKind::DegenerateAfterRetries, "random polytope stayed degenerate after retries");
}

Body random_ellipsoid(int n, std::uint64_t seed) {
  check_dim(n);
  const CounterRng rng(seed, 0xe11ULL);
  std::uint64_t counter = 0;
  PointSet cols;
  Matrix g(n, n);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) g(r, c) = rng.gaussian(counter++);
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  Vector axes(n);
  for (int k = 0; k < n; ++k) axes(k) = 0.5 + 1.5 * rng.uniform(1000 + static_cast<std::uint64_t>(k));
  return Body(Ellipsoid::make(axes, q, Vector::Zero(n)), "random_ellipsoid_" + std::to_string(seed));
}

HPolytope ball_hrep(int n, int count) {
  HPolytope h;
  h.dimension = n;
  if (n == 2) {
    for (int k = 0; k < count; ++k) {
      const double t = 2.0 * std::numbers::pi * k / count;
      h.normals.push_back(make_vector({std::cos(t), std::sin(t)}));
      h.offsets.push_back(1.0);
    }
  } else if (n == 3) {
    // Fibonacci lattice on the upper half sphere plus its reflection, so the
    // approximation is centrally symmetric.
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    const int half = (count + 1) / 2;
    for (int k = 0; k < half; ++k) {
      const double z = (k + 0.5) / half;
      const double rad = std::sqrt(1.0 - z * z);
      const double t = golden * k;
      const Vector u = make_vector({rad * std::cos(t), rad * std::sin(t), z});
      h.normals.push_back(u);
      h.normals.push_back(-u);
      h.offsets.push_back(1.0);
      h.offsets.push_back(1.0);
    }
  } else if (n == 4) {
    const CounterRng rng(0xba11ULL);
    std::uint64_t counter = 0;
    for (int k = 0; k < n; ++k) {
      h.normals.push_back(unit_vector(n, k));
      h.normals.push_back(-unit_vector(n, k));
    }
    while (static_cast<int>(h.normals.size()) < count) {
      Vector v(n);
      for (int c = 0; c < n; ++c) v(c) = rng.gaussian(counter++);
      h.normals.push_back(v / v.norm());
    }
    h.offsets.assign(h.normals.size(), 1.0);
  } else {
    fail(ErrorKind::UnsupportedDimension, "ball approximation supports n = 2, 3, 4");
  }
  return h;
}

PointSet convex_hull_2d(const PointSet& points2d) {
  PointSet pts = points2d;
  std::sort(pts.begin(), pts.end(), [](const Vector& a, const Vector& b) {
    return a(0) < b(0) || (a(0) == b(0) && a(1) < b(1));
  });
  pts.erase(std::unique(pts.begin(), pts.end(), [](const Vector& a, const Vector& b) { return (a - b).cwiseAbs().maxCoeff() < 1e-14; }),
            pts.end());
  if (pts.size() < 3) return pts;
  double scale = 0.0;
  for (const auto& p : pts) scale = std::max(scale, p.cwiseAbs().maxCoeff());
  const double eps = 1e-13 * std::max(1.0, scale * scale);
  PointSet hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross2(hull[k - 2], hull[k - 1], p) <= eps) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross2(hull[k - 2], hull[k - 1], pts[i]) <= eps) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

HPolytope polygon_hrep(const PointSet& points2d) {
  const PointSet hull = convex_hull_2d(points2d);
  if (hull.size() < 3) fail(ErrorKind::NotFullDimensional, "planar point set spans no polygon");
  HPolytope h;
  h.dimension = 2;
  for (std::size_t k = 0; k < hull.size(); ++k) {
    const Vector& p = hull[k];
    const Vector& q = hull[(k + 1) % hull.size()];
    Vector normal = make_vector({q(1) - p(1), p(0) - q(0)});
    normal /= normal.norm();
    h.normals.push_back(normal);
    h.offsets.push_back(normal.dot(p));
  }
  return h;
}

HPolytope hrep_from_vrep(const VPolytope& p, double membership_tol, double dedup_tol) {
  check_points(p.vertices, "vertex list");
  const int n = p.dim();
  if (n > 4) fail(ErrorKind::UnsupportedDimension, "facet enumeration supports n <= 4");
  if (affine_rank(p.vertices) < n) fail(ErrorKind::NotFullDimensional, "vertices do not span R^n");
  const PointSet& v = p.vertices;
  if (n == 1) {
    double lo = v.front()(0);
    double hi = lo;
    for (const auto& x : v) {
      lo = std::min(lo, x(0));
      hi = std::max(hi, x(0));
    }
    HPolytope h;
    h.dimension = 1;
    h.normals = {make_vector({1.0}), make_vector({-1.0})};
    h.offsets = {hi, -lo};
    return h;
  }
  if (n == 2) return polygon_hrep(v);

  Vector centroid = Vector::Zero(n);
  double scale = 0.0;
  for (const auto& x : v) centroid += x;
  centroid /= static_cast<double>(v.size());
  for (const auto& x : v) scale = std::max(scale, (x - centroid).norm());
  const double degenerate = 1e-10 * std::pow(std::max(scale, 1e-300), n - 1);

  HPolytope h;
  h.dimension = n;
  for_each_subset(static_cast<int>(v.size()), n, [&](const std::vector<int>& idx) {
    Vector normal = hyperplane_normal(v, idx);
    const double len = normal.norm();
    if (len <= degenerate) return;
    normal /= len;
    double offset = normal.dot(v[static_cast<std::size_t>(idx[0])]);
    if (normal.dot(centroid) > offset) {
      normal = -normal;
      offset = -offset;
    }
    const double tol = membership_tol * std::max(1.0, scale);
    for (const auto& x : v) {
      if (normal.dot(x) > offset + tol) return;
    }
    add_unique_facet(h, normal, offset, dedup_tol);
  });
  return h;
}

PointSet vrep_from_hrep(const HPolytope& h, double tol) {
  const int n = h.dim();
  if (n > 4) fail(ErrorKind::UnsupportedDimension, "vertex enumeration supports n <= 4");
  PointSet out;
  for_each_subset(static_cast<int>(h.size()), n, [&](const std::vector<int>& idx) {
    Matrix a(n, n);
    Vector b(n);
    for (int r = 0; r < n; ++r) {
      a.row(r) = h.normals[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])].transpose();
      b(r) = h.offsets[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])];
    }
    Eigen::FullPivLU<Matrix> lu(a);
    if (lu.rank() < n || std::abs(a.determinant()) < 1e-12) return;
    const Vector x = lu.solve(b);
    if (!x.allFinite() || h.slack(x) < -tol * std::max(1.0, x.norm())) return;
    for (const auto& y : out) {
      if ((y - x).cwiseAbs().maxCoeff() <= 1e-8) return;
    }
    out.push_back(x);
  });
  if (out.empty()) fail(ErrorKind::EmptyBody, "H-polytope has no vertices");
  return out;
}

std::optional<HPolytope> section_hrep(const HPolytope& h, const Frame& frame, const Vector& offset) {
  const int n = h.dim();
  if (frame.ambient_dim() != n || offset.size() != n) fail(ErrorKind::DimensionMismatch, "section frame/offset dimension");
  if (frame.coordinates(offset).cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, offset.norm())) {
    fail(ErrorKind::InvalidInput, "section offset must be orthogonal to the subspace");
  }
  const int i = frame.sub_dim();
  HPolytope out;
  out.dimension = i;
  for (std::size_t k = 0; k < h.size(); ++k) {
    const Vector a = frame.coordinates(h.normals[k]);
    const double rhs = h.offsets[k] - h.normals[k].dot(offset);
    const double len = a.norm();
    if (len < 1e-12) {
      if (rhs < -1e-9) return std::nullopt;
      continue;
    }
    out.normals.push_back(a / len);
    out.offsets.push_back(rhs / len);
  }
  if (out.normals.empty()) return std::nullopt;
  // Emptiness: the best ball radius max rho s.t. a.z + rho <= b is negative.
  LPProblem lp;
  lp.objective = Eigen::VectorXd::Zero(i + 1);
  lp.objective(i) = 1.0;
  lp.constraints = Eigen::MatrixXd(static_cast<Eigen::Index>(out.size()) + 1, i + 1);
  lp.offsets = Eigen::VectorXd(static_cast<Eigen::Index>(out.size()) + 1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    lp.constraints.row(static_cast<Eigen::Index>(k)).head(i) = out.normals[k].transpose();
    lp.constraints(static_cast<Eigen::Index>(k), i) = 1.0;
    lp.offsets(static_cast<Eigen::Index>(k)) = out.offsets[k];
  }
  lp.constraints.row(static_cast<Eigen::Index>(out.size())).setZero();
  lp.constraints(static_cast<Eigen::Index>(out.size()), i) = 1.0;
  lp.offsets(static_cast<Eigen::Index>(out.size())) = 1e6;
  const LpSolution s = solve_lp_status(lp);
  if (s.status != LpStatus::Optimal || s.optimum < -1e-9) return std::nullopt;
  return out;
}

Body transform_body(const Body& body, const Matrix& a, const Vector& t) {
  const int n = body.dim();
  if (a.rows() != n || a.cols() != n || t.size() != n) fail(ErrorKind::DimensionMismatch, "transform dimension");
  const bool linear = t.cwiseAbs().maxCoeff() == 0.0;
  if (const auto* v = body.vpolytope()) {
    VPolytope p;
    for (const auto& x : v->vertices) p.vertices.push_back(a * x + t);
    p.symmetric = v->symmetric && linear && point_set_symmetric(p.vertices, 1e-12);
    return Body(std::move(p), body.label());
  }
  if (const auto* h = body.hpolytope()) {
    // a x + t in {n.y <= b}  <=>  (a^{-T} n) . y <= b + (a^{-T} n) . t after substitution y = a x + t.
    const Matrix inv_t = a.inverse().transpose();
    HPolytope out;
    out.dimension = n;
    for (std::size_t k = 0; k < h->size(); ++k) {
      Vector nn = inv_t * h->normals[k];
      double b = h->offsets[k] + nn.dot(t);
      const double len = nn.norm();
      out.normals.push_back(nn / len);
      out.offsets.push_back(b / len);
    }
    return Body(std::move(out), body.label());
  }
  const Ellipsoid& e = *body.ellipsoid();
  return Body(Ellipsoid::from_linear_map(a * e.shape(), a * e.center + t), body.label());
}

Body scale_body(const Body& body, double factor) {
  const int n = body.dim();
  return transform_body(body, factor * Matrix::Identity(n, n), Vector::Zero(n));
}

Body move_body(const Body& body, const RigidMotion& motion) {
  return transform_body(body, motion.rotation, motion.translation);
}

}  // namespace radii
