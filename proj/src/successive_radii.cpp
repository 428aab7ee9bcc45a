#include "radii/successive_radii.hpp"

#include "radii/certify.hpp"
#include "radii/errors.hpp"
#include "radii/lp.hpp"
#include "radii/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace radii {

namespace {

double eps_for(double scale) { return 1e-9 * std::max(1.0, scale); }

std::uint64_t search_key(const Body& body, const SearchConfig& config) {
  return mix64(body.hash() ^ mix64(config.seed + 0x51ULL));
}

Frame line_frame(const Vector& u) {
  Matrix m(u.size(), 1);
  m.col(0) = u / u.norm();
  return Frame(m, 1e-10);
}

// All i-dimensional frames obtained by dropping one column of f.
std::vector<Frame> sub_frames(const Frame& f) {
  std::vector<Frame> out;
  const int k = f.sub_dim();
  for (int drop = k - 1; drop >= 0; --drop) {
    Matrix m(f.ambient_dim(), k - 1);
    int c = 0;
    for (int j = 0; j < k; ++j) {
      if (j != drop) m.col(c++) = f.columns().col(j);
    }
    out.emplace_back(m, 1e-10);
  }
  return out;
}

Vector perp_part(const Frame& f, const Vector& x) { return x - f.columns() * (f.columns().transpose() * x); }

RadiusEstimate exact_estimate(double value, Frame frame, Vector offset, Side side) {
  RadiusEstimate e;
  e.value = value;
  e.witness_frame = std::move(frame);
  e.witness_offset = std::move(offset);
  e.side = side;
  e.exact = true;
  e.lower = value;
  e.upper = value;
  return e;
}

RadiusEstimate from_search(const GrassmannResult& g, Side side, Vector offset) {
  RadiusEstimate e;
  e.value = g.value;
  e.witness_frame = g.frame;
  e.witness_offset = std::move(offset);
  e.side = side;
  e.starts_used = g.starts_used;
  e.converged = g.converged;
  e.per_start = g.per_start;
  e.lower = e.upper = g.value;
  return e;
}

// Exact ends of the three sequences.
RadiusEstimate outer_end(const RadiusEvaluator& ev, int i) {
  const int n = ev.dim();
  const ClassicalRadii& c = ev.classical();
  if (i == n) return exact_estimate(c.circumradius, Frame::identity(n), Vector::Zero(n), Side::UpperBoundOfMin);
  RadiusEstimate e = exact_estimate(0.5 * c.width, line_frame(c.width_direction), Vector::Zero(n), Side::UpperBoundOfMin);
  e.exact = c.width_exact;
  return e;
}

RadiusEstimate diameter_end(const RadiusEvaluator& ev, bool section) {
  const int n = ev.dim();
  if (const auto* el = ev.body().ellipsoid()) {
    const Frame f = line_frame(el->orientation.col(0));
    return exact_estimate(el->semiaxes(0), f, section ? perp_part(f, el->center) : Vector::Zero(n), Side::LowerBoundOfMax);
  }
  const PointSet& v = ev.model()->vertices;
  const auto [d, pair] = diameter(v);
  const Vector& p = v[static_cast<std::size_t>(pair.first)];
  const Vector& q = v[static_cast<std::size_t>(pair.second)];
  const Frame f = line_frame(q - p);
  return exact_estimate(0.5 * d, f, section ? perp_part(f, 0.5 * (p + q)) : Vector::Zero(n), Side::LowerBoundOfMax);
}

RadiusEstimate inradius_end(const RadiusEvaluator& ev) {
  const int n = ev.dim();
  return exact_estimate(ev.classical().inradius, Frame::identity(n), Vector::Zero(n), Side::LowerBoundOfMax);
}

void require_inner(const RadiusEvaluator& ev) {
  if (!ev.body().ellipsoid() && !ev.has_hrep()) {
    fail(ErrorKind::UnsupportedDimension, "inner radii need a facet description (n <= 4)");
  }
}

void check_index(const Body& body, int i) {
  if (i < 1 || i > body.dim()) fail(ErrorKind::BadDimension, "index i must lie in 1..n");
}

// Default brackets from the classical radii: R_i >= omega/2 >= r, r_i and r~_i <= D/2.
void fallback_bracket(RadiusEstimate& e, const RadiusEvaluator& ev) {
  const ClassicalRadii& c = ev.classical();
  const double eps = eps_for(c.circumradius);
  if (e.side == Side::UpperBoundOfMin) {
    e.upper = e.value;
    if (e.exact) {
      e.lower = e.value - eps;
    } else {
      const double floor = c.width_exact ? 0.5 * c.width - eps : (std::isfinite(c.inradius) ? c.inradius - eps : 0.0);
      e.lower = std::min(e.value, std::max(0.0, floor));
    }
  } else {
    e.lower = e.value;
    e.upper = e.exact ? e.value + eps : std::max(e.value, 0.5 * c.diameter + eps);
  }
}

using Hints = std::function<std::vector<Frame>(int)>;

RadiusEstimate search_outer(const RadiusEvaluator& ev, int i, const SearchConfig& cfg, std::uint64_t key, const Hints& hints) {
  const auto g = grassmann_search(ev.dim(), i, Goal::Minimize, [&](const Frame& f) { return ev.outer(f); }, cfg, key, hints);
  return from_search(g, Side::UpperBoundOfMin, Vector::Zero(ev.dim()));
}

RadiusEstimate search_section(const RadiusEvaluator& ev, int i, const SearchConfig& cfg, std::uint64_t key, const Hints& hints) {
  const auto g = grassmann_search(ev.dim(), i, Goal::Maximize, [&](const Frame& f) { return ev.section(f).first; }, cfg,
                                  key ^ 0x5ec7ULL, hints);
  return from_search(g, Side::LowerBoundOfMax, ev.section(g.frame).second);
}

RadiusEstimate search_projection(const RadiusEvaluator& ev, int i, const SearchConfig& cfg, std::uint64_t key, const Hints& hints) {
  const auto g = grassmann_search(ev.dim(), i, Goal::Maximize, [&](const Frame& f) { return ev.projection(f); }, cfg,
                                  key ^ 0x960eULL, hints);
  return from_search(g, Side::LowerBoundOfMax, Vector::Zero(ev.dim()));
}

double max_eigen(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

double min_eigen(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace

std::string_view to_string(Side side) {
  return side == Side::UpperBoundOfMin ? "UpperBoundOfMin" : "LowerBoundOfMax";
}

RadiusEvaluator::RadiusEvaluator(const Body& body) : body_(body), n_(body.dim()) {
  if (const auto* e = body.ellipsoid()) {
    classical_ = classical_radii(body);
    const Matrix a = e->shape();
    gram_ = a * a.transpose();
    const Vector inv2 = e->semiaxes.array().square().inverse().matrix();
    gram_inv_ = e->orientation * inv2.asDiagonal() * e->orientation.transpose();
    return;
  }
  if (n_ <= 4) {
    model_ = polytope_model(body);
    const BallResult ball = min_enclosing_ball(model_->vertices);
    classical_.circumradius = ball.radius;
    classical_.circumcenter = ball.center;
    const auto [r, c] = chebyshev_center(model_->hrep);
    classical_.inradius = r;
    classical_.incenter = c;
    classical_.diameter = diameter(model_->vertices).first;
    const WidthResult w = min_width(*model_);
    classical_.width = w.omega;
    classical_.width_direction = w.direction;
    classical_.width_exact = w.exact;
    return;
  }
  const auto* v = body.vpolytope();
  if (v == nullptr) fail(ErrorKind::UnsupportedDimension, "H-polytopes are supported up to n = 4");
  if (affine_rank(v->vertices) < n_) fail(ErrorKind::NotFullDimensional, "vertices do not span R^n");
  PolytopeModel m;
  m.n = n_;
  m.vertices = v->vertices;
  m.symmetric = v->symmetric;
  model_ = std::move(m);
  const BallResult ball = min_enclosing_ball(model_->vertices);
  classical_.circumradius = ball.radius;
  classical_.circumcenter = ball.center;
  classical_.inradius = std::numeric_limits<double>::quiet_NaN();
  classical_.diameter = diameter(model_->vertices).first;
  const WidthResult w = min_width(*model_);
  classical_.width = w.omega;
  classical_.width_direction = w.direction;
  classical_.width_exact = false;
}

double RadiusEvaluator::outer(const Frame& frame) const {
  if (model_) {
    if (frame.sub_dim() == n_) return classical_.circumradius;
    return min_ball_radius(project_points(model_->vertices, frame));
  }
  const Matrix& f = frame.columns();
  return std::sqrt(std::max(0.0, max_eigen(f.transpose() * gram_ * f)));
}

std::pair<double, Vector> RadiusEvaluator::section(const Frame& frame) const {
  const Matrix& f = frame.columns();
  if (!model_) {
    const double value = 1.0 / std::sqrt(max_eigen(f.transpose() * gram_inv_ * f));
    return {value, perp_part(frame, body_.ellipsoid()->center)};
  }
  if (!has_hrep()) fail(ErrorKind::UnsupportedDimension, "section radii need a facet description (n <= 4)");
  const HPolytope& h = model_->hrep;
  const int n = n_;
  LPProblem lp;
  lp.objective = Eigen::VectorXd::Zero(n + 1);
  lp.objective(n) = 1.0;
  lp.constraints = Eigen::MatrixXd(static_cast<Eigen::Index>(h.size()), n + 1);
  lp.offsets = Eigen::VectorXd(static_cast<Eigen::Index>(h.size()));
  std::vector<double> w(h.size());
  for (std::size_t k = 0; k < h.size(); ++k) {
    w[k] = (f.transpose() * h.normals[k]).norm();
    lp.constraints.row(static_cast<Eigen::Index>(k)).head(n) = h.normals[k].transpose();
    lp.constraints(static_cast<Eigen::Index>(k), n) = w[k];
    lp.offsets(static_cast<Eigen::Index>(k)) = h.offsets[k];
  }
  const LpSolution s = solve_lp_status(lp);
  if (s.status != LpStatus::Optimal) fail(ErrorKind::EmptyBody, "section LP failed");
  const Vector z = s.argmax.head(n);
  // Radius actually achieved by the returned center.
  double rho = s.optimum;
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (w[k] > 1e-14) rho = std::min(rho, (h.offsets[k] - h.normals[k].dot(z)) / w[k]);
  }
  return {std::max(0.0, rho), perp_part(frame, z)};
}

double RadiusEvaluator::projection(const Frame& frame) const {
  const int i = frame.sub_dim();
  if (!model_) return std::sqrt(std::max(0.0, min_eigen(frame.columns().transpose() * gram_ * frame.columns())));
  if (i == n_) return classical_.inradius;
  const PointSet pts = project_points(model_->vertices, frame);
  if (i == 1) {
    double lo = pts.front()(0);
    double hi = lo;
    for (const auto& p : pts) {
      lo = std::min(lo, p(0));
      hi = std::max(hi, p(0));
    }
    return 0.5 * (hi - lo);
  }
  if (i == 2) return chebyshev_center(polygon_hrep(pts)).first;
  if (i == 3) return chebyshev_center(hrep_from_vrep(VPolytope{pts, false})).first;
  fail(ErrorKind::UnsupportedDimension, "projection inradius supports i <= 3");
}

RadiusEstimate outer_radius(const Body& body, int i, const SearchConfig& config) {
  check_index(body, i);
  const RadiusEvaluator ev(body);
  RadiusEstimate e = (i == ev.dim() || i == 1) ? outer_end(ev, i) : search_outer(ev, i, config, search_key(body, config), {});
  fallback_bracket(e, ev);
  return e;
}

RadiusEstimate inner_radius_section(const Body& body, int i, const SearchConfig& config) {
  check_index(body, i);
  const RadiusEvaluator ev(body);
  require_inner(ev);
  RadiusEstimate e;
  if (i == ev.dim()) {
    e = inradius_end(ev);
    if (const auto* el = body.ellipsoid()) e.witness_offset = Vector::Zero(el->dim());
  } else if (i == 1) {
    e = diameter_end(ev, true);
  } else {
    e = search_section(ev, i, config, search_key(body, config), {});
  }
  fallback_bracket(e, ev);
  return e;
}

RadiusEstimate inner_radius_projection(const Body& body, int i, const SearchConfig& config) {
  check_index(body, i);
  const RadiusEvaluator ev(body);
  require_inner(ev);
  if (!body.ellipsoid() && i > 3 && i < ev.dim()) fail(ErrorKind::UnsupportedDimension, "projection inradius supports i <= 3");
  RadiusEstimate e;
  if (i == ev.dim()) {
    e = inradius_end(ev);
  } else if (i == 1) {
    e = diameter_end(ev, false);
  } else {
    e = search_projection(ev, i, config, search_key(body, config), {});
  }
  fallback_bracket(e, ev);
  return e;
}

RadiiProfile ellipsoid_radii(const Ellipsoid& e) {
  if (!e.centered()) fail(ErrorKind::NotCentered, "closed-form ellipsoid radii need a centered ellipsoid");
  const int n = e.dim();
  RadiiProfile p;
  p.n = n;
  for (int i = 1; i <= n; ++i) {
    const Frame lead(e.orientation.leftCols(i), 1e-10);
    const Frame tail(e.orientation.rightCols(i), 1e-10);
    p.outer.push_back(exact_estimate(e.semiaxes(n - i), tail, Vector::Zero(n), Side::UpperBoundOfMin));
    p.inner_section.push_back(exact_estimate(e.semiaxes(i - 1), lead, Vector::Zero(n), Side::LowerBoundOfMax));
    p.inner_projection.push_back(exact_estimate(e.semiaxes(i - 1), lead, Vector::Zero(n), Side::LowerBoundOfMax));
  }
  return p;
}

RadiiProfile radii_profile(const Body& body, const SearchConfig& search, const CertifyConfig& certify) {
  const int n = body.dim();
  if (const auto* el = body.ellipsoid()) {
    Ellipsoid centered = *el;
    centered.center = Vector::Zero(n);
    RadiiProfile p = ellipsoid_radii(centered);
    for (auto& e : p.inner_section) e.witness_offset = perp_part(e.witness_frame, el->center);
    const double eps = eps_for(el->semiaxes(0));
    for (auto* seq : {&p.outer, &p.inner_section, &p.inner_projection}) {
      for (auto& e : *seq) {
        e.lower = e.value - eps;
        e.upper = e.value + eps;
      }
    }
    return p;
  }

  const RadiusEvaluator ev(body);
  const std::uint64_t key = search_key(body, search);
  RadiiProfile p;
  p.n = n;
  p.outer.resize(static_cast<std::size_t>(n));
  auto at = [](std::vector<RadiusEstimate>& v, int i) -> RadiusEstimate& { return v[static_cast<std::size_t>(i - 1)]; };
  auto per_start_subframes = [](const RadiusEstimate& higher, int k, std::vector<Frame>& out) {
    if (k < static_cast<int>(higher.per_start.size())) {
      for (auto& f : sub_frames(higher.per_start[static_cast<std::size_t>(k)].frame)) out.push_back(std::move(f));
    }
  };

  at(p.outer, n) = outer_end(ev, n);
  for (int i = n - 1; i >= 2; --i) {
    const RadiusEstimate& higher = at(p.outer, i + 1);
    at(p.outer, i) = search_outer(ev, i, search, key, [&](int k) {
      std::vector<Frame> out;
      per_start_subframes(higher, k, out);
      return out;
    });
  }
  if (n >= 2) {
    RadiusEstimate r1 = outer_end(ev, 1);
    // Half-widths along directions inside the R_2 witnesses keep R_1 <= R_2.
    if (n >= 3) {
      for (const auto& s : at(p.outer, 2).per_start) {
        for (int c = 0; c < 2; ++c) {
          const Vector u = s.frame.column(c);
          const double v = 0.5 * width_in_direction(ev.model()->vertices, u / u.norm());
          if (v < r1.value) {
            r1.value = v;
            r1.witness_frame = line_frame(u);
          }
        }
      }
    }
    at(p.outer, 1) = r1;
  }

  if (ev.has_hrep()) {
    p.inner_section.resize(static_cast<std::size_t>(n));
    p.inner_projection.resize(static_cast<std::size_t>(n));
    at(p.inner_section, n) = inradius_end(ev);
    at(p.inner_projection, n) = inradius_end(ev);
    if (n >= 2) {
      at(p.inner_section, 1) = diameter_end(ev, true);
      at(p.inner_projection, 1) = diameter_end(ev, false);
    }
    for (int i = n - 1; i >= 2; --i) {
      const RadiusEstimate& higher = at(p.inner_section, i + 1);
      at(p.inner_section, i) = search_section(ev, i, search, key, [&](int k) {
        std::vector<Frame> out;
        per_start_subframes(higher, k, out);
        return out;
      });
    }
    for (int i = n - 1; i >= 2; --i) {
      if (i > 3) continue;
      const RadiusEstimate& higher = at(p.inner_projection, i + 1);
      const RadiusEstimate& section = at(p.inner_section, i);
      at(p.inner_projection, i) = search_projection(ev, i, search, key, [&](int k) {
        std::vector<Frame> out;
        if (k < static_cast<int>(section.per_start.size())) out.push_back(section.per_start[static_cast<std::size_t>(k)].frame);
        per_start_subframes(higher, k, out);
        return out;
      });
    }
  }

  for (auto* seq : {&p.outer, &p.inner_section, &p.inner_projection}) {
    for (auto& e : *seq) fallback_bracket(e, ev);
  }
  if (certify.enabled && n == 3 && ev.has_hrep()) {
    RadiusEstimate& r2 = at(p.outer, 2);
    r2.lower = std::max(r2.lower, certify_outer_lower(ev, certify).bound);
    RadiusEstimate& s2 = at(p.inner_section, 2);
    s2.upper = std::min(s2.upper, certify_section_upper(ev, certify).bound);
    RadiusEstimate& t2 = at(p.inner_projection, 2);
    t2.upper = std::min(t2.upper, certify_projection_upper(ev, certify).bound);
  }
  return p;
}

GeneralizedRadii generalized_radii(const Body& body, const Ellipsoid& gauge, int i, const SearchConfig& config) {
  if (!gauge.centered()) fail(ErrorKind::NotCentered, "gauge ellipsoid must be centered at the origin");
  if (gauge.dim() != body.dim()) fail(ErrorKind::DimensionMismatch, "gauge and body dimensions differ");
  const Matrix finv = gauge.shape().inverse();
  const Body normalized = transform_body(body, finv, Vector::Zero(body.dim()));
  return {outer_radius(normalized, i, config), inner_radius_section(normalized, i, config)};
}

double minkowski_bound(int n, bool symmetric_body, bool euclidean_gauge) {
  const double rho_k = symmetric_body ? std::sqrt(static_cast<double>(n)) : static_cast<double>(n);
  const double rho_b = euclidean_gauge ? 1.0 : std::sqrt(static_cast<double>(n));
  return rho_k * rho_b;
}

MinkowskiReport minkowski_bound_check(const Body& body, const Ellipsoid& gauge, int i, const SearchConfig& config) {
  const int n = body.dim();
  check_index(body, i);
  if (!gauge.centered()) fail(ErrorKind::NotCentered, "gauge ellipsoid must be centered at the origin");
  if (gauge.dim() != n) fail(ErrorKind::DimensionMismatch, "gauge and body dimensions differ");
  MinkowskiReport rep;
  rep.i = i;
  rep.symmetric = body.symmetric();
  rep.euclidean_gauge = true;
  const Body normalized = transform_body(body, gauge.shape().inverse(), Vector::Zero(n));
  double outer = 0.0;
  double inner = 0.0;
  if (const auto* el = normalized.ellipsoid()) {
    Ellipsoid c = *el;
    c.center = Vector::Zero(n);
    const RadiiProfile p = ellipsoid_radii(c);
    outer = p.outer[static_cast<std::size_t>(n - i)].value;
    inner = p.inner_section[static_cast<std::size_t>(i - 1)].value;
  } else {
    outer = outer_radius(normalized, n - i + 1, config).value;
    inner = inner_radius_section(normalized, i, config).value;
  }
  rep.ratio = outer / inner;
  rep.bound = minkowski_bound(n, rep.symmetric, rep.euclidean_gauge);
  rep.slack = rep.bound - rep.ratio;
  rep.pass = rep.ratio <= rep.bound + 1e-6;
  return rep;
}

}  // namespace radii
