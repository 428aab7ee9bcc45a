#pragma once

#include "radii/base_radii.hpp"
#include "radii/bodies.hpp"
#include "radii/config.hpp"
#include "radii/grassmann_search.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace radii {

/// Which side of the true value an estimate lies on.
enum class Side { UpperBoundOfMin, LowerBoundOfMax };
std::string_view to_string(Side side);

struct RadiusEstimate {
  double value = 0.0;
  Frame witness_frame = Frame::identity(1);
  Vector witness_offset;  // zero for projections
  Side side = Side::UpperBoundOfMin;
  int starts_used = 0;
  bool converged = true;
  bool exact = false;  // closed form or an exact end of the profile
  // Certified bracket for the true radius: lower <= true <= upper.
  double lower = 0.0;
  double upper = 0.0;
  std::vector<StartOutcome> per_start;  // internal: feeds hints between indices
};

/// R_i, r_i and r~_i for i = 1..n (index i - 1). Inner sequences are empty for
/// polytopes in R^5, where facet enumeration is not available.
struct RadiiProfile {
  int n = 0;
  std::vector<RadiusEstimate> outer;
  std::vector<RadiusEstimate> inner_section;
  std::vector<RadiusEstimate> inner_projection;
};

/// Per-frame objective values, with the body's representations cached.
class RadiusEvaluator {
 public:
  explicit RadiusEvaluator(const Body& body);

  int dim() const { return n_; }
  const Body& body() const { return body_; }
  bool has_hrep() const { return model_.has_value() && !model_->hrep.normals.empty(); }
  const PolytopeModel* model() const { return model_ ? &*model_ : nullptr; }
  const ClassicalRadii& classical() const { return classical_; }

  /// R(K|L); for polytopes the radius the returned ball center achieves.
  double outer(const Frame& frame) const;
  /// max over offsets of r(K cap (x + L)); returns value and offset x in L-perp.
  std::pair<double, Vector> section(const Frame& frame) const;
  /// r(K|L).
  double projection(const Frame& frame) const;

  /// Largest distance from the circumcenter to K (Lipschitz scale for bounds).
  double spread() const { return classical_.circumradius; }

 private:
  Body body_;
  int n_;
  std::optional<PolytopeModel> model_;
  ClassicalRadii classical_;
  Matrix gram_;      // A A^T for ellipsoids
  Matrix gram_inv_;  // (A A^T)^{-1}
};

RadiusEstimate outer_radius(const Body& body, int i, const SearchConfig& config = {});
RadiusEstimate inner_radius_section(const Body& body, int i, const SearchConfig& config = {});
RadiusEstimate inner_radius_projection(const Body& body, int i, const SearchConfig& config = {});

/// Closed forms: r_i = r~_i = sigma_i, R_j = sigma_{n-j+1}. Throws NotCentered.
RadiiProfile ellipsoid_radii(const Ellipsoid& e);

/// All three sequences with hints between indices (monotone by construction)
/// and certified brackets.
RadiiProfile radii_profile(const Body& body, const SearchConfig& search = {}, const CertifyConfig& certify = {});

struct GeneralizedRadii {
  RadiusEstimate outer;
  RadiusEstimate inner;
};

/// Radii of K measured in the gauge of a centered ellipsoid, computed as the
/// Euclidean radii of f^{-1}(K) where gauge = f(B).
GeneralizedRadii generalized_radii(const Body& body, const Ellipsoid& gauge, int i, const SearchConfig& config = {});

struct MinkowskiReport {
  int i = 0;
  double ratio = 0.0;  // R_{n-i+1}(K,E) upper / r_i(K,E) lower
  double bound = 0.0;
  double slack = 0.0;  // bound - ratio
  bool symmetric = false;
  bool euclidean_gauge = true;
  bool pass = false;
};

/// Ratio bound for ellipsoid gauges: sqrt(n) for symmetric K, n otherwise.
/// (An ellipsoid gauge is Euclidean after the affine normalization.)
double minkowski_bound(int n, bool symmetric_body, bool euclidean_gauge);
MinkowskiReport minkowski_bound_check(const Body& body, const Ellipsoid& gauge, int i, const SearchConfig& config = {});

}  // namespace radii
