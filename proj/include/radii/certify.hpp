#pragma once

#include "radii/config.hpp"
#include "radii/successive_radii.hpp"

namespace radii {

/// Result of a branch-and-bound over planes in R^3 (parameterized by unit
/// normals on a cube-sphere modulo sign).
struct CertifiedBound {
  double bound = 0.0;
  int evaluations = 0;
  bool reached_gap = false;
};

// Planes L, L' whose normals are at most theta apart are related by a rotation
// Q with |Q - I| <= theta' = 2 sin(theta / 2). Then, with rho the circumradius of K
// and r its inradius:
//   |R(K|L) - R(K|L')| <= theta' rho,   |r(K|L) - r(K|L')| <= theta' rho,
//   r_2-section value at L >= s r / (r + theta' s), s the value at L'.

/// Certified lower bound on R_2(K), n = 3.
CertifiedBound certify_outer_lower(const RadiusEvaluator& ev, const CertifyConfig& config);
/// Certified upper bound on r_2(K), n = 3.
CertifiedBound certify_section_upper(const RadiusEvaluator& ev, const CertifyConfig& config);
/// Certified upper bound on r~_2(K), n = 3.
CertifiedBound certify_projection_upper(const RadiusEvaluator& ev, const CertifyConfig& config);

}  // namespace radii
