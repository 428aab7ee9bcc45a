#pragma once

#include <cstdint>

namespace radii {

/// Numeric tolerances shared by every module. Defaults are the values the
/// individual operations document; override a copy, never the globals.
struct Tolerances {
  double frame_orthonormality = 1e-12;
  double independence = 1e-10;        // smallest singular value for orthonormalize
  double unit_norm = 1e-10;           // |u| = 1 checks
  double lp_feasibility = 1e-9;       // simplex pivots and reduced costs
  double hull_membership = 1e-9;      // vertex-on-halfspace test in facet enumeration
  double facet_dedup = 1e-8;          // normal/offset equality for facet dedup
  double contact = 1e-8;              // touching-point selection |v| >= R - contact
  double ball_containment = 1e-10;    // min-ball containment check
  double symmetry = 1e-12;            // vertex set == -vertex set
  double offset_orthogonality = 1e-10;
  double interior_shrink = 1e-9;      // delta in the hexagon / square constructions
  double verdict_slack = 1e-6;        // Pass iff ratio <= bound + verdict_slack
};

inline constexpr Tolerances kDefaultTolerances{};

/// Multi-start Grassmannian search settings.
struct SearchConfig {
  int starts = 64;
  std::uint64_t seed = 0;
  int max_iterations = 400;       // per Nelder-Mead run
  double simplex_diameter = 1e-8; // convergence threshold in chart coordinates
  double initial_step = 0.35;     // initial simplex edge (radians, roughly)
  int restarts = 1;               // restarts at the best point after convergence
};

/// Branch-and-bound settings for certified opposite-side bounds in R^3.
struct CertifyConfig {
  bool enabled = true;
  double relative_gap = 1e-3;   // stop when upper - best <= gap * scale
  int max_evaluations = 6000;
  int initial_grid = 6;         // cells per cube face edge
};

}  // namespace radii
