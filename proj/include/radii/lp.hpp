#pragma once

#include <Eigen/Dense>

#include <span>
#include <utility>
#include <vector>

namespace radii {

/// maximize objective . x  subject to  constraints * x <= offsets, x free.
struct LPProblem {
  Eigen::VectorXd objective;
  Eigen::MatrixXd constraints;  // one row per half-space
  Eigen::VectorXd offsets;

  int variables() const { return static_cast<int>(objective.size()); }
  int rows() const { return static_cast<int>(constraints.rows()); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double optimum = 0.0;
  Eigen::VectorXd argmax;
  std::vector<int> basis;  // basic column per row (standard form only; >= cols means artificial)
};

/// Equality standard form: maximize c.x subject to A x = b, x >= 0.
struct StandardLP {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
};

/// Two-phase dense tableau simplex with Bland's rule. The returned point is a
/// basic solution: at most rows() entries are nonzero.
LpSolution solve_standard_lp(const StandardLP& problem, double tol = 1e-9);

/// Non-throwing solve of the inequality form.
LpSolution solve_lp_status(const LPProblem& problem, double tol = 1e-9);

/// Throws Infeasible / Unbounded.
std::pair<double, Eigen::VectorXd> solve_lp(const LPProblem& problem, double tol = 1e-9);

}  // namespace radii
