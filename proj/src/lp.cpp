#include "radii/lp.hpp"

#include "radii/errors.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

namespace radii {

namespace {

constexpr int kIterationCap = 100000;

// Tableau over columns [structural | artificial], last column holds the rhs.
class Tableau {
 public:
  Tableau(const StandardLP& p, double tol) : tol_(tol), m_(static_cast<int>(p.a.rows())), n_(static_cast<int>(p.a.cols())) {
    // Rows with negative rhs are flipped so b >= 0.
    Eigen::MatrixXd a = p.a;
    Eigen::VectorXd b = p.b;
    for (int r = 0; r < m_; ++r) {
      if (b(r) < 0) {
        a.row(r) *= -1.0;
        b(r) *= -1.0;
      }
    }
    // Reuse unit columns as the starting basis where possible.
    basis_.assign(static_cast<std::size_t>(m_), -1);
    std::vector<char> used(static_cast<std::size_t>(n_), 0);
    for (int j = 0; j < n_; ++j) {
      int hit = -1;
      bool unit = true;
      for (int r = 0; r < m_ && unit; ++r) {
        const double v = a(r, j);
        if (v == 0.0) continue;
        if (v == 1.0 && hit < 0) {
          hit = r;
        } else {
          unit = false;
        }
      }
      if (unit && hit >= 0 && basis_[static_cast<std::size_t>(hit)] < 0) {
        basis_[static_cast<std::size_t>(hit)] = j;
        used[static_cast<std::size_t>(j)] = 1;
      }
    }
    artificial_rows_.clear();
    for (int r = 0; r < m_; ++r) {
      if (basis_[static_cast<std::size_t>(r)] < 0) artificial_rows_.push_back(r);
    }
    n_art_ = static_cast<int>(artificial_rows_.size());
    t_ = Eigen::MatrixXd::Zero(m_ + 1, n_ + n_art_ + 1);
    t_.block(0, 0, m_, n_) = a;
    t_.block(0, n_ + n_art_, m_, 1) = b;
    for (int k = 0; k < n_art_; ++k) {
      const int r = artificial_rows_[static_cast<std::size_t>(k)];
      t_(r, n_ + k) = 1.0;
      basis_[static_cast<std::size_t>(r)] = n_ + k;
    }
    allowed_ = n_ + n_art_;
    in_basis_.assign(static_cast<std::size_t>(n_ + n_art_), 0);
    for (int bj : basis_) in_basis_[static_cast<std::size_t>(bj)] = 1;
  }

  int rhs_col() const { return n_ + n_art_; }

  // Objective row holds reduced costs d_j = c_j - c_B B^{-1} A_j (negated storage: row m_ = -d).
  void set_objective(const Eigen::VectorXd& cost_full) {
    t_.row(m_).setZero();
    for (int j = 0; j < n_ + n_art_; ++j) t_(m_, j) = -cost_full(j);
    for (int r = 0; r < m_; ++r) {
      const int bj = basis_[static_cast<std::size_t>(r)];
      const double cb = cost_full(bj);
      if (cb != 0.0) t_.row(m_) += cb * t_.row(r);
    }
  }

  // Returns false when unbounded.
  bool optimize(bool& hit_cap) {
    for (int iter = 0; iter < kIterationCap; ++iter) {
      int enter = -1;
      for (int j = 0; j < allowed_; ++j) {
        if (is_basic(j)) continue;
        if (-t_(m_, j) > tol_) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int r = 0; r < m_; ++r) {
        const double coef = t_(r, enter);
        if (coef <= tol_) continue;
        const double ratio = t_(r, rhs_col()) / coef;
        if (leave < 0 || ratio < best - 1e-14 ||
            (std::abs(ratio - best) <= 1e-14 && basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(leave)])) {
          best = ratio;
          leave = r;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
    hit_cap = true;
    return true;
  }

  void pivot(int row, int col) {
    t_.row(row) /= t_(row, col);
    for (int r = 0; r <= m_; ++r) {
      if (r == row) continue;
      const double f = t_(r, col);
      if (f != 0.0) t_.row(r) -= f * t_.row(row);
    }
    in_basis_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(row)])] = 0;
    in_basis_[static_cast<std::size_t>(col)] = 1;
    basis_[static_cast<std::size_t>(row)] = col;
  }

  bool is_basic(int j) const { return in_basis_[static_cast<std::size_t>(j)] != 0; }

  // After phase one: pivot artificials out of the basis or drop redundant rows.
  void expel_artificials() {
    for (int r = 0; r < m_; ++r) {
      if (basis_[static_cast<std::size_t>(r)] < n_) continue;
      int col = -1;
      for (int j = 0; j < n_; ++j) {
        if (!is_basic(j) && std::abs(t_(r, j)) > tol_) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        pivot(r, col);
      } else {
        // Redundant equality: keep the artificial basic at zero; it can never re-enter.
        t_.row(r).setZero();
      }
    }
    allowed_ = n_;
  }

  double objective_value() const { return t_(m_, rhs_col()); }
  const std::vector<int>& basis() const { return basis_; }
  int n_art() const { return n_art_; }

  Eigen::VectorXd solution() const {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n_);
    for (int r = 0; r < m_; ++r) {
      const int bj = basis_[static_cast<std::size_t>(r)];
      if (bj < n_) x(bj) = t_(r, rhs_col());
    }
    return x;
  }

 private:
  double tol_;
  int m_;
  int n_;
  int n_art_ = 0;
  int allowed_ = 0;
  Eigen::MatrixXd t_;
  std::vector<int> basis_;
  std::vector<char> in_basis_;
  std::vector<int> artificial_rows_;
};

}  // namespace

LpSolution solve_standard_lp(const StandardLP& problem, double tol) {
  if (problem.a.rows() != problem.b.size() || problem.a.cols() != problem.c.size()) {
    fail(ErrorKind::DimensionMismatch, "inconsistent LP dimensions");
  }
  LpSolution out;
  Tableau tab(problem, tol);
  const int n = static_cast<int>(problem.a.cols());
  bool hit_cap = false;
  if (tab.n_art() > 0) {
    Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n + tab.n_art());
    phase1.tail(tab.n_art()).setConstant(-1.0);
    tab.set_objective(phase1);
    tab.optimize(hit_cap);
    const double scale = std::max(1.0, problem.b.cwiseAbs().maxCoeff());
    if (tab.objective_value() < -tol * scale * 10.0) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    tab.expel_artificials();
  }
  Eigen::VectorXd cost = Eigen::VectorXd::Zero(n + tab.n_art());
  cost.head(n) = problem.c;
  tab.set_objective(cost);
  if (!tab.optimize(hit_cap)) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.argmax = tab.solution();
  out.basis = tab.basis();
  out.optimum = problem.c.dot(out.argmax);
  return out;
}

namespace {

// Few variables, many rows: solve the dual  min b.y, A^T y = c, y >= 0  whose
// tableau has only d rows, then read x off the d tight constraints of the
// optimal basis. Returns nullopt whenever the shortcut is not conclusive.
std::optional<LpSolution> solve_via_dual(const LPProblem& problem, double tol) {
  const int d = problem.variables();
  const int m = problem.rows();
  StandardLP dual;
  dual.a = problem.constraints.transpose();
  dual.b = problem.objective;
  dual.c = -problem.offsets;
  const LpSolution s = solve_standard_lp(dual, tol);
  if (s.status != LpStatus::Optimal) return std::nullopt;
  Eigen::MatrixXd tight(d, d);
  Eigen::VectorXd rhs(d);
  for (int r = 0; r < d; ++r) {
    const int j = s.basis[static_cast<std::size_t>(r)];
    if (j < 0 || j >= m) return std::nullopt;
    tight.row(r) = problem.constraints.row(j);
    rhs(r) = problem.offsets(j);
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(tight);
  if (!lu.isInvertible()) return std::nullopt;
  Eigen::VectorXd x = lu.solve(rhs);
  const double scale = std::max(1.0, problem.offsets.cwiseAbs().maxCoeff());
  if (!x.allFinite() || ((problem.constraints * x - problem.offsets).array() > 10.0 * tol * scale).any()) return std::nullopt;
  LpSolution out;
  out.status = LpStatus::Optimal;
  out.optimum = problem.objective.dot(x);
  out.argmax = std::move(x);
  return out;
}

}  // namespace

LpSolution solve_lp_status(const LPProblem& problem, double tol) {
  const int d = problem.variables();
  const int m = problem.rows();
  if (problem.constraints.cols() != d || problem.offsets.size() != m) {
    fail(ErrorKind::DimensionMismatch, "inconsistent LP dimensions");
  }
  if (m > 2 * d) {
    if (auto s = solve_via_dual(problem, tol)) return *s;
  }
  // x = x+ - x-, slack s >= 0: [A, -A, I] (x+, x-, s) = b.
  StandardLP std_form;
  std_form.a = Eigen::MatrixXd::Zero(m, 2 * d + m);
  std_form.a.leftCols(d) = problem.constraints;
  std_form.a.middleCols(d, d) = -problem.constraints;
  std_form.a.rightCols(m).setIdentity();
  std_form.b = problem.offsets;
  std_form.c = Eigen::VectorXd::Zero(2 * d + m);
  std_form.c.head(d) = problem.objective;
  std_form.c.segment(d, d) = -problem.objective;
  LpSolution s = solve_standard_lp(std_form, tol);
  if (s.status != LpStatus::Optimal) return s;
  LpSolution out;
  out.status = LpStatus::Optimal;
  out.argmax = s.argmax.head(d) - s.argmax.segment(d, d);
  out.optimum = problem.objective.dot(out.argmax);
  return out;
}

std::pair<double, Eigen::VectorXd> solve_lp(const LPProblem& problem, double tol) {
  LpSolution s = solve_lp_status(problem, tol);
  if (s.status == LpStatus::Infeasible) fail(ErrorKind::Infeasible, "linear program has no feasible point");
  if (s.status == LpStatus::Unbounded) fail(ErrorKind::Unbounded, "linear program is unbounded");
  return {s.optimum, s.argmax};
}

}  // namespace radii
