#include "radii/grassmann_search.hpp"

#include "radii/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace radii {

namespace {

double simplex_diameter(const std::vector<std::vector<double>>& pts) {
  double d = 0.0;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      double s = 0.0;
      for (std::size_t k = 0; k < pts[a].size(); ++k) s += (pts[a][k] - pts[b][k]) * (pts[a][k] - pts[b][k]);
      d = std::max(d, std::sqrt(s));
    }
  }
  return d;
}

NelderMeadResult nm_run(const std::function<double(std::span<const double>)>& f, const std::vector<double>& x0, double step,
                        int max_iterations, double diameter_tol) {
  const std::size_t dim = x0.size();
  std::vector<std::vector<double>> pts(dim + 1, x0);
  std::vector<double> vals(dim + 1);
  for (std::size_t k = 0; k < dim; ++k) pts[k + 1][k] += step;
  for (std::size_t k = 0; k <= dim; ++k) vals[k] = f(pts[k]);

  std::vector<std::size_t> idx(dim + 1);
  std::vector<double> centroid(dim), trial(dim), trial2(dim);
  NelderMeadResult out;
  auto point_along = [&](double t, std::vector<double>& dst, std::size_t worst) {
    for (std::size_t k = 0; k < dim; ++k) dst[k] = centroid[k] + t * (pts[worst][k] - centroid[k]);
  };
  int it = 0;
  for (; it < max_iterations; ++it) {
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    if (simplex_diameter(pts) < diameter_tol) {
      out.converged = true;
      break;
    }
    const std::size_t best = idx.front();
    const std::size_t worst = idx.back();
    const std::size_t second = idx[dim - 1];
    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t k = 0; k <= dim; ++k) {
      if (k == worst) continue;
      for (std::size_t c = 0; c < dim; ++c) centroid[c] += pts[k][c] / static_cast<double>(dim);
    }
    point_along(-1.0, trial, worst);
    const double fr = f(trial);
    if (fr < vals[best]) {
      point_along(-2.0, trial2, worst);
      const double fe = f(trial2);
      if (fe < fr) {
        pts[worst] = trial2;
        vals[worst] = fe;
      } else {
        pts[worst] = trial;
        vals[worst] = fr;
      }
    } else if (fr < vals[second]) {
      pts[worst] = trial;
      vals[worst] = fr;
    } else {
      const bool outside = fr < vals[worst];
      point_along(outside ? -0.5 : 0.5, trial2, worst);
      const double fc = f(trial2);
      if (fc < (outside ? fr : vals[worst])) {
        pts[worst] = trial2;
        vals[worst] = fc;
      } else {
        for (std::size_t k = 0; k <= dim; ++k) {
          if (k == best) continue;
          for (std::size_t c = 0; c < dim; ++c) pts[k][c] = pts[best][c] + 0.5 * (pts[k][c] - pts[best][c]);
          vals[k] = f(pts[k]);
        }
      }
    }
  }
  const auto best = static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
  out.x = pts[best];
  out.value = vals[best];
  out.iterations = it;
  return out;
}

// Lexicographically smallest k-subsets of {0..n-1}.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(idx);
    int j = k - 1;
    while (j >= 0 && idx[static_cast<std::size_t>(j)] == n - k + j) --j;
    if (j < 0) break;
    ++idx[static_cast<std::size_t>(j)];
    for (int t = j + 1; t < k; ++t) idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
  }
  return out;
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f, std::vector<double> x0, double step,
                             int max_iterations, double diameter_tol, int restarts) {
  if (x0.empty()) {
    NelderMeadResult out;
    out.value = f(x0);
    out.converged = true;
    return out;
  }
  NelderMeadResult best = nm_run(f, x0, step, max_iterations, diameter_tol);
  int total = best.iterations;
  for (int r = 0; r < restarts; ++r) {
    NelderMeadResult again = nm_run(f, best.x, step * 0.1, max_iterations, diameter_tol);
    total += again.iterations;
    const bool conv = again.converged;
    if (again.value <= best.value) best = std::move(again);
    best.converged = conv;
  }
  best.iterations = total;
  return best;
}

bool frame_lex_less(const Frame& a, const Frame& b) {
  const Matrix& x = a.columns();
  const Matrix& y = b.columns();
  for (Eigen::Index c = 0; c < x.cols(); ++c) {
    for (Eigen::Index r = 0; r < x.rows(); ++r) {
      if (x(r, c) != y(r, c)) return x(r, c) < y(r, c);
    }
  }
  return false;
}

std::vector<Frame> start_frames(int n, int i, int starts, std::uint64_t key) {
  std::vector<Frame> out;
  for (const auto& axes : subsets(n, i)) {
    if (static_cast<int>(out.size()) >= starts) return out;
    out.push_back(Frame::coordinate(n, axes));
  }
  for (int k = static_cast<int>(out.size()); k < starts; ++k) {
    const CounterRng rng(mix64(key ^ (static_cast<std::uint64_t>(i) << 32)), static_cast<std::uint64_t>(k));
    std::uint64_t counter = 0;
    while (true) {
      PointSet cols;
      for (int c = 0; c < i; ++c) {
        Vector v(n);
        for (int r = 0; r < n; ++r) v(r) = rng.gaussian(counter++);
        cols.push_back(v);
      }
      if (smallest_singular_value([&] {
            Matrix m(n, i);
            for (int c = 0; c < i; ++c) m.col(c) = cols[static_cast<std::size_t>(c)];
            return m;
          }()) > 1e-6) {
        out.push_back(orthonormalize(cols));
        break;
      }
    }
  }
  return out;
}

GrassmannResult grassmann_search(int n, int i, Goal goal, const std::function<double(const Frame&)>& objective,
                                 const SearchConfig& config, std::uint64_t key, const StartHints& hints) {
  const double sign = goal == Goal::Minimize ? 1.0 : -1.0;
  const std::vector<Frame> starts = start_frames(n, i, std::max(1, config.starts), key);
  GrassmannResult result{starts.front(), 0.0, 0, true, {}};
  bool have = false;
  auto better = [&](double v, const Frame& f, double cur, const Frame& cur_f) {
    const double a = sign * v;
    const double b = sign * cur;
    return a < b || (a == b && frame_lex_less(f, cur_f));
  };
  for (std::size_t s = 0; s < starts.size(); ++s) {
    const Frame& base = starts[s];
    const Matrix comp = base.complement();
    auto chart = [&](std::span<const double> p) { return frame_from_chart(base, comp, p); };
    auto f = [&](std::span<const double> p) { return sign * objective(chart(p)); };
    const std::size_t dim = static_cast<std::size_t>(i * (n - i));
    NelderMeadResult nm = nelder_mead(f, std::vector<double>(dim, 0.0), config.initial_step, config.max_iterations,
                                      config.simplex_diameter, config.restarts);
    Frame best_frame = chart(nm.x);
    double best_value = sign * nm.value;
    if (hints) {
      for (const Frame& h : hints(static_cast<int>(s))) {
        const double v = objective(h);
        if (better(v, h, best_value, best_frame)) {
          best_value = v;
          best_frame = h;
        }
      }
    }
    result.converged = result.converged && nm.converged;
    result.per_start.push_back({best_frame, best_value});
    if (!have || better(best_value, best_frame, result.value, result.frame)) {
      result.value = best_value;
      result.frame = best_frame;
      have = true;
    }
  }
  result.starts_used = static_cast<int>(starts.size());
  return result;
}

}  // namespace radii
