#pragma once

#include "radii/config.hpp"
#include "radii/linalg.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace radii {

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Minimizes f from x0 with an axis-aligned initial simplex of edge `step`.
/// Stops when the simplex diameter drops below `diameter_tol` or after
/// `max_iterations`; then restarts `restarts` times at the best vertex.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f, std::vector<double> x0, double step,
                             int max_iterations, double diameter_tol, int restarts);

enum class Goal { Minimize, Maximize };

struct StartOutcome {
  Frame frame;
  double value;
};

struct GrassmannResult {
  Frame frame;
  double value = 0.0;
  int starts_used = 0;
  bool converged = true;
  std::vector<StartOutcome> per_start;  // best frame of each start, in start order
};

/// Frames the k-th start should additionally evaluate (may be empty).
using StartHints = std::function<std::vector<Frame>(int start)>;

/// The deterministic start frames: all coordinate frames first (lexicographic
/// axis sets), then random frames keyed by (key, i, start index). A budget of
/// s starts is always a prefix of a budget of s' > s starts.
std::vector<Frame> start_frames(int n, int i, int starts, std::uint64_t key);

/// Multi-start Nelder-Mead over i-dimensional subspaces of R^n, parameterized
/// by frame_from_chart around each start. The result is the best value over
/// all starts (ties: lexicographically smallest frame entries).
GrassmannResult grassmann_search(int n, int i, Goal goal, const std::function<double(const Frame&)>& objective,
                                 const SearchConfig& config, std::uint64_t key, const StartHints& hints = {});

/// Strict ordering used for ties between equally good frames.
bool frame_lex_less(const Frame& a, const Frame& b);

}  // namespace radii
