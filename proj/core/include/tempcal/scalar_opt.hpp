#pragma once

// Bounded one-dimensional minimization over a temperature bracket.
//
// The objective is first scanned on a log-spaced grid, then the best grid
// point's neighbouring interval is refined by golden-section search. No
// derivative or unimodality is assumed beyond that interval.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace tempcal {

struct OptimizerConfig {
  double t_min = 0.05;
  double t_max = 20.0;
  std::size_t grid_points = 200;
  double refine_tol = 1e-4;
  std::size_t max_refine_iters = 200;

  /// DomainError unless 0 < t_min < t_max, grid_points >= 3, refine_tol > 0.
  void validate() const;
};

struct TracePoint {
  double t = 0.0;
  double f = 0.0;
};

struct ScalarMinimum {
  double t_star = 0.0;
  double f_star = 0.0;
  std::size_t evaluations = 0;
  bool at_boundary = false;
  /// Every evaluation in call order: grid first, then refinement.
  std::vector<TracePoint> trace;
  /// Golden-section bracket width after each iteration.
  std::vector<double> bracket_widths;
  std::vector<std::string> warnings;
};

/// `grid_points` values from t_min to t_max, equally spaced in log T.
std::vector<double> log_spaced_grid(const OptimizerConfig& cfg);

/// Minimizes f over [cfg.t_min, cfg.t_max].
///
/// Non-finite objective values are treated as +inf. Throws OptimizationError
/// when more than half of the grid is non-finite. A minimizer within
/// refine_tol of either bound sets `at_boundary` and adds a warning.
ScalarMinimum minimize_scalar(const std::function<double(double)>& f,
                              const OptimizerConfig& cfg = {});

}  // namespace tempcal
