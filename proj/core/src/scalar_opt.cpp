#include "tempcal/scalar_opt.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "tempcal/errors.hpp"

namespace tempcal {

void OptimizerConfig::validate() const {
  if (!(std::isfinite(t_min) && t_min > 0.0)) {
    throw DomainError("t_min must be finite and > 0");
  }
  if (!(std::isfinite(t_max) && t_max > t_min)) {
    throw DomainError("t_max must be finite and > t_min");
  }
  if (grid_points < 3) {
    throw DomainError("grid_points must be at least 3");
  }
  if (!(std::isfinite(refine_tol) && refine_tol > 0.0)) {
    throw DomainError("refine_tol must be finite and > 0");
  }
}

std::vector<double> log_spaced_grid(const OptimizerConfig& cfg) {
  cfg.validate();
  const double lo = std::log(cfg.t_min);
  const double hi = std::log(cfg.t_max);
  const auto steps = static_cast<double>(cfg.grid_points - 1);
  std::vector<double> grid(cfg.grid_points);
  for (std::size_t i = 0; i < cfg.grid_points; ++i) {
    grid[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) / steps);
  }
  // Pin the endpoints exactly; exp(log(x)) need not round-trip.
  grid.front() = cfg.t_min;
  grid.back() = cfg.t_max;
  return grid;
}

ScalarMinimum minimize_scalar(const std::function<double(double)>& f,
                              const OptimizerConfig& cfg) {
  const std::vector<double> grid = log_spaced_grid(cfg);
  ScalarMinimum out;

  auto eval = [&](double t) {
    double v = f(t);
    out.trace.push_back({t, v});
    ++out.evaluations;
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };

  std::vector<double> bad;
  std::size_t best = 0;
  double best_f = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = eval(grid[i]);
    if (std::isinf(v)) bad.push_back(grid[i]);
    if (v < best_f) {
      best_f = v;
      best = i;
    }
  }
  if (2 * bad.size() > grid.size()) {
    std::ostringstream msg;
    msg.precision(6);
    msg << "objective is non-finite on " << bad.size() << " of " << grid.size()
        << " grid points; T =";
    constexpr std::size_t kShown = 20;
    for (std::size_t i = 0; i < bad.size() && i < kShown; ++i) {
      msg << ' ' << bad[i];
    }
    if (bad.size() > kShown) msg << " ... (" << bad.size() - kShown << " more)";
    throw OptimizationError(msg.str());
  }

  // Golden section inside the grid neighbours of the best grid point.
  double a = grid[best == 0 ? 0 : best - 1];
  double b = grid[best + 1 == grid.size() ? best : best + 1];
  double t_star = grid[best];
  double f_star = best_f;

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = eval(x1);
  double f2 = eval(x2);
  for (std::size_t iter = 0; iter < cfg.max_refine_iters && b - a > cfg.refine_tol;
       ++iter) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = eval(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = eval(x2);
    }
    out.bracket_widths.push_back(b - a);
  }
  // Best refined point; never worse than the best grid point.
  if (f1 < f_star) {
    t_star = x1;
    f_star = f1;
  }
  if (f2 < f_star) {
    t_star = x2;
    f_star = f2;
  }

  out.t_star = t_star;
  out.f_star = f_star;
  if (t_star - cfg.t_min <= cfg.refine_tol || cfg.t_max - t_star <= cfg.refine_tol) {
    out.at_boundary = true;
    std::ostringstream msg;
    msg << "minimizer T = " << t_star << " lies on the search bracket ["
        << cfg.t_min << ", " << cfg.t_max << "]; widen t_min/t_max";
    out.warnings.push_back(msg.str());
  }
  return out;
}

}  // namespace tempcal
