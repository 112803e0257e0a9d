#pragma once

#include <string>
#include <vector>

#include "tempcal/core.hpp"
#include "tempcal/scalar_opt.hpp"

namespace tempcal {

/// A fitted temperature together with the optimizer trace and any warnings
/// raised while fitting.
struct CalibrationFit {
  Temperature temperature;
  OptimizerConfig config;
  std::vector<TracePoint> trace;
  std::vector<std::string> warnings;
};

}  // namespace tempcal
