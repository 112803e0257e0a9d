#pragma once

// Supervised temperature scaling: pick the T that minimizes the negative log
// likelihood of the true labels on a labelled calibration set.

#include "tempcal/core.hpp"
#include "tempcal/fit.hpp"
#include "tempcal/scalar_opt.hpp"

namespace tempcal {

/// -sum_i log S_{y_i}(x_i, T) over the labelled dataset.
double ts_objective(const LogitDataset& data, double temperature);

/// Fits T by minimizing ts_objective over the configured bracket.
///
/// UsageError when labels are missing, DataError when N < 2. A label vector
/// with a single distinct class only adds a warning.
CalibrationFit fit_ts(const LogitDataset& data, const OptimizerConfig& cfg = {});

}  // namespace tempcal
