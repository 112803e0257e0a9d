#include "tempcal/ts.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tempcal/errors.hpp"

namespace tempcal {

double ts_objective(const LogitDataset& data, double temperature) {
  if (!std::isfinite(temperature) || temperature <= 0.0) {
    throw DomainError("temperature must be finite and > 0");
  }
  const auto labels = data.require_labels();
  const Matrix& logits = data.logits();
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.rows(); ++i) {
    sum -= tempered_log_softmax(logits.row(i), temperature, labels[i]);
  }
  return sum;
}

CalibrationFit fit_ts(const LogitDataset& data, const OptimizerConfig& cfg) {
  const auto labels = data.require_labels();
  if (data.n_samples() < 2) {
    throw DataError("temperature scaling needs at least 2 labelled samples");
  }
  cfg.validate();

  CalibrationFit fit;
  fit.config = cfg;
  if (std::all_of(labels.begin(), labels.end(),
                  [&](ClassId y) { return y == labels.front(); })) {
    fit.warnings.push_back("all calibration labels are class " +
                           std::to_string(labels.front()));
  }

  ScalarMinimum m = minimize_scalar(
      [&](double t) { return ts_objective(data, t); }, cfg);
  fit.temperature = {m.t_star, Method::kTs, m.f_star, m.evaluations};
  fit.trace = std::move(m.trace);
  fit.warnings.insert(fit.warnings.end(), m.warnings.begin(), m.warnings.end());
  return fit;
}

}  // namespace tempcal
