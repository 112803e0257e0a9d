#include "tempcal/uts.hpp"

#include <cmath>
#include <string>

#include "tempcal/errors.hpp"

namespace tempcal {

ClassThresholds compute_thresholds(const ConfidenceMatrix& probs) {
  const std::size_t n = probs.n_samples();
  const std::size_t k_count = probs.n_classes();

  std::vector<std::size_t> predicted(n);
  for (std::size_t i = 0; i < n; ++i) predicted[i] = argmax(probs.probs.row(i));

  ClassThresholds out;
  out.values.resize(k_count);
  out.complement_sizes.resize(k_count);
  for (std::size_t k = 0; k < k_count; ++k) {
    std::size_t count = 0;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (predicted[i] != k) {
        sum += probs.probs(i, k);
        ++count;
      }
    }
    const bool fallback = count == 0;
    if (fallback) {
      out.warnings.push_back("class " + std::to_string(k) +
                             ": every sample is predicted as this class; "
                             "threshold uses all samples");
      for (std::size_t i = 0; i < n; ++i) sum += probs.probs(i, k);
      count = n;
    }
    const double mean = sum / static_cast<double>(count);
    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (fallback || predicted[i] != k) {
        const double d = mean - probs.probs(i, k);
        sq += d * d;
      }
    }
    out.values[k] = mean + std::sqrt(sq / static_cast<double>(count));
    out.complement_sizes[k] = count;
  }
  return out;
}

std::size_t ClassSubsets::active_classes() const {
  std::size_t active = 0;
  for (const auto& m : subsets) active += m.empty() ? 0 : 1;
  return active;
}

ClassSubsets build_subsets(const ConfidenceMatrix& probs,
                           const ClassThresholds& thresholds) {
  const std::size_t k_count = probs.n_classes();
  if (thresholds.values.size() != k_count) {
    throw DataError("got " + std::to_string(thresholds.values.size()) +
                    " thresholds for " + std::to_string(k_count) + " classes");
  }
  ClassSubsets out;
  out.thresholds = thresholds.values;
  out.complement_sizes = thresholds.complement_sizes;
  out.warnings = thresholds.warnings;
  out.subsets.resize(k_count);
  for (std::size_t k = 0; k < k_count; ++k) {
    auto& m = out.subsets[k];
    for (std::size_t i = 0; i < probs.n_samples(); ++i) {
      if (probs.probs(i, k) >= thresholds.values[k]) m.push_back(i);
    }
    if (m.empty()) {
      out.warnings.push_back("class " + std::to_string(k) +
                             ": no sample reaches the threshold; class skipped");
    }
  }
  return out;
}

double uts_loss(const LogitDataset& data, const ClassSubsets& subsets,
                double temperature) {
  if (!std::isfinite(temperature) || temperature <= 0.0) {
    throw DomainError("temperature must be finite and > 0");
  }
  if (subsets.n_classes() != data.n_classes()) {
    throw DataError("subsets were built for a different number of classes");
  }
  const Matrix& logits = data.logits();

  // Samples appear in several subsets; compute each normalizer once.
  std::vector<double> log_norm(logits.rows(), NAN);
  double loss = 0.0;
  for (std::size_t k = 0; k < subsets.n_classes(); ++k) {
    for (std::size_t i : subsets.subsets[k]) {
      if (i >= logits.rows()) {
        throw DataError("subset index " + std::to_string(i) + " out of range");
      }
      if (std::isnan(log_norm[i])) {
        log_norm[i] = tempered_log_normalizer(logits.row(i), temperature);
      }
      loss -= logits(i, k) / temperature - log_norm[i];
    }
  }
  return loss;
}

UtsFit fit_uts(const LogitDataset& data, const OptimizerConfig& cfg) {
  cfg.validate();
  UtsFit out;
  out.fit.config = cfg;
  if (data.n_samples() < data.n_classes()) {
    out.fit.warnings.push_back(
        "fewer samples (" + std::to_string(data.n_samples()) + ") than classes (" +
        std::to_string(data.n_classes()) + "); thresholds will be noisy");
  }

  const ConfidenceMatrix base = tempered_softmax(data.logits(), 1.0);
  out.subsets = build_subsets(base, compute_thresholds(base));
  out.fit.warnings.insert(out.fit.warnings.end(), out.subsets.warnings.begin(),
                          out.subsets.warnings.end());
  if (out.subsets.active_classes() == 0) {
    throw OptimizationError("every class subset is empty; UTS loss is undefined");
  }

  const ClassSubsets& frozen = out.subsets;
  ScalarMinimum m = minimize_scalar(
      [&](double t) { return uts_loss(data, frozen, t); }, cfg);
  out.fit.temperature = {m.t_star, Method::kUts, m.f_star, m.evaluations};
  out.fit.trace = std::move(m.trace);
  out.fit.warnings.insert(out.fit.warnings.end(), m.warnings.begin(),
                          m.warnings.end());
  return out;
}

}  // namespace tempcal
