#include "tempcal/synth.hpp"

#include <cmath>
#include <vector>

#include "tempcal/errors.hpp"
#include "tempcal/random.hpp"

namespace tempcal {

void SynthConfig::validate() const {
  if (n_samples < 1) throw DomainError("synth: n_samples must be >= 1");
  if (n_classes < 2) throw DomainError("synth: n_classes must be >= 2");
  if (!(std::isfinite(true_temperature) && true_temperature > 0.0)) {
    throw DomainError("synth: true temperature must be finite and > 0");
  }
  if (!(std::isfinite(logit_scale) && logit_scale > 0.0)) {
    throw DomainError("synth: logit scale must be finite and > 0");
  }
}

LogitDataset generate(const SynthConfig& cfg) {
  cfg.validate();
  const std::size_t n = cfg.n_samples;
  const std::size_t k = cfg.n_classes;
  Rng rng(cfg.seed);

  std::vector<double> observed(n * k);
  std::vector<ClassId> labels(n);
  std::vector<double> z(k);
  std::vector<double> cdf(k);
  for (std::size_t i = 0; i < n; ++i) {
    double m = -INFINITY;
    for (std::size_t j = 0; j < k; ++j) {
      z[j] = cfg.logit_scale * rng.normal();
      m = std::max(m, z[j]);
    }
    double total = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      total += std::exp(z[j] - m);
      cdf[j] = total;
    }
    const double u = rng.uniform() * total;
    ClassId y = k - 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (u < cdf[j]) {
        y = j;
        break;
      }
    }
    labels[i] = y;
    for (std::size_t j = 0; j < k; ++j) {
      observed[i * k + j] = cfg.true_temperature * z[j];
    }
  }
  return LogitDataset(Matrix(n, k, std::move(observed)), std::move(labels));
}

}  // namespace tempcal
