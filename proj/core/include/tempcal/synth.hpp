#pragma once

// Synthetic miscalibrated classifier with a known temperature.
//
// Base logits z_i ~ N(0, sigma^2 I) are drawn per sample, the label is drawn
// from softmax(z_i), and the observed logits are T0 * z_i. Dividing the
// observed logits by T0 recovers the true class probabilities exactly, so
// the NLL-optimal temperature tends to T0 as N grows. T0 > 1 gives an
// overconfident model.

#include <cstddef>
#include <cstdint>

#include "tempcal/core.hpp"

namespace tempcal {

struct SynthConfig {
  std::size_t n_samples = 1000;
  std::size_t n_classes = 10;
  double true_temperature = 1.0;
  double logit_scale = 2.0;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Deterministic for a given config. Per sample the stream is consumed as K
/// normals followed by one uniform for the inverse-CDF label draw.
LogitDataset generate(const SynthConfig& cfg);

}  // namespace tempcal
