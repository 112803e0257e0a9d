#pragma once

// Unsupervised temperature scaling.
//
// Labels are never read. For each class k a threshold theta_k is set from the
// class-k confidences of the samples the model does NOT predict as k (their
// mean plus population standard deviation). M_k collects every sample whose
// class-k confidence reaches theta_k: mostly samples predicted as k, plus
// samples near the decision boundary of k. The temperature minimizes
//
//   L(T) = sum_k sum_{i in M_k} -log S_k(x_i, T)
//
// with the subsets built once from the T = 1 confidences and held fixed while
// T varies.

#include <cstddef>
#include <string>
#include <vector>

#include "tempcal/core.hpp"
#include "tempcal/fit.hpp"
#include "tempcal/scalar_opt.hpp"

namespace tempcal {

struct ClassThresholds {
  std::vector<double> values;                // theta_k
  std::vector<std::size_t> complement_sizes; // |U_k| actually used
  std::vector<std::string> warnings;
};

/// theta_k = mean + population std of S_k over U_k = {i : predicted(i) != k}.
///
/// `probs` should be the T = 1 confidences. When U_k is empty (every sample is
/// predicted as k) the statistics fall back to all N samples and a warning is
/// recorded; complement_sizes[k] is then N.
ClassThresholds compute_thresholds(const ConfidenceMatrix& probs);

struct ClassSubsets {
  std::vector<double> thresholds;
  /// Per class, ascending sample indices with S_k >= theta_k. Subsets may
  /// overlap across classes.
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> complement_sizes;
  std::vector<std::string> warnings;

  std::size_t n_classes() const noexcept { return subsets.size(); }
  /// Number of classes with a non-empty subset.
  std::size_t active_classes() const;
};

/// M_k = {i : S_k(x_i) >= theta_k}. Empty subsets add a warning; the class
/// then drops out of the loss.
ClassSubsets build_subsets(const ConfidenceMatrix& probs,
                           const ClassThresholds& thresholds);

/// UTS loss at temperature T for frozen subsets. Accumulated class-major in
/// ascending sample order.
double uts_loss(const LogitDataset& data, const ClassSubsets& subsets,
                double temperature);

struct UtsFit {
  CalibrationFit fit;
  ClassSubsets subsets;
};

/// Full pipeline: T = 1 softmax, thresholds, subsets, then minimize uts_loss.
///
/// Labels attached to `data` are ignored. Throws OptimizationError when every
/// subset is empty.
UtsFit fit_uts(const LogitDataset& data, const OptimizerConfig& cfg = {});

}  // namespace tempcal
