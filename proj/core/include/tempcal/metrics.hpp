#pragma once

// Calibration measures computed from softmax outputs and true labels.

#include <cstddef>
#include <span>
#include <vector>

#include "tempcal/core.hpp"

namespace tempcal {

/// Probabilities at or below this are clamped before taking the log.
inline constexpr double kNllProbabilityFloor = 1e-300;

inline constexpr std::size_t kDefaultBins = 15;

struct NllResult {
  double sum = 0.0;   // -sum_i log p_i[y_i], ascending sample order
  double mean = 0.0;  // sum / N
  std::size_t clamped = 0;  // samples whose true-label probability hit the floor
};

/// Negative log likelihood of the true labels.
NllResult nll(const ConfidenceMatrix& probs, std::span<const ClassId> labels);

struct ReliabilityBin {
  std::size_t index = 0;
  double lower = 0.0;
  double upper = 0.0;
  std::size_t count = 0;
  double mean_confidence = 0.0;  // 0 when the bin is empty
  double accuracy = 0.0;         // 0 when the bin is empty

  friend bool operator==(const ReliabilityBin&, const ReliabilityBin&) = default;
};

struct EceResult {
  double fraction = 0.0;
  std::vector<ReliabilityBin> bins;
};

/// Expected calibration error over `n_bins` equal-width confidence bins.
///
/// A sample's confidence is its predicted-class probability and lands in bin
/// floor(conf * L), clamped to L - 1 so that conf == 1 is counted. Empty bins
/// contribute nothing. DomainError when n_bins == 0.
EceResult ece(const ConfidenceMatrix& probs, std::span<const ClassId> labels,
              std::size_t n_bins = kDefaultBins);

/// Fraction of rows whose argmax equals the label.
double accuracy(const ConfidenceMatrix& probs, std::span<const ClassId> labels);

/// One row of a calibration table.
struct MetricReportRow {
  double nll = 0.0;  // mean NLL
  double ece_fraction = 0.0;
  double ece_percent = 0.0;
  double accuracy = 0.0;

  static MetricReportRow make(double nll_mean, double ece_fraction,
                              double accuracy) {
    return {nll_mean, ece_fraction, 100.0 * ece_fraction, accuracy};
  }
};

MetricReportRow metric_row(const ConfidenceMatrix& probs,
                           std::span<const ClassId> labels,
                           std::size_t n_bins = kDefaultBins);

}  // namespace tempcal
