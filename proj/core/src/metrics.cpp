#include "tempcal/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tempcal/errors.hpp"

namespace tempcal {
namespace {

void check_labels(const ConfidenceMatrix& probs, std::span<const ClassId> labels) {
  if (labels.size() != probs.n_samples()) {
    throw DataError("got " + std::to_string(labels.size()) + " labels for " +
                    std::to_string(probs.n_samples()) + " samples");
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] >= probs.n_classes()) {
      throw DataError("label " + std::to_string(labels[i]) + " at sample " +
                      std::to_string(i) + " is not a valid class id");
    }
  }
}

}  // namespace

NllResult nll(const ConfidenceMatrix& probs, std::span<const ClassId> labels) {
  check_labels(probs, labels);
  NllResult out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    double p = probs.probs(i, labels[i]);
    if (p <= kNllProbabilityFloor) {
      p = kNllProbabilityFloor;
      ++out.clamped;
    }
    out.sum -= std::log(p);
  }
  out.mean = out.sum / static_cast<double>(labels.size());
  return out;
}

EceResult ece(const ConfidenceMatrix& probs, std::span<const ClassId> labels,
              std::size_t n_bins) {
  if (n_bins == 0) {
    throw DomainError("ECE needs at least one bin");
  }
  check_labels(probs, labels);

  const double width = 1.0 / static_cast<double>(n_bins);
  std::vector<double> conf_sum(n_bins, 0.0);
  std::vector<std::size_t> correct(n_bins, 0);
  EceResult out;
  out.bins.resize(n_bins);
  for (std::size_t l = 0; l < n_bins; ++l) {
    out.bins[l].index = l;
    out.bins[l].lower = static_cast<double>(l) * width;
    out.bins[l].upper = static_cast<double>(l + 1) * width;
  }
  out.bins.back().upper = 1.0;

  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto row = probs.probs.row(i);
    const std::size_t predicted = argmax(row);
    const double conf = row[predicted];
    auto l = static_cast<std::size_t>(std::floor(conf * static_cast<double>(n_bins)));
    l = std::min(l, n_bins - 1);
    ++out.bins[l].count;
    conf_sum[l] += conf;
    if (predicted == labels[i]) ++correct[l];
  }

  const auto n = static_cast<double>(labels.size());
  for (std::size_t l = 0; l < n_bins; ++l) {
    ReliabilityBin& bin = out.bins[l];
    if (bin.count == 0) continue;
    const auto count = static_cast<double>(bin.count);
    bin.mean_confidence = conf_sum[l] / count;
    bin.accuracy = static_cast<double>(correct[l]) / count;
    out.fraction += count / n * std::abs(bin.accuracy - bin.mean_confidence);
  }
  return out;
}

double accuracy(const ConfidenceMatrix& probs, std::span<const ClassId> labels) {
  check_labels(probs, labels);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (argmax(probs.probs.row(i)) == labels[i]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(labels.size());
}

MetricReportRow metric_row(const ConfidenceMatrix& probs,
                           std::span<const ClassId> labels, std::size_t n_bins) {
  return MetricReportRow::make(nll(probs, labels).mean,
                               ece(probs, labels, n_bins).fraction,
                               accuracy(probs, labels));
}

}  // namespace tempcal
