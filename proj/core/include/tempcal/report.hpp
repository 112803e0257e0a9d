#pragma once

// Calibration reports and their JSON encoding.
//
// JSON output is deterministic: keys appear in a fixed order and doubles are
// written in shortest round-trip form, so identical inputs produce identical
// bytes. Every document carries "schema": 1.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tempcal/core.hpp"
#include "tempcal/fit.hpp"
#include "tempcal/metrics.hpp"
#include "tempcal/uts.hpp"

namespace tempcal {

inline constexpr int kReportSchemaVersion = 1;

struct UtsAuditEntry {
  ClassId class_id = 0;
  double threshold = 0.0;
  std::size_t subset_size = 0;
  std::size_t complement_size = 0;

  friend bool operator==(const UtsAuditEntry&, const UtsAuditEntry&) = default;
};

std::vector<UtsAuditEntry> make_uts_audit(const ClassSubsets& subsets);

/// Accuracy, NLL, ECE and the reliability table at one temperature.
/// A Fixed temperature of 1.0 describes the uncalibrated model.
struct CalibrationReport {
  std::size_t n_samples = 0;
  std::size_t n_classes = 0;
  double accuracy = 0.0;
  double nll_mean = 0.0;
  double nll_sum = 0.0;
  std::size_t nll_clamped = 0;
  double ece_fraction = 0.0;
  double ece_percent = 0.0;
  std::size_t n_bins = kDefaultBins;
  Temperature temperature;
  std::vector<ReliabilityBin> bins;
  std::vector<std::string> warnings;
  std::optional<std::vector<UtsAuditEntry>> uts_audit;

  MetricReportRow row() const {
    return {nll_mean, ece_fraction, ece_percent, accuracy};
  }
};

/// Applies `temperature` to labelled data and measures the result.
CalibrationReport evaluate(const LogitDataset& data, const Temperature& temperature,
                           std::size_t n_bins = kDefaultBins);

std::string report_to_json(const CalibrationReport& report);
/// DataError on malformed input or an unsupported schema version.
CalibrationReport report_from_json(const std::string& text);

/// JSON document for a fitted temperature. `subsets` adds the UTS audit.
std::string fit_to_json(const CalibrationFit& fit, std::size_t n_samples,
                        std::size_t n_classes,
                        const ClassSubsets* subsets = nullptr);
/// The temperature block of a fit document (or of a report).
Temperature temperature_from_json(const std::string& text);
/// The UTS audit of a fit or report document, if it has one.
std::optional<std::vector<UtsAuditEntry>> uts_audit_from_json(const std::string& text);

}  // namespace tempcal
