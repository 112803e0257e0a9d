#pragma once

// Logit CSV files and calibration/test splitting.
//
// CSV layout: comma separated, '.' decimal point, one sample per line. Each
// line holds K logits, followed by an integer class id when the file is
// labelled. K is taken from the first data line. No header unless requested.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "tempcal/core.hpp"

namespace tempcal {

struct CsvOptions {
  bool has_labels = false;
  bool header = false;  // skip the first line
};

/// Parses logits from a stream. `source` names the input in error messages.
/// DataError on ragged rows, bad numbers (with line and column), or labels
/// outside [0, K).
LogitDataset parse_logits_csv(std::istream& in, const CsvOptions& opts,
                              const std::string& source = "<stream>");

LogitDataset read_logits_csv(const std::filesystem::path& path,
                             const CsvOptions& opts);

/// Writes logits (and labels, when present) with 17 significant digits.
void write_logits_csv(std::ostream& out, const LogitDataset& data);
void write_logits_csv(const std::filesystem::path& path, const LogitDataset& data);

/// Writes one row of probabilities per sample.
void write_probabilities_csv(const std::filesystem::path& path,
                             const ConfidenceMatrix& probs);

/// Writes `contents` to a sibling temporary file, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& contents);

struct SplitResult {
  LogitDataset calibration;
  LogitDataset test;
  std::vector<std::size_t> calibration_indices;  // ascending
  std::vector<std::size_t> test_indices;         // ascending
};

inline constexpr double kDefaultCalibrationFraction = 0.2;

/// Seeded random partition. The first max(1, floor(fraction * N)) indices of
/// a Fisher-Yates shuffle form the calibration set; the rest form the test
/// set. Both keep their rows in original order. DomainError unless
/// 0 < fraction < 1; DataError when N < 2.
SplitResult split(const LogitDataset& data,
                  double calib_fraction = kDefaultCalibrationFraction,
                  std::uint64_t seed = 0);

}  // namespace tempcal
