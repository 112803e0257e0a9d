#pragma once

#include <optional>
#include <vector>

#include "oracles.hpp"
#include "tempcal/core.hpp"

namespace testing_helpers {

inline tempcal::Matrix to_matrix(const oracle::Rows& rows) {
  std::vector<double> flat;
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return tempcal::Matrix(rows.size(), rows.front().size(), std::move(flat));
}

inline oracle::Rows to_rows(const tempcal::Matrix& m) {
  oracle::Rows rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    rows.emplace_back(r.begin(), r.end());
  }
  return rows;
}

inline tempcal::LogitDataset dataset(
    const oracle::Rows& rows,
    std::optional<std::vector<std::size_t>> labels = std::nullopt) {
  return tempcal::LogitDataset(to_matrix(rows), std::move(labels));
}

inline tempcal::ConfidenceMatrix probs(const oracle::Rows& rows, double t = 1.0) {
  return {to_matrix(rows), t};
}

}  // namespace testing_helpers
