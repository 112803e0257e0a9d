#pragma once

// Domain types shared across the library and the tempered softmax transform.
//
// A classifier's raw pre-softmax scores ("logits") for N inputs over K classes
// are held in a LogitDataset. Dividing every logit by a single temperature
// T > 0 before the softmax rescales confidences without changing which class
// wins, which is the property every calibration routine here builds on.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace tempcal {

using ClassId = std::size_t;

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  std::span<const double> values() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// N x K logits with an optional label per row.
///
/// Construction validates: N >= 1, K >= 2, every logit finite, and every
/// label (when present) in [0, K). Instances are immutable afterwards.
class LogitDataset {
 public:
  explicit LogitDataset(Matrix logits,
                        std::optional<std::vector<ClassId>> labels = std::nullopt);

  const Matrix& logits() const noexcept { return logits_; }
  const std::optional<std::vector<ClassId>>& labels() const noexcept {
    return labels_;
  }
  bool has_labels() const noexcept { return labels_.has_value(); }

  /// Labels, or UsageError if the dataset is unlabelled.
  std::span<const ClassId> require_labels() const;

  std::size_t n_samples() const noexcept { return logits_.rows(); }
  std::size_t n_classes() const noexcept { return logits_.cols(); }

  /// Same logits with the label vector dropped.
  LogitDataset without_labels() const;

  /// Rows at the given indices, in the given order.
  LogitDataset select(std::span<const std::size_t> indices) const;

 private:
  Matrix logits_;
  std::optional<std::vector<ClassId>> labels_;
};

enum class Method { kTs, kUts, kFixed };

std::string_view to_string(Method method);
/// Inverse of to_string; DataError on unknown names.
Method method_from_string(std::string_view name);

/// A strictly positive temperature plus how it was obtained.
struct Temperature {
  double value = 1.0;
  Method method = Method::kFixed;
  double loss_at_optimum = 0.0;
  std::size_t evaluations = 0;

  /// A user-supplied temperature. DomainError unless value is finite and > 0.
  static Temperature fixed(double value);

  /// Throws DomainError when the invariants do not hold.
  void validate() const;
};

/// Row-stochastic softmax output and the temperature used to produce it.
struct ConfidenceMatrix {
  Matrix probs;
  double temperature_used = 1.0;

  std::size_t n_samples() const noexcept { return probs.rows(); }
  std::size_t n_classes() const noexcept { return probs.cols(); }
};

struct Prediction {
  ClassId predicted_class = 0;
  double confidence = 0.0;

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

/// Index of the largest entry; ties go to the lowest index.
std::size_t argmax(std::span<const double> row);

/// log-sum-exp of row / T, computed with max subtraction.
double tempered_log_normalizer(std::span<const double> row, double temperature);

/// log S_k(x, T) for one row: row[k] / T - logsumexp(row / T).
double tempered_log_softmax(std::span<const double> row, double temperature,
                            ClassId k);

/// S(x, T) = softmax(h / T) for every row.
///
/// Throws DataError on a non-finite logit and DomainError unless T is finite
/// and positive.
ConfidenceMatrix tempered_softmax(const Matrix& logits, double temperature);
ConfidenceMatrix tempered_softmax(const LogitDataset& data, double temperature);
ConfidenceMatrix tempered_softmax(const LogitDataset& data,
                                  const Temperature& temperature);

/// Argmax class and its probability for every row.
std::vector<Prediction> predict(const ConfidenceMatrix& probs);

}  // namespace tempcal
