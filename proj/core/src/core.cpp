#include "tempcal/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tempcal/errors.hpp"

namespace tempcal {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), data_(std::move(values)) {
  if (data_.size() != rows * cols) {
    throw DataError("matrix storage holds " + std::to_string(data_.size()) +
                    " values, expected " + std::to_string(rows * cols));
  }
}

LogitDataset::LogitDataset(Matrix logits,
                           std::optional<std::vector<ClassId>> labels)
    : logits_(std::move(logits)), labels_(std::move(labels)) {
  if (logits_.rows() < 1) {
    throw DataError("dataset needs at least one sample");
  }
  if (logits_.cols() < 2) {
    throw DataError("dataset needs at least two classes, got " +
                    std::to_string(logits_.cols()));
  }
  for (std::size_t i = 0; i < logits_.rows(); ++i) {
    for (std::size_t j = 0; j < logits_.cols(); ++j) {
      if (!std::isfinite(logits_(i, j))) {
        throw DataError("non-finite logit at sample " + std::to_string(i) +
                        ", class " + std::to_string(j));
      }
    }
  }
  if (labels_) {
    if (labels_->size() != logits_.rows()) {
      throw DataError("label vector has " + std::to_string(labels_->size()) +
                      " entries for " + std::to_string(logits_.rows()) +
                      " samples");
    }
    for (std::size_t i = 0; i < labels_->size(); ++i) {
      if ((*labels_)[i] >= logits_.cols()) {
        throw DataError("label " + std::to_string((*labels_)[i]) +
                        " at sample " + std::to_string(i) +
                        " is outside [0, " + std::to_string(logits_.cols()) +
                        ")");
      }
    }
  }
}

std::span<const ClassId> LogitDataset::require_labels() const {
  if (!labels_) {
    throw UsageError("this operation needs labelled data");
  }
  return *labels_;
}

LogitDataset LogitDataset::without_labels() const {
  return LogitDataset(logits_, std::nullopt);
}

LogitDataset LogitDataset::select(std::span<const std::size_t> indices) const {
  const std::size_t k = n_classes();
  std::vector<double> values;
  values.reserve(indices.size() * k);
  std::optional<std::vector<ClassId>> labels;
  if (labels_) {
    labels.emplace();
    labels->reserve(indices.size());
  }
  for (std::size_t idx : indices) {
    if (idx >= n_samples()) {
      throw DataError("sample index " + std::to_string(idx) + " out of range");
    }
    auto r = logits_.row(idx);
    values.insert(values.end(), r.begin(), r.end());
    if (labels) labels->push_back((*labels_)[idx]);
  }
  return LogitDataset(Matrix(indices.size(), k, std::move(values)),
                      std::move(labels));
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kTs:
      return "TS";
    case Method::kUts:
      return "UTS";
    case Method::kFixed:
      return "Fixed";
  }
  return "Fixed";
}

Method method_from_string(std::string_view name) {
  if (name == "TS") return Method::kTs;
  if (name == "UTS") return Method::kUts;
  if (name == "Fixed") return Method::kFixed;
  throw DataError("unknown temperature method '" + std::string(name) + "'");
}

Temperature Temperature::fixed(double value) {
  Temperature t{value, Method::kFixed, 0.0, 0};
  t.validate();
  return t;
}

void Temperature::validate() const {
  if (!std::isfinite(value) || value <= 0.0) {
    throw DomainError("temperature must be finite and > 0, got " +
                      std::to_string(value));
  }
  if (!std::isfinite(loss_at_optimum)) {
    throw DomainError("temperature loss at optimum is not finite");
  }
}

std::size_t argmax(std::span<const double> row) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < row.size(); ++j) {
    if (row[j] > row[best]) best = j;
  }
  return best;
}

namespace {

void check_temperature(double temperature) {
  if (!std::isfinite(temperature) || temperature <= 0.0) {
    throw DomainError("temperature must be finite and > 0, got " +
                      std::to_string(temperature));
  }
}

}  // namespace

double tempered_log_normalizer(std::span<const double> row, double temperature) {
  double m = row[0] / temperature;
  for (double h : row) m = std::max(m, h / temperature);
  double sum = 0.0;
  for (double h : row) sum += std::exp(h / temperature - m);
  return m + std::log(sum);
}

double tempered_log_softmax(std::span<const double> row, double temperature,
                            ClassId k) {
  return row[k] / temperature - tempered_log_normalizer(row, temperature);
}

ConfidenceMatrix tempered_softmax(const Matrix& logits, double temperature) {
  check_temperature(temperature);
  ConfidenceMatrix out{Matrix(logits.rows(), logits.cols()), temperature};
  for (std::size_t i = 0; i < logits.rows(); ++i) {
    auto in = logits.row(i);
    auto p = out.probs.row(i);
    double m = -INFINITY;
    for (std::size_t j = 0; j < in.size(); ++j) {
      if (!std::isfinite(in[j])) {
        throw DataError("non-finite logit at sample " + std::to_string(i) +
                        ", class " + std::to_string(j));
      }
      p[j] = in[j] / temperature;
      m = std::max(m, p[j]);
    }
    double sum = 0.0;
    for (double& v : p) {
      v = std::exp(v - m);
      sum += v;
    }
    for (double& v : p) v /= sum;
  }
  return out;
}

ConfidenceMatrix tempered_softmax(const LogitDataset& data, double temperature) {
  return tempered_softmax(data.logits(), temperature);
}

ConfidenceMatrix tempered_softmax(const LogitDataset& data,
                                  const Temperature& temperature) {
  return tempered_softmax(data.logits(), temperature.value);
}

std::vector<Prediction> predict(const ConfidenceMatrix& probs) {
  std::vector<Prediction> out;
  out.reserve(probs.n_samples());
  for (std::size_t i = 0; i < probs.n_samples(); ++i) {
    auto row = probs.probs.row(i);
    const std::size_t k = argmax(row);
    out.push_back({k, row[k]});
  }
  return out;
}

}  // namespace tempcal
