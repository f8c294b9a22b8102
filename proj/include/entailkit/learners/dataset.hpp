#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "entailkit/error.hpp"
#include "entailkit/label.hpp"

namespace entailkit {

// Dense row-major matrix of 64-bit reals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(std::span<const double> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_)
      throw DimensionError("row has " + std::to_string(values.size()) +
                           " columns, matrix has " + std::to_string(cols_));
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  const std::vector<double>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct Dataset {
  Matrix features;
  std::vector<EntailmentLabel> labels;
  std::vector<std::string> schema;

  std::size_t size() const noexcept { return labels.size(); }
  std::size_t dim() const noexcept { return features.cols(); }
};

// N > 0, D > 0, one label per row, every value finite.
inline void validate(const Dataset& ds) {
  if (ds.features.rows() == 0 || ds.features.cols() == 0)
    throw Error("dataset is empty");
  if (ds.features.rows() != ds.labels.size())
    throw Error("dataset has " + std::to_string(ds.features.rows()) + " rows but " +
                std::to_string(ds.labels.size()) + " labels");
  if (!ds.schema.empty() && ds.schema.size() != ds.features.cols())
    throw Error("dataset schema does not match the feature width");
  for (double v : ds.features.data())
    if (!std::isfinite(v)) throw Error("dataset contains a non-finite feature value");
}

inline void require_dim(std::size_t expected, std::size_t got) {
  if (expected != got)
    throw DimensionError("feature vector has " + std::to_string(got) +
                         " values, model expects " + std::to_string(expected));
}

// Index of the largest score; ties go to the lowest index (label order).
inline std::size_t argmax_first(std::span<const double> scores) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i)
    if (scores[i] > scores[best]) best = i;
  return best;
}

}  // namespace entailkit
